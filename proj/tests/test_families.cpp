#include <doctest.h>

#include "regjump/families.hpp"

using namespace regjump;

TEST_CASE("jump family J") {
    CHECK_THROWS_AS(family_J(1), validation_error);
    for (int d = 2; d <= 6; ++d) {
        MonomialIdeal j = family_J(d);
        CHECK(j.generator_count() == static_cast<std::size_t>(d) + 5);
        CHECK(j.generated_in_single_degree());
        CHECK(j.max_generator_degree() == d + 1);
        CHECK(j == family_J(d)); // deterministic canonical form
    }
    MonomialIdeal j2 = family_J(2);
    ContextPtr ctx = j2.context();
    CHECK(ctx->names() == std::vector<std::string>{"x1", "x2", "z1", "z2"});
    std::vector<Monomial> expected = {
        Monomial(ctx, {1, 0, 2, 0}), Monomial(ctx, {1, 0, 0, 2}), Monomial(ctx, {0, 1, 1, 1}),
        Monomial(ctx, {0, 0, 3, 0}), Monomial(ctx, {0, 0, 2, 1}), Monomial(ctx, {0, 0, 1, 2}),
        Monomial(ctx, {0, 0, 0, 3}),
    };
    std::sort(expected.begin(), expected.end(), LexDescending{});
    CHECK(j2.generators() == expected);
}

TEST_CASE("family H") {
    CHECK(family_H(2).generator_count() == 5);
    MonomialIdeal h3 = family_H(3);
    CHECK(h3.generator_count() == 6);
    CHECK(h3.generated_in_single_degree());
    CHECK(h3.max_generator_degree() == 4);
    // H(d) is contained in J(d)
    for (int d : {2, 3, 4}) {
        MonomialIdeal j = family_J(d);
        MonomialIdeal h = family_H(d);
        for (const Monomial& g : h.generators())
            CHECK(j.contains(g));
    }
}

TEST_CASE("family Sq") {
    MonomialIdeal sq2 = family_Sq(2);
    CHECK(sq2.context()->size() == 6);
    CHECK(sq2.generator_count() == 8);
    for (const Monomial& g : sq2.generators()) {
        CHECK(g.is_squarefree());
        CHECK(g.degree() == 3);
    }
    MonomialIdeal sq3 = family_Sq(3);
    CHECK(sq3.generator_count() == 6 + 20); // 2d mixed + C(2d, 3) cubics
    for (const Monomial& g : sq3.generators())
        CHECK(g.degree() == 3);
}

TEST_CASE("family multijump") {
    CHECK_THROWS_AS(family_multijump(1, 3), validation_error);
    CHECK_THROWS_AS(family_multijump(3, 3), validation_error);
    MultijumpConstruction mj = family_multijump_detailed(2, 3);
    CHECK(mj.duplicate_mixed_generator);
    CHECK(mj.ideal.generator_count() == 8);
    CHECK(mj.ideal.generated_in_single_degree());
    CHECK(mj.ideal.max_generator_degree() == 4);
    CHECK(mj.ideal.context()->names() ==
          std::vector<std::string>{"x", "y1", "y2", "z1", "z2"});
    CHECK(family_multijump(2, 4).max_generator_degree() == 5);
}

TEST_CASE("classical example ideals") {
    MonomialIdeal terai = example_terai();
    CHECK(terai.context()->size() == 6);
    CHECK(terai.generator_count() == 10);
    for (const Monomial& g : terai.generators()) {
        CHECK(g.is_squarefree());
        CHECK(g.degree() == 3);
    }
    MonomialIdeal ch = example_conca_herzog();
    CHECK(ch.context()->size() == 4);
    CHECK(ch.generator_count() == 5);
    CHECK(ch.generated_in_single_degree());
    MonomialIdeal st = example_sturmfels();
    CHECK(st.generator_count() == 8);
    for (const Monomial& g : st.generators())
        CHECK(g.is_squarefree());

    // the listed orders expose the classical generator sequences
    OrderedGenerators listed = example_conca_herzog_listed();
    CHECK(listed.order.front().str() == "a^2*b");
    CHECK(listed.order.back().str() == "a*c*d");
    CHECK(example_sturmfels_listed().order.front().str() == "d*e*f");
}

TEST_CASE("H(2) specializes to the conca-herzog ideal") {
    // x1 -> b, x2 -> d, z1 -> a, z2 -> c as an index bijection.
    VariableBijection map = {1, 3, 0, 2};
    auto witness = iso_under_renaming(family_H(2), example_conca_herzog(), map);
    CHECK(witness);
    // and the search finds it without the hint
    CHECK(iso_under_renaming(family_H(2), example_conca_herzog()));
}

TEST_CASE("Sq(2) specializes to the sturmfels ideal") {
    auto witness = iso_under_renaming(family_Sq(2), example_sturmfels());
    REQUIRE(witness);
    // symmetric: the inverse map witnesses the other direction
    VariableBijection inverse(witness->size());
    for (std::size_t i = 0; i < witness->size(); ++i)
        inverse[(*witness)[i]] = i;
    CHECK(iso_under_renaming(example_sturmfels(), family_Sq(2), inverse));
}

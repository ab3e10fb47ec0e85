#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "regjump/families.hpp"
#include "regjump/ideal.hpp"
#include "test_util.hpp"

using namespace regjump;

namespace {

Monomial mono(const ContextPtr& ctx, std::vector<Exponent> exps) {
    return Monomial(ctx, std::move(exps));
}

/// Test-local minimalization by direct divisibility filtering.
std::vector<std::vector<Exponent>> brute_minimalize(std::vector<std::vector<Exponent>> vecs) {
    std::sort(vecs.begin(), vecs.end());
    vecs.erase(std::unique(vecs.begin(), vecs.end()), vecs.end());
    auto divides = [](const std::vector<Exponent>& a, const std::vector<Exponent>& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i])
                return false;
        return true;
    };
    std::vector<std::vector<Exponent>> kept;
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < vecs.size() && !redundant; ++j)
            if (i != j && divides(vecs[j], vecs[i]))
                redundant = true;
        if (!redundant)
            kept.push_back(vecs[i]);
    }
    return kept;
}

} // namespace

TEST_CASE("variable context validation") {
    CHECK_THROWS_AS(make_context(std::vector<std::string>{}), validation_error);
    CHECK_THROWS_AS(make_context({"x", "x"}), validation_error);
    CHECK_THROWS_AS(make_context({"x", ""}), validation_error);
    ContextPtr ctx = make_context({"x", "y"});
    CHECK(ctx->size() == 2);
    CHECK(ctx->index_of("y") == 1);
    CHECK(!ctx->index_of("z"));
}

TEST_CASE("monomial arithmetic") {
    ContextPtr ctx = make_context({"x", "y", "z"});
    Monomial a = mono(ctx, {2, 1, 0});
    Monomial b = mono(ctx, {1, 0, 3});
    CHECK(a.degree() == 3);
    CHECK((a * b).exponents() == std::vector<Exponent>{3, 1, 3});
    CHECK(lcm(a, b).exponents() == std::vector<Exponent>{2, 1, 3});
    CHECK(gcd(a, b).exponents() == std::vector<Exponent>{1, 0, 0});
    CHECK(a.colon_by(b).exponents() == std::vector<Exponent>{1, 1, 0});
    CHECK(mono(ctx, {1, 0, 0}).divides(a));
    CHECK(!a.divides(b));
    CHECK(Monomial::one(ctx).is_one());
    CHECK(a.str() == "x^2*y");
    CHECK(Monomial::one(ctx).str() == "1");
    // lex: x > y > z, compare by first differing exponent
    CHECK(a.lex_compare(b) > 0);
    CHECK(mono(ctx, {0, 0, 1}).lex_compare(mono(ctx, {0, 1, 0})) < 0);
    CHECK_THROWS_AS(b / a, validation_error);
    CHECK_THROWS_AS(mono(ctx, {2, 0, 0}).pow(2000000000), exponent_overflow_error);
    ContextPtr other = make_context({"x", "y"});
    CHECK_THROWS_AS((void)a.divides(mono(other, {1, 0})), context_mismatch_error);
}

TEST_CASE("minimal_generators drops divisible monomials") {
    ContextPtr ctx = make_context({"a", "b", "c"});
    // {a^2 b, a^2 b c} -> {a^2 b}
    MonomialIdeal ideal =
        MonomialIdeal::minimal_generators({mono(ctx, {2, 1, 0}), mono(ctx, {2, 1, 1})});
    REQUIRE(ideal.generator_count() == 1);
    CHECK(ideal.generators()[0] == mono(ctx, {2, 1, 0}));
    // idempotent
    CHECK(MonomialIdeal::minimal_generators(ideal.generators()) == ideal);
}

TEST_CASE("minimal_generators keeps incomparable generators") {
    CHECK(example_terai().generator_count() == 10);
    CHECK(family_J(2).generator_count() == 7);
}

TEST_CASE("minimal_generators rejects bad input") {
    ContextPtr ctx = make_context({"x"});
    CHECK_THROWS_AS(MonomialIdeal::minimal_generators({}), validation_error);
    CHECK_THROWS_AS(MonomialIdeal::minimal_generators({Monomial::one(ctx)}), validation_error);
    ContextPtr other = make_context({"y"});
    CHECK_THROWS_AS(
        MonomialIdeal::minimal_generators({mono(ctx, {1}), Monomial::variable(other, 0)}),
        context_mismatch_error);
}

TEST_CASE("unit and zero ideals are rejected by analytic operations") {
    ContextPtr ctx = make_context({"x", "y"});
    MonomialIdeal unit = MonomialIdeal::unit(ctx);
    MonomialIdeal zero = MonomialIdeal::zero(ctx);
    CHECK(unit.is_unit());
    CHECK(zero.is_zero());
    CHECK_THROWS_AS(power(unit, 2), validation_error);
    CHECK_THROWS_AS(multiply(zero, zero), validation_error);
    CHECK_THROWS_AS(lcm_lattice(unit), validation_error);
}

TEST_CASE("multiply basics") {
    ContextPtr ctx = make_context({"x"});
    MonomialIdeal x = MonomialIdeal::minimal_generators({mono(ctx, {1})});
    CHECK(multiply(x, x).generators() == std::vector<Monomial>{mono(ctx, {2})});

    ContextPtr z = make_context({"z1", "z2"});
    MonomialIdeal mz =
        MonomialIdeal::minimal_generators({mono(z, {1, 0}), mono(z, {0, 1})});
    MonomialIdeal sq = multiply(mz, mz);
    CHECK(sq.generator_count() == 3);
    CHECK(sq.generators() ==
          std::vector<Monomial>{mono(z, {2, 0}), mono(z, {1, 1}), mono(z, {0, 2})});

    ContextPtr abcd = make_context({"a", "b", "c", "d"});
    MonomialIdeal lhs = MonomialIdeal::minimal_generators(
        {mono(abcd, {2, 1, 0, 0}), mono(abcd, {1, 0, 1, 1})});
    MonomialIdeal rhs = MonomialIdeal::minimal_generators({mono(abcd, {2, 1, 0, 0})});
    MonomialIdeal prod = multiply(lhs, rhs);
    CHECK(prod.generator_count() == 2);
    CHECK(prod.contains(mono(abcd, {4, 2, 0, 0})));
    CHECK(prod.contains(mono(abcd, {3, 1, 1, 1})));
    CHECK(multiply(lhs, rhs) == multiply(rhs, lhs));
}

TEST_CASE("power basics and errors") {
    ContextPtr ctx = make_context({"x"});
    MonomialIdeal x = MonomialIdeal::minimal_generators({mono(ctx, {1})});
    CHECK(power(x, 3).generators() == std::vector<Monomial>{mono(ctx, {3})});
    CHECK(power(x, 1) == x);
    CHECK_THROWS_AS(power(x, 0), validation_error);

    ContextPtr z = make_context({"z1", "z2"});
    MonomialIdeal mz =
        MonomialIdeal::minimal_generators({mono(z, {1, 0}), mono(z, {0, 1})});
    CHECK(power(power(mz, 3), 2) == power(mz, 6));
    CHECK(power(mz, 6).generator_count() == 7);

    MonomialIdeal big = MonomialIdeal::minimal_generators({mono(ctx, {1 << 30})});
    CHECK_THROWS_AS(power(big, 4), exponent_overflow_error);
}

TEST_CASE("generator count of J(2)^2 against brute force") {
    MonomialIdeal j2 = family_J(2);
    REQUIRE(j2.generator_count() == 7);
    // Independent oracle: all 28 unordered pairwise products on raw
    // exponent vectors, then test-local minimalization.
    std::vector<std::vector<Exponent>> products;
    const auto& gens = j2.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i; j < gens.size(); ++j) {
            std::vector<Exponent> sum(gens[i].exponents());
            for (std::size_t v = 0; v < sum.size(); ++v)
                sum[v] += gens[j].exponents()[v];
            products.push_back(std::move(sum));
        }
    CHECK(products.size() == 28);
    std::vector<std::vector<Exponent>> minimal = brute_minimalize(std::move(products));
    MonomialIdeal square = power(j2, 2);
    CHECK(square.generator_count() == minimal.size());
    CHECK(square.generator_count() == 23);
}

TEST_CASE("colon basics") {
    ContextPtr ctx = make_context({"a", "b"});
    MonomialIdeal a2b = MonomialIdeal::minimal_generators({mono(ctx, {2, 1})});
    MonomialIdeal quotient = colon(a2b, mono(ctx, {1, 1}));
    CHECK(quotient.generators() == std::vector<Monomial>{mono(ctx, {1, 0})});

    ContextPtr z = make_context({"z1", "z2"});
    MonomialIdeal mz =
        MonomialIdeal::minimal_generators({mono(z, {1, 0}), mono(z, {0, 1})});
    CHECK(colon(power(mz, 3), mono(z, {1, 1})) == mz);

    // colon by a generator multiple reaches the unit ideal
    CHECK(colon(a2b, mono(ctx, {2, 1})).is_unit());
}

TEST_CASE("colon of the punctured square of J(2) by the dropped generator") {
    // u = (z1 z2 x2)^2; V = the other minimal generators of J(2)^2.
    MonomialIdeal square = power(family_J(2), 2);
    ContextPtr ctx = square.context();
    Monomial u = mono(ctx, {0, 2, 2, 2});
    std::vector<Monomial> rest;
    for (const Monomial& g : square.generators())
        if (g != u)
            rest.push_back(g);
    REQUIRE(rest.size() == square.generator_count() - 1);
    MonomialIdeal quotient = colon(MonomialIdeal::minimal_generators(rest), u);
    Monomial x1sq = mono(ctx, {2, 0, 0, 0});
    CHECK(quotient.contains(x1sq));
    CHECK(std::find(quotient.generators().begin(), quotient.generators().end(), x1sq) !=
          quotient.generators().end());
    CHECK(!quotient.contains(mono(ctx, {1, 0, 0, 0})));
}

TEST_CASE("lcm lattice basics") {
    ContextPtr ctx = make_context({"x1", "x2"});
    MonomialIdeal ideal =
        MonomialIdeal::minimal_generators({mono(ctx, {1, 0}), mono(ctx, {0, 1})});
    LcmLattice lattice = lcm_lattice(ideal);
    CHECK(lattice.size() == 3);
    CHECK(lattice.contains(mono(ctx, {1, 1})));

    ContextPtr one = make_context({"x"});
    CHECK(lcm_lattice(MonomialIdeal::minimal_generators({mono(one, {2})})).size() == 1);
}

TEST_CASE("terai lattice is squarefree with degrees 3..6") {
    MonomialIdeal terai = example_terai();
    // Brute-force closure on raw exponent vectors.
    std::set<std::vector<Exponent>> closure;
    for (const Monomial& g : terai.generators())
        closure.insert(g.exponents());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<Exponent>> snapshot(closure.begin(), closure.end());
        for (const auto& a : snapshot)
            for (const auto& b : snapshot) {
                std::vector<Exponent> join(a.size());
                for (std::size_t i = 0; i < a.size(); ++i)
                    join[i] = std::max(a[i], b[i]);
                grew = closure.insert(join).second || grew;
            }
    }
    LcmLattice lattice = lcm_lattice(terai);
    CHECK(lattice.size() == closure.size());
    for (const Monomial& m : lattice.elements()) {
        CHECK(closure.count(m.exponents()) == 1);
        CHECK(m.is_squarefree());
        CHECK(m.degree() >= 3);
        CHECK(m.degree() <= 6);
    }
}

TEST_CASE("iso_under_renaming with and without a given map") {
    ContextPtr ctx = make_context({"x1", "x2"});
    MonomialIdeal vars =
        MonomialIdeal::minimal_generators({mono(ctx, {1, 0}), mono(ctx, {0, 1})});
    MonomialIdeal prod = MonomialIdeal::minimal_generators({mono(ctx, {1, 1})});
    CHECK(!iso_under_renaming(vars, prod));

    MonomialIdeal swapped =
        MonomialIdeal::minimal_generators({mono(ctx, {0, 1}), mono(ctx, {1, 0})});
    auto witness = iso_under_renaming(vars, swapped);
    REQUIRE(witness);

    // symmetric: the inverse bijection witnesses the other direction
    VariableBijection inverse(witness->size());
    for (std::size_t i = 0; i < witness->size(); ++i)
        inverse[(*witness)[i]] = i;
    CHECK(iso_under_renaming(swapped, vars, inverse));

    // a map that does not send generators onto generators is rejected
    ContextPtr abcd = make_context({"a", "b", "c", "d"});
    MonomialIdeal lhs =
        MonomialIdeal::minimal_generators({mono(abcd, {2, 1, 0, 0}), mono(abcd, {0, 0, 1, 1})});
    MonomialIdeal rhs =
        MonomialIdeal::minimal_generators({mono(abcd, {1, 2, 0, 0}), mono(abcd, {0, 0, 1, 1})});
    CHECK(!iso_under_renaming(lhs, rhs, VariableBijection{0, 1, 2, 3}));
    CHECK(iso_under_renaming(lhs, rhs, VariableBijection{1, 0, 2, 3}));
    CHECK_THROWS_AS(iso_under_renaming(lhs, rhs, VariableBijection{0, 0, 2, 3}),
                    validation_error);
}

TEST_CASE("hilbert numerator examples") {
    ContextPtr ctx = make_context({"x1", "x2"});
    MonomialIdeal vars =
        MonomialIdeal::minimal_generators({mono(ctx, {1, 0}), mono(ctx, {0, 1})});
    CHECK(hilbert_numerator(vars) == std::vector<long long>{1, -2, 1});

    ContextPtr one = make_context({"x"});
    MonomialIdeal xsq = MonomialIdeal::minimal_generators({mono(one, {2})});
    CHECK(hilbert_numerator(xsq) == std::vector<long long>{1, 0, -1});
}

TEST_CASE("terai hilbert numerator against inclusion-exclusion") {
    MonomialIdeal terai = example_terai();
    const auto& gens = terai.generators();
    std::map<long long, long long> coeffs;
    for (std::uint32_t sub = 0; sub < (1u << gens.size()); ++sub) {
        std::vector<Exponent> join(terai.context()->size(), 0);
        int sign = 1;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (sub >> i & 1) {
                sign = -sign;
                for (std::size_t v = 0; v < join.size(); ++v)
                    join[v] = std::max(join[v], gens[i].exponents()[v]);
            }
        long long degree = 0;
        for (Exponent e : join)
            degree += e;
        coeffs[degree] += sign;
    }
    std::vector<long long> expected(coeffs.rbegin()->first + 1, 0);
    for (auto& [deg, c] : coeffs)
        expected[deg] = c;
    while (expected.size() > 1 && expected.back() == 0)
        expected.pop_back();
    CHECK(hilbert_numerator(terai) == expected);
}

TEST_CASE("the two hilbert numerator routes agree") {
    std::mt19937 rng(60047);
    for (int trial = 0; trial < 40; ++trial) {
        MonomialIdeal ideal = testutil::random_ideal(rng, 6, 5, 3);
        CHECK(detail::hilbert_numerator_inclusion_exclusion(ideal) ==
              detail::hilbert_numerator_moebius(ideal));
    }
    for (const MonomialIdeal& ideal : {example_terai(), family_J(2), family_H(3)}) {
        auto subsets = detail::hilbert_numerator_inclusion_exclusion(ideal);
        auto moebius = detail::hilbert_numerator_moebius(ideal);
        CHECK(subsets == moebius);
        CHECK(hilbert_numerator(ideal) == subsets);
    }
}

TEST_CASE("randomized algebra properties") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        MonomialIdeal ideal = testutil::random_ideal(rng, 6, 5, 3);
        // minimalization is idempotent
        CHECK(MonomialIdeal::minimal_generators(ideal.generators()) == ideal);

        // power multiplicativity
        std::uniform_int_distribution<int> small(1, 4);
        int j = small(rng), k = small(rng);
        CHECK(power(ideal, j + k) == multiply(power(ideal, j), power(ideal, k)));

        // t_0(I^k) <= k t_0(I), equality when generated in one degree
        MonomialIdeal pk = power(ideal, k);
        CHECK(pk.max_generator_degree() <= k * ideal.max_generator_degree());
        if (ideal.generated_in_single_degree())
            CHECK(pk.max_generator_degree() == k * ideal.max_generator_degree());

        // colon contains the ideal
        std::uniform_int_distribution<std::size_t> pick(0, ideal.generator_count() - 1);
        Monomial u = ideal.generators()[pick(rng)];
        MonomialIdeal quotient = colon(ideal, u);
        for (const Monomial& g : ideal.generators())
            CHECK(quotient.contains(g));

        // lattice closed under pairwise joins
        LcmLattice lattice = lcm_lattice(ideal);
        for (const Monomial& a : lattice.elements())
            for (const Monomial& b : lattice.elements())
                CHECK(lattice.contains(lcm(a, b)));
    }
}

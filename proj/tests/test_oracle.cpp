#include <doctest.h>

#include <map>

#include "regjump/families.hpp"
#include "regjump/taylor.hpp"
#include "test_util.hpp"

using namespace regjump;

namespace {

Monomial mono(const ContextPtr& ctx, std::vector<Exponent> exps) {
    return Monomial(ctx, std::move(exps));
}

} // namespace

TEST_CASE("taylor oracle on the koszul complex") {
    ContextPtr ctx = make_context({"x1", "x2"});
    MonomialIdeal vars =
        MonomialIdeal::minimal_generators({mono(ctx, {1, 0}), mono(ctx, {0, 1})});
    BettiTable oracle = taylor_betti_oracle(vars, FieldSpec::rationals());
    CHECK(oracle.entry(0, 1) == 2);
    CHECK(oracle.entry(1, 2) == 1);
    CHECK(oracle == betti_table(vars, FieldSpec::rationals()));
}

TEST_CASE("taylor oracle agrees on the classical examples") {
    for (auto field : {FieldSpec::rationals(), FieldSpec::prime_field(2)}) {
        CHECK(taylor_betti_oracle(example_conca_herzog(), field) ==
              betti_table(example_conca_herzog(), field));
        CHECK(taylor_betti_oracle(example_sturmfels(), field) ==
              betti_table(example_sturmfels(), field));
        CHECK(taylor_betti_oracle(example_terai(), field) ==
              betti_table(example_terai(), field));
    }
}

TEST_CASE("taylor oracle sparse reduction agrees with dense strands") {
    // dense_cell_cap = 0 pushes every strand through the cancellation
    // machinery; the default uses dense ranks for small strands.
    for (auto field : {FieldSpec::rationals(), FieldSpec::prime_field(2)}) {
        for (const MonomialIdeal& ideal :
             {example_conca_herzog(), family_J(2), family_H(3)}) {
            BettiTable sparse = detail::taylor_betti_oracle_impl(ideal, field, 0);
            BettiTable dense = detail::taylor_betti_oracle_impl(ideal, field, 1u << 20);
            CHECK(sparse == dense);
            CHECK(sparse == betti_table(ideal, field));
        }
    }
}

TEST_CASE("taylor oracle on a randomized suite") {
    std::mt19937 rng(5150);
    FieldSpec fields[] = {FieldSpec::rationals(), FieldSpec::prime_field(2)};
    for (int trial = 0; trial < 40; ++trial) {
        MonomialIdeal ideal = testutil::random_ideal(rng, 6, 5, 3);
        BettiTable tables[2] = {betti_table(ideal, fields[0]), betti_table(ideal, fields[1])};
        for (int f = 0; f < 2; ++f) {
            BettiTable oracle = taylor_betti_oracle(ideal, fields[f]);
            CHECK(oracle == tables[f]);
            CHECK(euler_check(ideal, fields[f]));
        }
        // first syzygies do not depend on the characteristic
        for (int i = 0; i <= 1; ++i) {
            auto row = [&](const BettiTable& t) {
                std::map<long long, long long> r;
                for (const auto& [key, dim] : t.entries())
                    if (key.first == i)
                        r[key.second] = dim;
                return r;
            };
            CHECK(row(tables[0]) == row(tables[1]));
        }
    }
}

TEST_CASE("taylor oracle size guard") {
    ContextPtr ctx = testutil::context_of_size(8);
    std::vector<Monomial> gens;
    for (int g = 0; g < 25; ++g) {
        std::vector<Exponent> exps(8, 0);
        exps[g % 8] = static_cast<Exponent>(1 + g);
        exps[(g + 3) % 8] = static_cast<Exponent>(50 - g);
        gens.emplace_back(ctx, std::move(exps));
    }
    MonomialIdeal ideal = MonomialIdeal::minimal_generators(gens);
    REQUIRE(ideal.generator_count() == 25);
    CHECK_THROWS_AS(taylor_betti_oracle(ideal, FieldSpec::rationals()), size_error);
}

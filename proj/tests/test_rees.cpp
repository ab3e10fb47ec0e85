#include <doctest.h>

#include <set>

#include "regjump/families.hpp"
#include "regjump/rees.hpp"

using namespace regjump;

namespace {

/// Independent membership check: multiply raw exponent vectors and
/// compare, without going through the Monomial operators under test.
bool kernel_member(const PseudoLinearInstance& inst, const Monomial& M,
                   const std::vector<int>& A, const Monomial& N, const std::vector<int>& B) {
    std::size_t n = inst.z_context->size();
    std::vector<long long> left(n, 0), right(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        left[v] = M.exponent(v);
        right[v] = N.exponent(v);
    }
    for (std::size_t i = 0; i < inst.m.size(); ++i)
        for (std::size_t v = 0; v < n; ++v) {
            left[v] += static_cast<long long>(A[i]) * inst.m[i].exponent(v);
            right[v] += static_cast<long long>(B[i]) * inst.m[i].exponent(v);
        }
    return left == right;
}

} // namespace

TEST_CASE("instance validation") {
    ContextPtr z = make_context({"z1", "z2"});
    ContextPtr x = make_context({"x1"});
    CHECK_THROWS_AS(make_pseudo_linear_instance(z, x, {}, {}, 1), validation_error);
    CHECK_THROWS_AS(
        make_pseudo_linear_instance(z, x, {Monomial(z, {2, 0}), Monomial(z, {1, 0})}, {0, 0}, 1),
        validation_error);
    CHECK_THROWS_AS(
        make_pseudo_linear_instance(z, x, {Monomial(z, {2, 0})}, {1}, 1), validation_error);
    CHECK_THROWS_AS(jump_instance(1, 1), validation_error);
}

TEST_CASE("bidegree (0, 1) binomials require equal monomials") {
    PseudoLinearInstance inst = jump_instance(2, 1);
    CHECK(enumerate_fiber_binomials(inst, 1, 1).empty());
    CHECK_THROWS_AS(enumerate_fiber_binomials(inst, 2, 1), validation_error); // beyond p
}

TEST_CASE("single-monomial instances have no fiber binomials") {
    ContextPtr z = make_context({"z1", "z2"});
    ContextPtr x = make_context({"x1"});
    PseudoLinearInstance inst =
        make_pseudo_linear_instance(z, x, {Monomial(z, {1, 1})}, {0}, 3);
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= a; ++b)
            CHECK(enumerate_fiber_binomials(inst, a, b).empty());
}

TEST_CASE("bidegree (3, 1) binomials of the d=2 instance against brute force") {
    PseudoLinearInstance inst = jump_instance(2, 2);
    std::vector<FiberBinomial> enumerated = enumerate_fiber_binomials(inst, 2, 1);

    // Independent quadruple enumeration: all pairs of degree-3 z-monomials
    // against all oriented singleton pairs.
    std::set<std::vector<long long>> expected;
    std::vector<std::vector<int>> singletons = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    std::vector<Monomial> degree3;
    for (int e = 3; e >= 0; --e)
        degree3.push_back(Monomial(inst.z_context, {static_cast<Exponent>(e),
                                                    static_cast<Exponent>(3 - e)}));
    for (const auto& A : singletons)
        for (const auto& B : singletons) {
            Monomial xA = inst.phi_x(A), xB = inst.phi_x(B);
            if (xA.lex_compare(xB) <= 0)
                continue;
            for (const Monomial& M : degree3)
                for (const Monomial& N : degree3)
                    if (kernel_member(inst, M, A, N, B)) {
                        std::vector<long long> key;
                        for (Exponent e : M.exponents())
                            key.push_back(e);
                        for (Exponent e : N.exponents())
                            key.push_back(e);
                        for (int e : A)
                            key.push_back(e);
                        for (int e : B)
                            key.push_back(e);
                        expected.insert(key);
                    }
        }
    CHECK(expected.size() == 6);

    std::set<std::vector<long long>> got;
    for (const FiberBinomial& fb : enumerated) {
        CHECK(kernel_member(inst, fb.M, fb.A, fb.N, fb.B)); // membership soundness
        CHECK(fb.M.degree() == 3);
        CHECK(fb.N.degree() == 3);
        std::vector<long long> key;
        for (Exponent e : fb.M.exponents())
            key.push_back(e);
        for (Exponent e : fb.N.exponents())
            key.push_back(e);
        for (int e : fb.A)
            key.push_back(e);
        for (int e : fb.B)
            key.push_back(e);
        got.insert(key);
    }
    CHECK(got == expected);
    CHECK(got.size() == enumerated.size()); // no duplicates
}

TEST_CASE("witnesses for the explicit fiber relations") {
    PseudoLinearInstance inst = jump_instance(2, 2);
    // A = t1, B = t3, N = z1^3: settled by z2 t1 - z1 t3.
    FiberBinomial via_first{Monomial(inst.z_context, {2, 1}), Monomial(inst.z_context, {3, 0}),
                            {1, 0, 0}, {0, 0, 1}, 2, 1};
    REQUIRE(kernel_member(inst, via_first.M, via_first.A, via_first.N, via_first.B));
    auto w1 = witness_exists(inst, via_first);
    REQUIRE(w1);
    CHECK(w1->i == 0);
    CHECK(w1->j == 2);
    CHECK(w1->N1 == Monomial(inst.z_context, {1, 0})); // z1
    CHECK(w1->M1 == Monomial(inst.z_context, {0, 1})); // z2

    // A = t2, B = t3, N = z2^3: settled by z1^(d-1) t2 - z2^(d-1) t3.
    FiberBinomial via_second{Monomial(inst.z_context, {1, 2}), Monomial(inst.z_context, {0, 3}),
                             {0, 1, 0}, {0, 0, 1}, 2, 1};
    REQUIRE(kernel_member(inst, via_second.M, via_second.A, via_second.N, via_second.B));
    auto w2 = witness_exists(inst, via_second);
    REQUIRE(w2);
    CHECK(w2->i == 1);
    CHECK(w2->j == 2);
    CHECK(w2->N1 == Monomial(inst.z_context, {0, 1})); // z2^(d-1) with d = 2
    CHECK(w2->M1 == Monomial(inst.z_context, {1, 0})); // z1^(d-1)

    // phi(t_i) must divide phi(A)/gcd: impossible when phi(A) = phi(B).
    FiberBinomial hopeless{Monomial::one(inst.z_context), Monomial::one(inst.z_context),
                           {1, 0, 0}, {0, 1, 0}, 1, 1};
    CHECK(!witness_exists(inst, hopeless));
}

TEST_CASE("witness soundness across a full enumeration") {
    PseudoLinearInstance inst = jump_instance(3, 2);
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= a; ++b)
            for (const FiberBinomial& fb : enumerate_fiber_binomials(inst, a, b)) {
                auto w = witness_exists(inst, fb);
                REQUIRE(w);
                // (1) N1 | N
                CHECK(w->N1.divides(fb.N));
                // (2) t_i | A and t_j | B
                CHECK(fb.A[w->i] >= 1);
                CHECK(fb.B[w->j] >= 1);
                // (3) phi(t_i) | phi(A)/gcd(phi(A), phi(B))
                Monomial xA = inst.phi_x(fb.A), xB = inst.phi_x(fb.B);
                Monomial xi = Monomial::variable(inst.x_context, inst.phi[w->i]);
                CHECK(xi.divides(xA / gcd(xA, xB)));
                // (4) phi(t_i) > phi(t_j)
                Monomial xj = Monomial::variable(inst.x_context, inst.phi[w->j]);
                CHECK(xi.lex_compare(xj) > 0);
                // membership of the witness element itself
                CHECK(w->M1 * inst.m[w->i] == w->N1 * inst.m[w->j]);
            }
}

TEST_CASE("pseudo-linearity of the jump instances") {
    // order d-1 holds
    CHECK(verify_pseudo_linear(jump_instance(2, 1)).pseudo_linear);
    CHECK(verify_pseudo_linear(jump_instance(3, 2)).pseudo_linear);
    CHECK(verify_pseudo_linear(jump_instance(4, 3)).pseudo_linear);

    // order d fails with a concrete counterexample
    for (int d : {2, 3}) {
        PseudoLinearVerdict verdict = verify_pseudo_linear(jump_instance(d, d));
        CHECK(!verdict.pseudo_linear);
        REQUIRE(verdict.counterexample);
        CHECK(!witness_exists(jump_instance(d, d), *verdict.counterexample));
    }
}

TEST_CASE("the bidegree (0, d) cell carries exactly the cubic fiber relation") {
    // t1^(d-1) t2 and t3^d share the image z1^(d(d-1)) z2^d; nothing else
    // collides in that degree, and the relation has no witness.
    for (int d : {2, 3, 4}) {
        PseudoLinearInstance inst = jump_instance(d, d);
        std::vector<FiberBinomial> cell = enumerate_fiber_binomials(inst, d, d);
        REQUIRE(cell.size() == 1);
        std::vector<int> expect_a(3, 0), expect_b(3, 0);
        expect_a[0] = d - 1;
        expect_a[1] = 1;
        expect_b[2] = d;
        CHECK(cell[0].A == expect_a);
        CHECK(cell[0].B == expect_b);
        CHECK(cell[0].M.is_one());
        CHECK(cell[0].N.is_one());
        CHECK(!witness_exists(inst, cell[0]));

        PseudoLinearVerdict verdict = verify_pseudo_linear(inst);
        REQUIRE(verdict.counterexample);
        CHECK(verdict.counterexample->A == expect_a);
        CHECK(verdict.counterexample->B == expect_b);
    }
}

TEST_CASE("instance ideal matches the jump family") {
    for (int d : {2, 3, 4})
        CHECK(instance_ideal(jump_instance(d, 1)) == family_J(d));
}

TEST_CASE("pseudo-linearity feeds the block order construction") {
    for (int d : {2, 3}) {
        PseudoLinearInstance inst = jump_instance(d, d - 1);
        REQUIRE(verify_pseudo_linear(inst).pseudo_linear);
        for (int a = 1; a <= inst.p; ++a)
            CHECK(check_linear_quotients(family_J_block_order(d, a)).linear);
    }
}

TEST_CASE("syzygy certificates") {
    CHECK_THROWS_AS(syzygy_certificate(1), validation_error);

    SyzygyCertificate c2 = syzygy_certificate(2);
    CHECK(c2.holds);
    CHECK(c2.syzygy_degree == 8);
    CHECK(c2.regularity_lower_bound == 7);
    REQUIRE(c2.betti_first_syzygies);
    CHECK(*c2.betti_first_syzygies >= 1);

    SyzygyCertificate c3 = syzygy_certificate(3);
    CHECK(c3.holds);
    CHECK(c3.regularity_lower_bound == 14);
    REQUIRE(c3.betti_first_syzygies);
    CHECK(*c3.betti_first_syzygies >= 1);

    SyzygyCertificate c4 = syzygy_certificate(4, false); // combinatorial part only
    CHECK(c4.holds);
    CHECK(!c4.betti_first_syzygies);
}

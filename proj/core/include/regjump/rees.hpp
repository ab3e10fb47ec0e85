#ifndef REGJUMP_REES_HPP
#define REGJUMP_REES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "regjump/betti.hpp"
#include "regjump/ideal.hpp"

namespace regjump {

/// Data of a pseudo-linearity check: monomials m_1..m_k of one degree d
/// in the z variables, a map phi from the t-indices into the x variables,
/// and the order p to verify. The fiber relations are the binomials
/// M*A - N*B with M*Phi(A) = N*Phi(B), where Phi substitutes m_i for t_i.
struct PseudoLinearInstance {
    ContextPtr z_context;
    ContextPtr x_context;
    std::vector<Monomial> m;        // over z_context, all of degree d
    std::vector<std::size_t> phi;   // phi[i] indexes into x_context
    int p = 1;

    long long degree() const { return m.front().degree(); }
    std::size_t k() const { return m.size(); }

    /// Phi(A) = prod m_i^{A_i} as a z-monomial.
    Monomial phi_z(const std::vector<int>& t_exponents) const;
    /// phi(A) = prod phi(t_i)^{A_i} as an x-monomial.
    Monomial phi_x(const std::vector<int>& t_exponents) const;
};

PseudoLinearInstance make_pseudo_linear_instance(ContextPtr z_context, ContextPtr x_context,
                                                 std::vector<Monomial> m,
                                                 std::vector<std::size_t> phi, int p);

/// The degree-d instance with m = (z1^d, z2^d, z1^{d-1} z2) and
/// phi = (x1, x1, x2): the engine behind the J family.
PseudoLinearInstance jump_instance(int d, int p);

/// Fiber binomial M*A - N*B of bidegree ((a-b)(d+1), b) oriented so that
/// phi(A) > phi(B) in the lex order.
struct FiberBinomial {
    Monomial M, N;      // z-monomials of degree (a-b)(d+1)
    std::vector<int> A; // t-exponents, degree b
    std::vector<int> B;
    int a = 0, b = 0;
};

/// All fiber binomials of the given bidegree, enumerated by pairs (A, B)
/// in lex-descending t-exponent order and common multiples in
/// lex-descending z order. Exhaustive, including non-primitive binomials.
std::vector<FiberBinomial> enumerate_fiber_binomials(const PseudoLinearInstance& inst,
                                                     int a, int b);

/// Element M1*t_i - N1*t_j of the fiber kernel witnessing a binomial:
/// N1 | N, t_i | A, t_j | B, phi(t_i) | phi(A)/gcd(phi(A), phi(B)), and
/// phi(t_i) > phi(t_j).
struct PseudoLinearWitness {
    std::size_t i = 0, j = 0; // t-indices
    Monomial N1, M1;
};

/// First witness in deterministic order (i ascending, j ascending,
/// divisors N1 of N by lex-ascending exponent vector), or nullopt.
std::optional<PseudoLinearWitness> witness_exists(const PseudoLinearInstance& inst,
                                                  const FiberBinomial& fb);

struct PseudoLinearVerdict {
    bool pseudo_linear = false;
    std::optional<FiberBinomial> counterexample; // first witness-less binomial
    std::uint64_t binomials_checked = 0;
};

/// Checks every fiber binomial for every 1 <= b <= a <= p.
PseudoLinearVerdict verify_pseudo_linear(const PseudoLinearInstance& inst);

/// The ideal (z)^(d+1) + (phi(t_i) m_i) over the combined context
/// (x variables first, then z variables).
MonomialIdeal instance_ideal(const PseudoLinearInstance& inst);

/// First-syzygy certificate for the d-th power of the J family: with
/// u = (z1^(d-1) z2 x2)^d and V the remaining minimal generators of J^d,
/// x1^d must be a minimal generator of V : u. Implies a first syzygy of
/// degree d, hence reg(J^d) >= d(d+1) + d - 1.
struct SyzygyCertificate {
    int d = 0;
    bool holds = false;
    bool x_power_in_colon = false;        // x1^d lies in V : u
    bool no_smaller_power = false;        // no x1^s with s < d lies in V : u
    bool x_power_is_minimal = false;      // x1^d is a minimal generator
    long long syzygy_degree = 0;          // d(d+1) + d
    long long regularity_lower_bound = 0; // d(d+1) + d - 1
    std::optional<long long> betti_first_syzygies; // beta_{1, syzygy_degree} over Q, if computed
};

/// `betti_crosscheck` empty means: cross-check against the Betti table
/// for d <= 3 and skip it above (runtime envelope).
SyzygyCertificate syzygy_certificate(int d, std::optional<bool> betti_crosscheck = std::nullopt);

} // namespace regjump

#endif

#ifndef REGJUMP_IDEAL_HPP
#define REGJUMP_IDEAL_HPP

#include <optional>
#include <vector>

#include "regjump/monomial.hpp"

namespace regjump {

/// Monomial ideal held by its minimal generating set, stored in canonical
/// lex-descending order so equality is structural. The unit and zero
/// ideals exist only as distinguished constants; every analytic operation
/// rejects them.
class MonomialIdeal {
public:
    /// Minimalize a generating set: drop every monomial divisible by
    /// another one. Idempotent. Rejects empty input, mixed contexts and
    /// the identity monomial.
    static MonomialIdeal minimal_generators(const std::vector<Monomial>& monomials);

    static MonomialIdeal unit(ContextPtr context);
    static MonomialIdeal zero(ContextPtr context);

    bool is_unit() const { return unit_; }
    bool is_zero() const { return zero_; }

    const ContextPtr& context() const { return context_; }
    /// Canonical lex-descending minimal generators; empty for the unit
    /// and zero constants.
    const std::vector<Monomial>& generators() const { return generators_; }
    std::size_t generator_count() const { return generators_.size(); }

    /// Ideal membership: divisibility by some generator.
    bool contains(const Monomial& m) const;

    long long max_generator_degree() const; // t_0
    long long min_generator_degree() const; // initial degree
    bool generated_in_single_degree() const;

    bool operator==(const MonomialIdeal& other) const;
    bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

    /// Throws validation_error unless the ideal is proper and nonzero.
    void require_analyzable(const char* op) const;

private:
    MonomialIdeal(ContextPtr context, std::vector<Monomial> gens, bool unit, bool zero);

    ContextPtr context_;
    std::vector<Monomial> generators_;
    bool unit_ = false;
    bool zero_ = false;
};

/// Minimal generators of the product ideal. Commutative.
MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);

/// k-th power, k >= 1; iterated multiply with minimalization each step.
MonomialIdeal power(const MonomialIdeal& ideal, int k);

/// Colon ideal I : (u), via minimal generators of { f / gcd(f, u) }.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u);

/// Join-closure of the generator set under pairwise lcm. Every multidegree
/// carrying a nonzero Betti number lies in this set.
class LcmLattice {
public:
    LcmLattice(MonomialIdeal source, std::vector<Monomial> elements);

    const MonomialIdeal& source() const { return source_; }
    /// Sorted by total degree ascending, then lex-descending.
    const std::vector<Monomial>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool contains(const Monomial& m) const;

private:
    MonomialIdeal source_;
    std::vector<Monomial> elements_;
};

LcmLattice lcm_lattice(const MonomialIdeal& ideal);

/// Variable bijection as an index map: image[i] is the index, in the
/// target context, of source variable i.
using VariableBijection = std::vector<std::size_t>;

/// Rewrites m through the bijection into the target context.
Monomial rename_variables(const Monomial& m, const VariableBijection& map, const ContextPtr& target);

/// If `given` is present, verifies it maps the generators of `a` onto the
/// generators of `b` bijectively; otherwise searches all variable
/// bijections (at most 8 variables) and returns the first witness in
/// lexicographic permutation order, or nullopt.
std::optional<VariableBijection> iso_under_renaming(
    const MonomialIdeal& a, const MonomialIdeal& b,
    const std::optional<VariableBijection>& given = std::nullopt);

/// Coefficients of the numerator of the Hilbert series of R/I over
/// (1-t)^n; index = degree. Picks the cheaper of two exact routes:
/// inclusion-exclusion over generator subsets or the Moebius recursion
/// on the lcm lattice.
std::vector<long long> hilbert_numerator(const MonomialIdeal& ideal);

namespace detail {

/// The two routes individually, for cross-checking; both are exact.
std::vector<long long> hilbert_numerator_inclusion_exclusion(const MonomialIdeal& ideal);
std::vector<long long> hilbert_numerator_moebius(const MonomialIdeal& ideal);

} // namespace detail

} // namespace regjump

#endif

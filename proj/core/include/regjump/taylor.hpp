#ifndef REGJUMP_TAYLOR_HPP
#define REGJUMP_TAYLOR_HPP

#include "regjump/betti.hpp"

namespace regjump {

/// Independent Betti oracle from the Taylor complex reduced modulo the
/// variables: chain groups are generator subsets, the differential entry
/// between S and S minus {g} is the simplicial sign when both subsets
/// have the same lcm and 0 otherwise, and homology is taken one
/// multidegree strand at a time. Must agree with betti_table exactly.
///
/// Exact enumeration caps: at most 24 generators, at most 8 variables,
/// lattice exponents below 256.
BettiTable taylor_betti_oracle(const MonomialIdeal& ideal, const FieldSpec& field);

namespace detail {

/// Implementation knob for tests: strands with at most dense_cell_cap
/// subsets use dense rank directly; larger strands go through sparse
/// unit-pivot cancellation first. Both routes must agree.
BettiTable taylor_betti_oracle_impl(const MonomialIdeal& ideal, const FieldSpec& field,
                                    std::size_t dense_cell_cap);

} // namespace detail

} // namespace regjump

#endif

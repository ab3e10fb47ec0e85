#ifndef REGJUMP_FAMILIES_HPP
#define REGJUMP_FAMILIES_HPP

#include <utility>

#include "regjump/ideal.hpp"
#include "regjump/quotients.hpp"

namespace regjump {

/// J(d) = (x1 z1^d, x1 z2^d, x2 z1^(d-1) z2) + (z1, z2)^(d+1) over
/// (x1, x2, z1, z2): d+5 generators of degree d+1. d >= 2.
MonomialIdeal family_J(int d);

/// The mixed generators and the pure (z1, z2)^(d+1) block of J(d),
/// ready for block_order.
std::pair<std::vector<Monomial>, MonomialIdeal> family_J_parts(int d);

/// Convenience: block_order applied to the a-th power of J(d).
OrderedGenerators family_J_block_order(int d, int a);

/// H(d) = (x1 z1^d, x1 z2^d, x2 z1^(d-1) z2) + z1 z2 (z1, z2)^(d-1):
/// d+3 generators of degree d+1. H(2) is the Conca-Herzog ideal up to
/// renaming.
MonomialIdeal family_H(int d);

/// Squarefree variant over (x1, x2, z1..z_{2d}): x1 z_{2i-1} z_{2i} and
/// x2 z_{2i} z_{2i+1} (cyclically) plus all squarefree cubics in the z's.
/// Sq(2) is Sturmfels' ideal up to renaming.
MonomialIdeal family_Sq(int d);

struct MultijumpConstruction {
    MonomialIdeal ideal;
    /// x z1^(b-1) z2 arises in two generator groups; the constructor
    /// deduplicates and reports the collision here.
    bool duplicate_mixed_generator = false;
};

/// Two-jump candidate over (x, y1, y2, z1, z2) for 1 < a < b; all
/// generators have degree b+1.
MultijumpConstruction family_multijump_detailed(int a, int b);
MonomialIdeal family_multijump(int a, int b);

/// The classical examples, canonically ordered.
MonomialIdeal example_terai();
MonomialIdeal example_conca_herzog();
MonomialIdeal example_sturmfels();

/// The same ideals with their generators in the classical listed order
/// (the order the linear-quotients checks refer to).
OrderedGenerators example_terai_listed();
OrderedGenerators example_conca_herzog_listed();
OrderedGenerators example_sturmfels_listed();

} // namespace regjump

#endif

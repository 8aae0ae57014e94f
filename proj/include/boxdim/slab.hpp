#pragma once

#include "boxdim/cover.hpp"

namespace boxdim {

/// Cover of a product-of-cycles space at scale R. One cycle: consecutive
/// block-pair arcs, multiplicity 2, bound <= 4R. n cycles: brick-wall boxes
/// with staggered offsets, multiplicity <= n+1, bound <= 4nR. All three
/// guarantees (multiplicity, bound, Lebesgue >= R) are re-verified by the
/// checkers before returning. Throws std::invalid_argument when the space
/// carries no product structure.
Cover greedy_slab_cover(SpacePtr space, const Rat& R);

/// Generic cover of any finite metric space at scale R: distance bands of
/// width 3R and stride 2R from a pseudo-peripheral root, split into
/// R-connected components. Multiplicity <= 2 and Lebesgue >= R always; the
/// bound is whatever the bands produce (reported in the result's S).
Cover shell_chain_cover(SpacePtr space, const Rat& R);

}  // namespace boxdim

#pragma once

#include "boxdim/ball.hpp"
#include "boxdim/cover.hpp"
#include "boxdim/quotient.hpp"

namespace boxdim {

/// A cover of a finite word-ball window in G obtained by lifting a cover of
/// a finite quotient through the quotient map. Members are the sheets of the
/// preimages of the base members, truncated at the window boundary; the
/// Lebesgue guarantee is only claimed inside the nominal radius (the window
/// radius minus the margin S).
struct LiftedCover {
    Cover cover;                  // on W.space
    std::vector<int> base_member; // lifted member index -> base member index
    Rat nominal_radius{0};
};

/// Lifts U (an S-bounded cover of Q) to the window W around W.center.
/// Preconditions, all checked: Q is a quotient of G, the quotient map is
/// injective on every 3S-ball (injectivity_radius(Q) >= 3S), and W has a
/// margin of at least S beyond its nominal radius. Throws
/// std::invalid_argument naming the attained radius when injectivity fails.
/// The returned cover is checker-verified before returning: multiplicity
/// <= multiplicity(U), bound <= S, every sheet isometric to its image, and
/// Lebesgue number >= U.R for subsets of the nominal window.
LiftedCover lift_cover(GroupPtr G, const FiniteQuotient& Q, const Cover& U,
                       const WordBall& W, const Rat& S);

}  // namespace boxdim

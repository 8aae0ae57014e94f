#pragma once

#include "boxdim/quotient.hpp"

#include <string>
#include <vector>

namespace boxdim {

struct SeparationReport {
    std::string condition;      // "separating", "scs1", "scs2", "scs3"
    bool verdict = false;
    int witness = -1;           // index into the family, -1 if none
    std::string witness_label;  // label of the witnessing spec
};

/// True iff some member of sigma contains no element of F minus the identity.
SeparationReport is_separating(const std::vector<SubgroupSpec>& sigma,
                               const std::vector<GroupElement>& F);

/// Semi-conjugacy-separation for F, via one of three equivalent conditions
/// evaluated inside each spec's finite target (they must agree):
///   mode 1: G_a meets no g^G G_a for nontrivial g in F
///   mode 2: the union of conjugates of G_a meets F only in the identity
///   mode 3: the quotient map is injective on every translate F * k
SeparationReport is_semi_conjugacy_separating(const std::vector<SubgroupSpec>& sigma,
                                              const std::vector<GroupElement>& F, int mode);

/// Length of the shortest nontrivial word w with w x = x for some coset x of
/// Q (the shortest Schreier-graph return over all basepoints).
Rat shortest_schreier_return(const FiniteQuotient& Q, size_t element_cap = 2000000);

/// Largest R (multiple of the min generator weight, ties broken downward)
/// such that the quotient map is injective on B_R(g) for every g.
Rat injectivity_radius(const FiniteQuotient& Q, size_t element_cap = 2000000);

struct IsometryReport {
    bool holds = false;    // distance preservation on every B_R(g)
    bool vacuous = false;  // precondition (injectivity on B_{3R}) failed
};

/// The 3R-injectivity => R-isometry lemma, checked exactly: whenever the
/// quotient map is injective on every B_{3R}(g), distances inside every
/// B_R(g) are preserved. Vacuous-true (flagged) when injectivity fails.
IsometryReport verify_isometry_lemma(const FiniteQuotient& Q, const Rat& R,
                                     size_t element_cap = 2000000);

}  // namespace boxdim

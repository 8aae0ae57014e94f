#pragma once

#include "boxdim/cover.hpp"

#include <string>
#include <vector>

namespace boxdim {

/// Certificate for a scale-R dimension bound on one space: either a minimal
/// cover multiplicity or a minimal color (family) count, with the witnessing
/// cover. `exact` means an exhaustive / branch-and-bound search proved no
/// smaller value exists (within the declared shape class for covers).
struct ScaleDimWitness {
    std::string space_label;
    Rat R{0};
    Rat S{0};
    std::string kind;  // "cover" or "coloring"
    int value = 0;
    Cover certificate;
    std::vector<int> color_of_member;  // coloring kind: family index per member
    bool exact = true;
};

/// Minimum k such that X is covered by k families, each a union of subsets
/// of diameter <= S that are pairwise more than R apart. Exact via
/// branch-and-bound (points processed by decreasing eccentricity, colors
/// symmetry-pruned); when the node budget runs out the witness degrades to
/// an upper bound with exact=false.
ScaleDimWitness exact_min_colors(SpacePtr X, const Rat& R, const Rat& S,
                                 size_t node_cap = 20000000);

/// Re-checks a coloring witness: clusters have diameter <= S, same-family
/// clusters are more than R apart, and the clusters cover X.
void validate_coloring(const ScaleDimWitness& w);

/// Cover obtained by enlarging every cluster of a coloring by R/2: verified
/// multiplicity <= k, bound <= S+R, Lebesgue >= R/2.
Cover colors_to_cover(const ScaleDimWitness& w);

enum class CoverShape { Arcs, AllSubsets };

/// Minimum multiplicity over S-bounded covers with Lebesgue number >= R,
/// exact within the shape class. Arcs: members are proper cyclic intervals
/// of a cycle (requires 1-dimensional product structure). AllSubsets:
/// exhaustive over all subsets, only for very small spaces.
ScaleDimWitness exact_min_multiplicity(SpacePtr X, const Rat& R, const Rat& S,
                                       CoverShape shape, size_t cap = 20000000);

/// Uniform profile of a family at scale R with the bound budget S_cap:
/// least n such that every space has a verified cover with multiplicity
/// <= n+1, bound <= S_cap (single uniform S = max attained bound),
/// Lebesgue >= R. `lower_bound_proven` is set when n = 0 is excluded
/// exactly (R-component diameter argument), making n = 1 exact.
struct DimProfile {
    int n = 0;
    Rat S{0};
    std::vector<Cover> witnesses;
    bool lower_bound_proven = false;
};

DimProfile dim_profile(const std::vector<SpacePtr>& family, const Rat& R,
                       const Rat& S_cap, size_t color_node_cap = 20000000);

/// As above, with candidate witness covers per member (e.g. produced from
/// group or extension structure). Candidates are never trusted: each is
/// re-verified (validity, bound <= S_cap, Lebesgue >= R) and the best
/// verified one competes with the generic strategies.
DimProfile dim_profile(const std::vector<SpacePtr>& family, const Rat& R,
                       const Rat& S_cap, size_t color_node_cap,
                       const std::vector<std::vector<Cover>>& hints);

/// Largest diameter of an R-connected component, the exact minimal bound of
/// any multiplicity-1 cover with Lebesgue number >= R.
Rat min_bound_multiplicity_one(const FiniteMetricSpace& X, const Rat& R);

}  // namespace boxdim

#pragma once

#include "boxdim/metric_space.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace boxdim {

/// A family of point subsets covering a finite metric space, with the target
/// Lebesgue number R and bound S it is meant to certify.
struct Cover {
    SpacePtr space;
    std::vector<std::vector<int>> members;  // sorted point indices, nonempty
    Rat R{0};
    Rat S{0};
};

/// Throws std::invalid_argument unless members are nonempty, sorted, in
/// range, and their union is the whole space.
void validate_cover(const Cover& c);

/// Max over points of the number of members containing it.
int multiplicity(const Cover& c);

/// True iff every k-subset of members has empty common intersection
/// (the "(n+2)-fold intersections are empty" form of multiplicity <= n+1).
bool empty_intersections(const Cover& c, int k);

/// Max member diameter.
Rat bound(const Cover& c);

/// True iff every subset of diameter <= R lies inside some member, decided
/// by enumerating maximal cliques of the R-proximity graph. Throws
/// ResourceError when more than `clique_cap` maximal cliques are visited.
bool lebesgue_at_least(const Cover& c, const Rat& R, size_t clique_cap = 2000000);

/// Cover file format: header `space=<label> R=<r> S=<s>`, then one line per
/// member `id: p1 p2 p3 ...`.
void write_cover(const Cover& c, std::ostream& out);
void write_cover(const Cover& c, const std::string& path);
/// Reads the format above; the space must be supplied (its label is checked
/// against the header unless `ignore_label`).
Cover read_cover(std::istream& in, SpacePtr space, bool ignore_label = false);
Cover read_cover(const std::string& path, SpacePtr space, bool ignore_label = false);

}  // namespace boxdim

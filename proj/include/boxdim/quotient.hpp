#pragma once

#include "boxdim/metric_space.hpp"
#include "boxdim/subgroup.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace boxdim {

/// The coset space G/H as a Schreier graph with exact quotient metric.
/// Cosets are indexed 0..index-1 (ordered by minimal target-element id);
/// `rep[x]` is a group element whose coset is x (Schreier-tree word).
class FiniteQuotient {
  public:
    struct Edge {
        int from;
        int to;
        Rat weight;
        std::string gen_label;
    };

    SubgroupSpec spec;
    std::vector<int> target_rep;     // coset id -> representative element id in target
    std::vector<GroupElement> rep;   // coset id -> representative in G
    std::vector<int> coset_of_elem;  // target element id -> coset id
    std::vector<Edge> edges;         // one per (coset, marked generator)
    int basepoint = 0;               // coset of H
    SpacePtr space;                  // quotient metric, point i = coset i

    int size() const { return static_cast<int>(target_rep.size()); }
    int coset_of(const GroupElement& g) const { return coset_of_elem[spec.elem_hom(g)]; }
    /// Left action: g * (coset x).
    int act(const GroupElement& g, int x) const {
        return coset_of_elem[spec.target->mul(spec.elem_hom(g), target_rep[x])];
    }
    const Rat& dist(int x, int y) const { return space->d(x, y); }
};

/// Enumerates cosets, builds the Schreier graph, and solves all-pairs
/// shortest paths for the quotient metric. Throws ResourceError when the
/// index exceeds `index_cap` and on a disconnected Schreier graph (internal
/// consistency failure for valid homs).
FiniteQuotient build_quotient(const SubgroupSpec& spec, size_t index_cap = 100000);

/// Text edge list: header lines `# quotient label=<label>`, `# index=<n>
/// basepoint=<b>`, then one line per edge `from to weight gen_label`.
void export_edge_list(const FiniteQuotient& q, std::ostream& out);
void export_edge_list(const FiniteQuotient& q, const std::string& path);

/// Rebuilds a metric space from an exported edge list (labels are coset ids).
/// Recognizes single-cycle graphs and attaches the cycle ProductStructure.
SpacePtr load_edge_list_space(const std::string& path);
SpacePtr load_edge_list_space(std::istream& in, const std::string& label);

}  // namespace boxdim

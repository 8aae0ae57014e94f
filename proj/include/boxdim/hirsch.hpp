#pragma once

#include "boxdim/group.hpp"

#include <memory>
#include <string>
#include <vector>

namespace boxdim {

/// Description of an elementary amenable group as built from abelian and
/// finite pieces by extensions and directed unions. The tree is supplied (or
/// canonical per built-in family); it is not discovered from group data.
struct ExtensionTree {
    enum class Kind { AbelianLeaf, FiniteLeaf, Extension, DirectedUnion };
    Kind kind = Kind::FiniteLeaf;
    long long free_rank = 0;             // AbelianLeaf
    std::vector<long long> torsion;      // AbelianLeaf: finite part (contributes 0)
    long long order = 1;                 // FiniteLeaf
    std::vector<ExtensionTree> children; // Extension: {normal, quotient}; union: members
    bool monotone = false;               // DirectedUnion: cofinal increasing chain

    void check() const;  // invariants; throws std::invalid_argument
};

/// Natural number or infinity.
struct HirschValue {
    bool finite = true;
    long long value = 0;  // meaningful when finite

    friend bool operator==(const HirschValue&, const HirschValue&) = default;
};

/// h: leaves -> free rank (0 for finite), extension -> h(N) + h(G/N),
/// directed union -> supremum of members. A monotone union whose member values
/// are still strictly increasing at the end of the list is reported infinite.
HirschValue hirsch_length(const ExtensionTree& t);

/// Nested parenthesized expressions: `ab(n)` (optional torsion `ab(n;2,4)`),
/// `fin(n)`, `ext(t1,t2)`, `union(t1,...,tk)` with an optional trailing `...`
/// marking a monotone unbounded chain. Whitespace is ignored.
ExtensionTree parse_tree(const std::string& text);
std::string tree_to_string(const ExtensionTree& t);

/// Canonical tree of a built-in family: FreeAbelian(n), FiniteCyclicProduct,
/// Heisenberg3, InfiniteDihedral, WreathLamp(k), SemidirectZnZ(A).
ExtensionTree canonical_tree(const MarkedGroup& g);

/// hirsch_length of the canonical tree (always finite for the built-ins).
long long hirsch_of_builtin(const MarkedGroup& g);

}  // namespace boxdim

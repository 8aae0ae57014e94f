#pragma once

#include "boxdim/finite_group.hpp"
#include "boxdim/group.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace boxdim {

using GroupPtr = std::shared_ptr<const MarkedGroup>;

/// A finite-index subgroup H <= G, presented as the preimage of
/// `subgroup` under an explicit homomorphism onto the finite `target`.
/// Membership and coset enumeration are decided entirely inside `target`.
struct SubgroupSpec {
    GroupPtr host;
    FiniteGroupPtr target;
    std::function<int(const GroupElement&)> elem_hom;  // total on normal forms
    std::vector<int> gen_images;  // aligned with host->marked_generators()
    std::vector<int> subgroup;    // sorted element ids of target
    std::string label;
    /// Cycle lengths per coordinate when the quotient of the trivial subgroup
    /// is a product of cycles in normal-form order (congruence specs on
    /// FreeAbelian / FiniteCyclicProduct hosts). Empty otherwise.
    std::vector<long long> product_levels;

    long long index() const {
        return target->size() / static_cast<long long>(subgroup.size());
    }
    bool contains(const GroupElement& g) const;

    /// Checks subgroup axioms, generator image consistency, and hom
    /// multiplicativity on a sample ball of the host. Throws on failure.
    void validate(int sample_radius = 3) const;
};

/// Congruence-style spec for FreeAbelian (per-coordinate levels), Heisenberg3
/// (entrywise mod m) and SemidirectZnZ (entries mod m, shift mod ord(A mod m)).
SubgroupSpec congruence_spec(GroupPtr host, const std::vector<long long>& levels);
SubgroupSpec congruence_spec(GroupPtr host, long long level);

/// Z/k wr Z/n congruence for WreathLamp(k): lamps folded mod n, shift mod n.
SubgroupSpec wreath_spec(GroupPtr host, long long n);

/// <r^n> (j absent) or <r^n, r^j s> inside InfiniteDihedral, via D_n.
SubgroupSpec dihedral_spec(GroupPtr host, long long n, long long j = -1);

/// H = G (index 1).
SubgroupSpec full_spec(GroupPtr host);

/// Derived spec on the same host whose subgroup is replaced by `subgroup`
/// (must contain the original subgroup's role is ignored; used for preimages
/// of larger subgroups of the same target).
SubgroupSpec with_subgroup(const SubgroupSpec& spec, std::vector<int> subgroup,
                           std::string label);

/// Restricts the target to the image of the hom, remapping element ids.
/// Needed when a constructed hom is not onto its nominal target.
SubgroupSpec restrict_to_image(SubgroupSpec spec);

}  // namespace boxdim

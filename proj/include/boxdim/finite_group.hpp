#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace boxdim {

/// A concrete finite group built by closure from generators under an
/// explicit multiplication rule on encoded normal forms. Elements are
/// indexed 0..size-1 in normal-form order, so indices are deterministic.
class FiniteGroup {
  public:
    using Code = std::vector<long long>;
    using MulFn = std::function<Code(const Code&, const Code&)>;
    using InvFn = std::function<Code(const Code&)>;

    static std::shared_ptr<FiniteGroup> closure(const std::vector<Code>& generators,
                                                MulFn mul, InvFn inv, Code identity,
                                                size_t element_cap = 300000);

    int size() const { return static_cast<int>(codes_.size()); }
    int id() const { return id_; }
    int mul(int a, int b) const;
    int inv(int a) const;
    const Code& code(int a) const { return codes_[a]; }
    int index_of(const Code& c) const;

    bool is_subgroup(const std::vector<int>& elems) const;
    std::vector<int> subgroup_closure(std::vector<int> gens) const;
    /// Smallest subgroup containing `gens` and closed under conjugation by
    /// the whole group.
    std::vector<int> normal_closure(std::vector<int> gens) const;
    std::vector<int> conjugacy_class(int g) const;
    std::vector<int> conjugate_subgroup(const std::vector<int>& sub, int t) const;
    /// Product set A * B (as a sorted set of element ids).
    std::vector<int> product_set(const std::vector<int>& A, const std::vector<int>& B) const;

    struct Cosets {
        std::vector<int> coset_of;  // element id -> coset id
        std::vector<int> rep;       // coset id -> min element id
    };
    /// Left cosets t * S; coset ids ordered by minimal element id.
    Cosets left_cosets(const std::vector<int>& subgroup) const;

    /// The subgroup `elems` as a standalone FiniteGroup, plus the index map
    /// from this group's element ids into the new group.
    std::pair<std::shared_ptr<FiniteGroup>, std::map<int, int>> as_group(
        const std::vector<int>& elems) const;

  private:
    std::vector<Code> codes_;
    std::map<Code, int> index_;
    MulFn mul_;
    InvFn inv_;
    int id_ = 0;
};

using FiniteGroupPtr = std::shared_ptr<const FiniteGroup>;

}  // namespace boxdim

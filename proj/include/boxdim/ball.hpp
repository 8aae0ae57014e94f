#pragma once

#include "boxdim/group.hpp"
#include "boxdim/metric_space.hpp"

#include <map>
#include <queue>
#include <vector>

namespace boxdim {

/// Lazily enumerates group elements in nondecreasing word length via
/// Dijkstra over the Cayley graph of the marked generating set.
class CayleyEnumerator {
  public:
    explicit CayleyEnumerator(const MarkedGroup& g, size_t element_cap = 2000000);

    struct Entry {
        GroupElement element;
        Rat length;
    };

    /// Next element in nondecreasing length, identity first.
    /// Returns false when the cap is reached.
    bool next(Entry& out);

    /// Length of the furthest element settled so far; everything at or below
    /// this length has already been emitted.
    const Rat& frontier() const { return frontier_; }

  private:
    const MarkedGroup& g_;
    size_t cap_;
    std::map<GroupElement, Rat> settled_;
    using QItem = std::pair<Rat, GroupElement>;
    std::priority_queue<QItem, std::vector<QItem>, std::greater<>> queue_;
    Rat frontier_{0};
};

/// All elements of B_R(e) with their exact word lengths, keyed by element.
struct CayleyBall {
    std::map<GroupElement, Rat> lengths;
    Rat radius;
};

CayleyBall cayley_ball(const MarkedGroup& g, const Rat& R, size_t element_cap = 2000000);

/// d_G(g, h) = weighted word length of g h^-1.
Rat word_distance(const MarkedGroup& g, const GroupElement& a, const GroupElement& b,
                  size_t element_cap = 2000000);

/// B_R(center) as a finite metric space with exact internal distances
/// (computed inside a 2R-ball). `elements[i]` is the group element of point i;
/// points are sorted by normal form.
struct WordBall {
    SpacePtr space;
    std::vector<GroupElement> elements;
    GroupElement center;
    Rat radius;
};

WordBall word_ball(const MarkedGroup& g, const GroupElement& center, const Rat& R,
                   size_t element_cap = 2000000);

}  // namespace boxdim

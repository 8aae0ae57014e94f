#include "boxdim/ball.hpp"

#include <algorithm>
#include <sstream>

namespace boxdim {

CayleyEnumerator::CayleyEnumerator(const MarkedGroup& g, size_t element_cap)
    : g_(g), cap_(element_cap) {
    queue_.emplace(Rat(0), g_.identity());
}

bool CayleyEnumerator::next(Entry& out) {
    while (!queue_.empty()) {
        auto [len, el] = queue_.top();
        queue_.pop();
        if (settled_.count(el)) continue;
        if (settled_.size() >= cap_)
            throw ResourceError("Cayley ball element cap exceeded", frontier_);
        settled_.emplace(el, len);
        frontier_ = len;
        for (const auto& mg : g_.marked_generators()) {
            // Right-multiplication Cayley graph: |el * s| <= |el| + w(s).
            GroupElement nb;
            try {
                nb = g_.multiply(el, mg.element);
            } catch (const ResourceError&) {
                continue;  // wreath support window edge; the element is out of reach anyway
            }
            if (!settled_.count(nb)) queue_.emplace(len + mg.weight, nb);
        }
        out = {el, len};
        return true;
    }
    return false;
}

CayleyBall cayley_ball(const MarkedGroup& g, const Rat& R, size_t element_cap) {
    CayleyBall ball;
    ball.radius = R;
    CayleyEnumerator it(g, element_cap);
    CayleyEnumerator::Entry e;
    while (it.next(e)) {
        if (e.length > R) break;
        ball.lengths.emplace(e.element, e.length);
    }
    return ball;
}

Rat word_distance(const MarkedGroup& g, const GroupElement& a, const GroupElement& b,
                  size_t element_cap) {
    GroupElement target = g.multiply(a, g.inverse(b));
    CayleyEnumerator it(g, element_cap);
    CayleyEnumerator::Entry e;
    while (it.next(e))
        if (e.element == target) return e.length;
    throw ResourceError("word_distance: element cap exceeded before reaching target",
                        it.frontier());
}

WordBall word_ball(const MarkedGroup& g, const GroupElement& center, const Rat& R,
                   size_t element_cap) {
    CayleyBall big = cayley_ball(g, R * 2, element_cap);
    std::vector<GroupElement> core;
    for (const auto& [el, len] : big.lengths)
        if (len <= R) core.push_back(el);  // map order = normal-form order
    WordBall wb;
    wb.center = center;
    wb.radius = R;
    std::vector<std::string> labels;
    std::vector<GroupElement> points;
    for (const auto& u : core) {
        GroupElement p = g.multiply(u, center);
        points.push_back(p);
        labels.push_back(g.to_string(p));
    }
    size_t n = points.size();
    std::vector<Rat> dist(n * n, Rat(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            // d(u_i c, u_j c) = |u_i u_j^-1|, which lies in B_2R.
            GroupElement w = g.multiply(core[i], g.inverse(core[j]));
            dist[i * n + j] = big.lengths.at(w);
        }
    std::ostringstream label;
    label << "ball(" << g.describe() << ",center=" << g.to_string(center)
          << ",R=" << to_string(R) << ")";
    wb.space = std::make_shared<FiniteMetricSpace>(label.str(), std::move(labels),
                                                   std::move(dist));
    wb.elements = std::move(points);
    return wb;
}

}  // namespace boxdim

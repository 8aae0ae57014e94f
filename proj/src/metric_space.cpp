#include "boxdim/metric_space.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace boxdim {

FiniteMetricSpace::FiniteMetricSpace(std::string label, std::vector<std::string> point_labels,
                                     std::vector<Rat> dist, size_t max_full_check_points)
    : label_(std::move(label)), point_labels_(std::move(point_labels)), dist_(std::move(dist)) {
    n_ = point_labels_.size();
    if (n_ == 0) throw std::invalid_argument("metric space needs at least one point");
    if (dist_.size() != n_ * n_) throw std::invalid_argument("distance matrix size mismatch");
    for (size_t i = 0; i < n_; ++i) {
        if (d(i, i) != Rat(0)) throw std::invalid_argument("nonzero self-distance");
        for (size_t j = i + 1; j < n_; ++j) {
            if (d(i, j) != d(j, i)) throw std::invalid_argument("asymmetric distance");
            if (d(i, j) <= Rat(0)) throw std::invalid_argument("indistinguishable points");
        }
    }
    auto check_triple = [this](size_t i, size_t j, size_t k) {
        if (d(i, k) > d(i, j) + d(j, k))
            throw std::invalid_argument("triangle inequality violated in " + label_);
    };
    if (n_ <= max_full_check_points) {
        for (size_t i = 0; i < n_; ++i)
            for (size_t j = 0; j < n_; ++j)
                for (size_t k = 0; k < n_; ++k) check_triple(i, j, k);
    } else {
        fully_checked_ = false;
        std::mt19937 rng(12345);
        std::uniform_int_distribution<size_t> pick(0, n_ - 1);
        for (int t = 0; t < 200000; ++t) check_triple(pick(rng), pick(rng), pick(rng));
    }
}

Rat FiniteMetricSpace::diameter() const {
    Rat m(0);
    for (const Rat& r : dist_) m = std::max(m, r);
    return m;
}

Rat FiniteMetricSpace::diameter_of(const std::vector<int>& subset) const {
    Rat m(0);
    for (size_t a = 0; a < subset.size(); ++a)
        for (size_t b = a + 1; b < subset.size(); ++b)
            m = std::max(m, d(subset[a], subset[b]));
    return m;
}

std::vector<std::vector<int>> FiniteMetricSpace::scale_components(const Rat& R) const {
    std::vector<int> comp(n_, -1);
    std::vector<std::vector<int>> out;
    for (size_t s = 0; s < n_; ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> stack{static_cast<int>(s)}, members;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (size_t u = 0; u < n_; ++u)
                if (comp[u] == -1 && d(v, u) <= R) {
                    comp[u] = comp[s];
                    stack.push_back(static_cast<int>(u));
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

FiniteMetricSpace FiniteMetricSpace::restrict(const std::vector<int>& subset,
                                              std::string label) const {
    std::vector<std::string> labels;
    std::vector<Rat> dist;
    dist.reserve(subset.size() * subset.size());
    for (int i : subset) labels.push_back(point_labels_[i]);
    for (int i : subset)
        for (int j : subset) dist.push_back(d(i, j));
    return FiniteMetricSpace(std::move(label), std::move(labels), std::move(dist));
}

}  // namespace boxdim

#pragma once

#include "boxdim/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace boxdim {

/// Coordinate structure for spaces that are products of cycles (quotients of
/// Z^n with standard generators). Point index is row-major over dims.
struct ProductStructure {
    std::vector<long long> dims;
    std::vector<long long> coords_of(size_t point) const {
        std::vector<long long> c(dims.size());
        for (size_t i = dims.size(); i-- > 0;) {
            c[i] = static_cast<long long>(point % dims[i]);
            point /= dims[i];
        }
        return c;
    }
    size_t point_of(const std::vector<long long>& c) const {
        size_t p = 0;
        for (size_t i = 0; i < dims.size(); ++i) p = p * dims[i] + static_cast<size_t>(c[i]);
        return p;
    }
};

/// A finite metric space with exact rational all-pairs distances.
class FiniteMetricSpace {
  public:
    /// `dist` is a flat n x n matrix. Metric axioms are checked on
    /// construction: exhaustively for n <= max_full_check_points, on a
    /// deterministic sample of triples above that.
    FiniteMetricSpace(std::string label, std::vector<std::string> point_labels,
                      std::vector<Rat> dist, size_t max_full_check_points = 512);

    size_t size() const { return n_; }
    const std::string& label() const { return label_; }
    const std::string& point_label(size_t i) const { return point_labels_[i]; }
    const Rat& d(size_t i, size_t j) const { return dist_[i * n_ + j]; }
    const std::vector<Rat>& flat() const { return dist_; }
    bool fully_checked() const { return fully_checked_; }

    Rat diameter() const;
    Rat diameter_of(const std::vector<int>& subset) const;
    /// Connected components of the graph joining points at distance <= R.
    std::vector<std::vector<int>> scale_components(const Rat& R) const;

    /// Subspace with induced distances; point order follows `subset`.
    FiniteMetricSpace restrict(const std::vector<int>& subset, std::string label) const;

    std::optional<ProductStructure> product;

  private:
    std::string label_;
    size_t n_;
    std::vector<std::string> point_labels_;
    std::vector<Rat> dist_;
    bool fully_checked_ = true;
};

using SpacePtr = std::shared_ptr<const FiniteMetricSpace>;

}  // namespace boxdim

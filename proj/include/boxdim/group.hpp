#pragma once

#include "boxdim/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace boxdim {

enum class Family {
    FreeAbelian,
    FiniteCyclicProduct,
    Heisenberg3,
    InfiniteDihedral,
    WreathLamp,
    SemidirectZnZ,
};

std::string family_name(Family f);

class MarkedGroup;

/// Builds a group from the record text format (lines `family = <name>`,
/// `params = <ints>`, optional `generators = default | <elem>; <elem>; ...`,
/// optional `weights = <rationals>`) or from the inline form
/// `<name>(<ints>)`, e.g. `free_abelian(2)`, `wreath_lamp(2)`,
/// `semidirect_znz(1,1,0,1)` (row-major matrix). Inline shorthand: `z` for
/// `free_abelian(1)`. Throws std::invalid_argument on malformed input.
MarkedGroup parse_group(const std::string& text);

/// Canonical normal form. Field usage depends on the family:
///   FreeAbelian(n), FiniteCyclicProduct: vec (length n)
///   Heisenberg3:       vec = {a, b, c}
///   InfiniteDihedral:  vec = {r}, flag = s
///   WreathLamp(k):     lamps = sorted (position, value) pairs with value in
///                      [1, k), shift
///   SemidirectZnZ(A):  vec (length n), shift
struct GroupElement {
    std::vector<long long> vec;
    std::vector<std::pair<long long, long long>> lamps;
    long long shift = 0;
    bool flag = false;

    auto operator<=>(const GroupElement&) const = default;
};

struct MarkedGenerator {
    GroupElement element;
    Rat weight;
    std::string label;
};

/// A finitely generated group from one of the built-in families, together
/// with a symmetric-closed weighted generating set. All operations are pure;
/// instances are immutable after construction.
class MarkedGroup {
  public:
    static MarkedGroup free_abelian(int n);
    static MarkedGroup finite_cyclic(std::vector<long long> ks);
    static MarkedGroup heisenberg3();
    static MarkedGroup infinite_dihedral();
    static MarkedGroup wreath_lamp(long long k, long long support_cap = 64);
    /// A is n x n row-major with |det A| = 1.
    static MarkedGroup semidirect_znz(std::vector<std::vector<long long>> A);

    /// Replaces the default generating set. Inverses are added internally
    /// with equal weight; weights must be strictly positive.
    void set_generators(const std::vector<GroupElement>& gens,
                        const std::vector<Rat>& weights,
                        const std::vector<std::string>& labels = {});

    Family family() const { return family_; }
    int rank() const { return n_; }                       // FreeAbelian / SemidirectZnZ vector size
    long long lamp_modulus() const { return lamp_k_; }    // WreathLamp
    const std::vector<long long>& cyclic_orders() const { return ks_; }
    const std::vector<std::vector<long long>>& matrix() const { return mat_; }
    long long support_cap() const { return support_cap_; }

    /// Symmetric-closed marked generating set (each generator followed by its
    /// inverse unless it is an involution).
    const std::vector<MarkedGenerator>& marked_generators() const { return marked_; }
    Rat min_generator_weight() const;

    GroupElement identity() const;
    GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
    GroupElement inverse(const GroupElement& a) const;
    bool is_identity(const GroupElement& a) const;
    bool valid_element(const GroupElement& a) const;

    std::string to_string(const GroupElement& a) const;
    GroupElement parse_element(const std::string& s) const;

    std::string describe() const;

    bool same_group_as(const MarkedGroup& other) const;

  private:
    MarkedGroup() = default;
    void install_default_generators();
    std::vector<std::vector<long long>> matrix_power(long long e) const;

    Family family_ = Family::FreeAbelian;
    int n_ = 0;
    std::vector<long long> ks_;                 // FiniteCyclicProduct orders
    long long lamp_k_ = 0;                      // WreathLamp modulus
    long long support_cap_ = 64;                // WreathLamp support window
    std::vector<std::vector<long long>> mat_;   // SemidirectZnZ action
    std::vector<std::vector<long long>> mat_inv_;
    std::vector<MarkedGenerator> marked_;
};

}  // namespace boxdim

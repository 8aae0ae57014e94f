#pragma once

#include "boxdim/dimsolve.hpp"
#include "boxdim/quotient.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace boxdim {

/// A finite materialized prefix of the box family of G along a subgroup
/// family sigma: the quotients G/G_alpha with their exact quotient metrics.
struct BoxFamily {
    GroupPtr group;
    std::vector<SubgroupSpec> specs;
    std::vector<FiniteQuotient> members;
    std::vector<std::string> labels;
};

/// Builds the quotients; every spec must live on the same host group.
BoxFamily build_box_family(GroupPtr group, const std::vector<SubgroupSpec>& sigma);

/// The metrized box space: within a component the quotient metric; between
/// components n < n' the distance is lambda_{n+1} + ... + lambda_{n'}.
struct BoxMetric {
    const BoxFamily* family = nullptr;
    std::vector<Rat> lambda;         // one per member, strictly increasing
    std::vector<Rat> prefix;         // prefix[i] = lambda_0 + ... + lambda_i

    struct Point {
        int component = 0;
        int index = 0;
    };

    Rat d(Point a, Point b) const;
    int components() const { return static_cast<int>(lambda.size()); }
};

/// Checks lambda is positive, strictly increasing, one entry per member, and
/// spot-checks the metric axioms; throws std::invalid_argument otherwise.
BoxMetric assemble_box(const BoxFamily& family, const std::vector<Rat>& lambda);

/// R-proximity graph (edges between distinct points at distance <= R) of the
/// glued metric, with a header recording sigma labels, lambda, and R. Points
/// are numbered component by component in coset order.
void export_scale_graph(const BoxMetric& b, const Rat& R, std::ostream& out);
void export_scale_graph(const BoxMetric& b, const Rat& R, const std::string& path);
/// Same for a single quotient.
void export_scale_graph(const FiniteQuotient& q, const Rat& R, std::ostream& out);
void export_scale_graph(const FiniteQuotient& q, const Rat& R, const std::string& path);

/// Uniform dimension profile of the family at each requested scale, with the
/// injectivity radius of every member. A scale whose solve hits a resource
/// cap is flagged incomplete instead of aborting the report.
struct BoxScaleReport {
    Rat R{0};
    Rat S_cap{0};
    DimProfile profile;
    bool complete = false;
    std::string note;
};

struct BoxDimReport {
    std::vector<BoxScaleReport> scales;
    std::vector<Rat> injectivity_radii;  // one per member
};

/// S_cap at scale R is 4 * max-product-rank * R (the slab-cover guarantee);
/// members whose diameter fits the budget count as coarse points (n = 0).
BoxDimReport box_dim_report(const BoxFamily& family, const std::vector<Rat>& scales);

}  // namespace boxdim

#include "boxdim/boxspace.hpp"

#include "boxdim/separation.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace boxdim {

BoxFamily build_box_family(GroupPtr group, const std::vector<SubgroupSpec>& sigma) {
    BoxFamily fam;
    fam.group = group;
    for (const auto& spec : sigma) {
        if (spec.host != group)
            throw std::invalid_argument("box family members must share the host group");
        fam.specs.push_back(spec);
        fam.members.push_back(build_quotient(spec));
        fam.labels.push_back(spec.label);
    }
    return fam;
}

Rat BoxMetric::d(Point a, Point b) const {
    if (a.component == b.component)
        return family->members[a.component].dist(a.index, b.index);
    int lo = std::min(a.component, b.component);
    int hi = std::max(a.component, b.component);
    // lambda_{lo+1} + ... + lambda_{hi}
    return prefix[hi] - prefix[lo];
}

BoxMetric assemble_box(const BoxFamily& family, const std::vector<Rat>& lambda) {
    if (lambda.size() != family.members.size())
        throw std::invalid_argument("need one lambda per member");
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] <= Rat(0))
            throw std::invalid_argument("lambda must be positive");
        if (i > 0 && lambda[i] <= lambda[i - 1])
            throw std::invalid_argument("lambda must be strictly increasing");
    }
    BoxMetric b;
    b.family = &family;
    b.lambda = lambda;
    Rat acc(0);
    for (const Rat& l : lambda) {
        acc += l;
        b.prefix.push_back(acc);
    }
    // Metric axioms. Within-component axioms hold (each member's space is
    // checked on construction); cross-component distances are constant per
    // component pair, so it suffices to check triangles over component
    // triples with extremal within-component distances (0 and the diameter).
    std::vector<Rat> diam(family.members.size(), Rat(0));
    for (size_t n = 0; n < family.members.size(); ++n) {
        const auto& sp = *family.members[n].space;
        for (int i = 0; i < sp.size(); ++i)
            for (int j = i + 1; j < sp.size(); ++j)
                if (diam[n] < sp.d(i, j)) diam[n] = sp.d(i, j);
    }
    auto gap = [&](int n, int m) { return b.prefix[std::max(n, m)] - b.prefix[std::min(n, m)]; };
    int C = static_cast<int>(family.members.size());
    for (int n = 0; n < C; ++n)
        for (int m = 0; m < C; ++m) {
            if (n == m) continue;
            // a,b in component n (at distance up to diam[n]), c in component m:
            // d(a,b) <= d(a,c) + d(c,b) = 2 * gap.
            if (diam[n] > gap(n, m) * 2)
                throw std::invalid_argument(
                    "metric axioms fail: component diameter exceeds twice the gap "
                    "(lambda grows too slowly)");
            // a in n, b in m, c in p: gap(n,m) <= gap(n,p) + gap(p,m) holds by
            // construction (partial sums); with c inside n or m the slack is
            // nonnegative as distances within are nonnegative.
            for (int p = 0; p < C; ++p)
                if (p != n && p != m && gap(n, m) > gap(n, p) + gap(p, m))
                    throw std::logic_error("partial-sum triangle violated");
        }
    return b;
}

namespace {

std::string rat_str(const Rat& r) { return to_string(r); }

}  // namespace

void export_scale_graph(const BoxMetric& b, const Rat& R, std::ostream& out) {
    const BoxFamily& fam = *b.family;
    out << "# box sigma=";
    for (size_t i = 0; i < fam.labels.size(); ++i)
        out << (i ? "," : "") << fam.labels[i];
    out << " lambda=";
    for (size_t i = 0; i < b.lambda.size(); ++i)
        out << (i ? "," : "") << rat_str(b.lambda[i]);
    out << " R=" << rat_str(R) << "\n";
    std::vector<int> offset(fam.members.size() + 1, 0);
    for (size_t n = 0; n < fam.members.size(); ++n)
        offset[n + 1] = offset[n] + fam.members[n].size();
    out << "# points=" << offset.back() << "\n";
    auto point = [&](int global) {
        BoxMetric::Point p;
        while (global >= offset[p.component + 1]) ++p.component;
        p.index = global - offset[p.component];
        return p;
    };
    for (int u = 0; u < offset.back(); ++u)
        for (int v = u + 1; v < offset.back(); ++v)
            if (b.d(point(u), point(v)) <= R) out << u << " " << v << "\n";
}

void export_scale_graph(const BoxMetric& b, const Rat& R, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    export_scale_graph(b, R, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

void export_scale_graph(const FiniteQuotient& q, const Rat& R, std::ostream& out) {
    out << "# quotient label=" << q.spec.label << " R=" << rat_str(R) << "\n";
    out << "# points=" << q.size() << "\n";
    for (int u = 0; u < q.size(); ++u)
        for (int v = u + 1; v < q.size(); ++v)
            if (q.dist(u, v) <= R) out << u << " " << v << "\n";
}

void export_scale_graph(const FiniteQuotient& q, const Rat& R, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    export_scale_graph(q, R, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

BoxDimReport box_dim_report(const BoxFamily& family, const std::vector<Rat>& scales) {
    BoxDimReport rep;
    for (const auto& q : family.members)
        rep.injectivity_radii.push_back(injectivity_radius(q));
    std::vector<SpacePtr> spaces;
    int max_rank = 1;
    for (const auto& q : family.members) {
        spaces.push_back(q.space);
        if (q.space->product)
            max_rank = std::max(max_rank,
                                static_cast<int>(q.space->product->dims.size()));
    }
    for (const Rat& R : scales) {
        BoxScaleReport sr;
        sr.R = R;
        // Bound budget proportional to the scale (the slab-cover guarantee);
        // members of diameter within the budget are coarse points at scale R
        // and contribute n = 0.
        sr.S_cap = R * 4 * max_rank;
        try {
            sr.profile = dim_profile(spaces, R, sr.S_cap, 2000000);
            sr.complete = true;
        } catch (const std::exception& e) {
            sr.note = e.what();
        }
        rep.scales.push_back(std::move(sr));
    }
    return rep;
}

}  // namespace boxdim

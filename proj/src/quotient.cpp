#include "boxdim/quotient.hpp"

#include "boxdim/apsp.hpp"

#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace boxdim {

namespace {

bool product_generators_standard(const SubgroupSpec& spec) {
    const auto& ls = spec.product_levels;
    for (const auto& mg : spec.host->marked_generators()) {
        if (mg.weight != Rat(1)) return false;
        const auto& code = spec.target->code(spec.elem_hom(mg.element));
        int nonzero = -1;
        for (size_t i = 0; i < code.size(); ++i) {
            if (code[i] == 0) continue;
            if (nonzero != -1) return false;
            nonzero = static_cast<int>(i);
            if (code[i] != 1 && code[i] != ls[i] - 1) return false;
        }
    }
    return true;
}

}  // namespace

FiniteQuotient build_quotient(const SubgroupSpec& spec, size_t index_cap) {
    spec.validate(2);
    FiniteQuotient q;
    q.spec = spec;
    auto cosets = spec.target->left_cosets(spec.subgroup);
    size_t n = cosets.rep.size();
    if (n > index_cap)
        throw ResourceError("quotient index exceeds cap", Rat(static_cast<long long>(n)));
    q.target_rep = cosets.rep;
    q.coset_of_elem = cosets.coset_of;
    q.basepoint = cosets.coset_of[spec.target->id()];

    const auto& gens = spec.host->marked_generators();
    WeightedGraph graph(static_cast<int>(n));
    for (int x = 0; x < static_cast<int>(n); ++x)
        for (size_t i = 0; i < gens.size(); ++i) {
            int y = cosets.coset_of[spec.target->mul(spec.gen_images[i], cosets.rep[x])];
            q.edges.push_back({x, y, gens[i].weight, gens[i].label});
            graph.adj[x].push_back({y, gens[i].weight});
        }

    // Schreier-tree representatives, BFS from the basepoint in generator order.
    q.rep.assign(n, GroupElement{});
    std::vector<char> seen(n, 0);
    q.rep[q.basepoint] = spec.host->identity();
    seen[q.basepoint] = 1;
    std::deque<int> frontier{q.basepoint};
    while (!frontier.empty()) {
        int x = frontier.front();
        frontier.pop_front();
        for (size_t i = 0; i < gens.size(); ++i) {
            int y = cosets.coset_of[spec.target->mul(spec.gen_images[i], cosets.rep[x])];
            if (!seen[y]) {
                seen[y] = 1;
                q.rep[y] = spec.host->multiply(gens[i].element, q.rep[x]);
                frontier.push_back(y);
            }
        }
    }
    for (char s : seen)
        if (!s) throw std::logic_error("Schreier graph disconnected: hom inconsistent");

    auto dist = apsp_parallel(graph);
    std::vector<std::string> labels;
    for (size_t x = 0; x < n; ++x) labels.push_back(spec.host->to_string(q.rep[x]));
    auto space = std::make_shared<FiniteMetricSpace>(spec.label, std::move(labels),
                                                     std::move(dist));
    if (!spec.product_levels.empty() && spec.subgroup.size() == 1 &&
        product_generators_standard(spec))
        space->product = ProductStructure{spec.product_levels};
    q.space = space;
    return q;
}

void export_edge_list(const FiniteQuotient& q, std::ostream& out) {
    out << "# quotient label=" << q.spec.label << "\n";
    out << "# index=" << q.size() << " basepoint=" << q.basepoint << "\n";
    for (const auto& e : q.edges)
        out << e.from << " " << e.to << " " << to_string(e.weight) << " " << e.gen_label
            << "\n";
}

void export_edge_list(const FiniteQuotient& q, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    export_edge_list(q, out);
}

SpacePtr load_edge_list_space(std::istream& in, const std::string& label) {
    struct RawEdge {
        int from, to;
        Rat w;
    };
    std::vector<RawEdge> edges;
    int max_id = -1;
    std::string line;
    std::string space_label = label;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto pos = line.find("label=");
            if (pos != std::string::npos) space_label = line.substr(pos + 6);
            continue;
        }
        std::istringstream ls(line);
        int a, b;
        std::string wtext, gen;
        if (!(ls >> a >> b >> wtext)) throw std::runtime_error("bad edge line: " + line);
        ls >> gen;  // optional generator label
        edges.push_back({a, b, parse_rat(wtext)});
        max_id = std::max(max_id, std::max(a, b));
    }
    if (max_id < 0) throw std::runtime_error("edge list has no edges");
    int n = max_id + 1;
    WeightedGraph graph(n);
    for (const auto& e : edges) graph.adj[e.from].push_back({e.to, e.w});
    auto dist = apsp_parallel(graph);
    for (const auto& d : dist)
        if (d < Rat(0)) throw std::runtime_error("edge list graph is disconnected");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    auto space =
        std::make_shared<FiniteMetricSpace>(space_label, std::move(labels), std::move(dist));

    // Recognize a single cycle (every vertex with exactly two distinct
    // neighbors, or n <= 2) so arc-shaped solvers can use coordinates.
    std::vector<std::set<int>> nb(n);
    bool unit = true;
    for (const auto& e : edges) {
        if (e.from != e.to) {
            nb[e.from].insert(e.to);
            nb[e.to].insert(e.from);
        }
        if (e.w != Rat(1)) unit = false;
    }
    // Point ids must already run around the cycle in order, so that the
    // attached coordinates agree with the ids (true for congruence exports).
    bool cycle = unit;
    for (int i = 0; i < n && cycle; ++i) {
        std::set<int> expect{(i + 1) % n, (i - 1 + n) % n};
        expect.erase(i);
        if (nb[i] != expect) cycle = false;
    }
    if (cycle) space->product = ProductStructure{{static_cast<long long>(n)}};
    return space;
}

SpacePtr load_edge_list_space(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    return load_edge_list_space(in, path);
}

}  // namespace boxdim

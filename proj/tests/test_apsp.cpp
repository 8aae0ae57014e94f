#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boxdim/apsp.hpp"
#include "boxdim/quotient.hpp"
#include "boxdim/subgroup.hpp"

#include <random>

using namespace boxdim;

namespace {

GroupPtr make(const char* s) { return std::make_shared<MarkedGroup>(parse_group(s)); }

WeightedGraph random_graph(std::mt19937& rng, int n, int extra_edges) {
    WeightedGraph g(n);
    std::uniform_int_distribution<int> node(0, n - 1);
    std::uniform_int_distribution<long long> num(1, 9);
    std::uniform_int_distribution<long long> den(1, 4);
    for (int v = 1; v < n; ++v)
        g.add_edge(v, static_cast<int>(rng() % static_cast<unsigned>(v)),
                   Rat(num(rng), den(rng)));
    for (int e = 0; e < extra_edges; ++e) {
        int a = node(rng), b = node(rng);
        if (a != b) g.add_edge(a, b, Rat(num(rng), den(rng)));
    }
    return g;
}

}  // namespace

TEST_CASE("parallel all-pairs distances are identical to the serial kernel") {
    std::mt19937 rng(3141);
    for (int t = 0; t < 20; ++t) {
        auto g = random_graph(rng, 5 + static_cast<int>(rng() % 60), 40);
        CHECK(apsp_serial(g) == apsp_parallel(g));
    }
}

TEST_CASE("both kernels agree on Schreier graphs with exact cycle distances") {
    auto Q = build_quotient(congruence_spec(make("free_abelian(2)"), {6, 5}));
    WeightedGraph g(Q.size());
    for (const auto& e : Q.edges)
        if (e.from < e.to) g.add_edge(e.from, e.to, e.weight);
    auto serial = apsp_serial(g);
    CHECK(serial == apsp_parallel(g));
    for (int x = 0; x < Q.size(); ++x)
        for (int y = 0; y < Q.size(); ++y)
            CHECK(serial[static_cast<size_t>(x) * Q.size() + y] == Q.dist(x, y));
}

TEST_CASE("disconnected vertices are reported unreachable by both kernels") {
    WeightedGraph g(4);
    g.add_edge(0, 1, Rat(1));
    auto d = apsp_serial(g);
    CHECK(d == apsp_parallel(g));
    CHECK(d[0 * 4 + 2] == Rat(-1));
    CHECK(d[2 * 4 + 3] == Rat(-1));
    CHECK(d[0 * 4 + 1] == Rat(1));
}

#include "boxdim/apsp.hpp"

#include <queue>
#include <utility>

namespace boxdim {

std::vector<Rat> dijkstra(const WeightedGraph& g, int source) {
    int n = g.size();
    std::vector<Rat> dist(n, Rat(-1));
    using QItem = std::pair<Rat, int>;
    std::priority_queue<QItem, std::vector<QItem>, std::greater<>> q;
    std::vector<char> done(n, 0);
    dist[source] = Rat(0);
    q.emplace(Rat(0), source);
    while (!q.empty()) {
        auto [d, v] = q.top();
        q.pop();
        if (done[v]) continue;
        done[v] = 1;
        for (const auto& e : g.adj[v]) {
            Rat nd = d + e.weight;
            if (dist[e.to] < Rat(0) || nd < dist[e.to]) {
                dist[e.to] = nd;
                q.emplace(nd, e.to);
            }
        }
    }
    return dist;
}

std::vector<Rat> apsp_serial(const WeightedGraph& g) {
    int n = g.size();
    std::vector<Rat> out(static_cast<size_t>(n) * n);
    for (int s = 0; s < n; ++s) {
        auto row = dijkstra(g, s);
        for (int j = 0; j < n; ++j) out[static_cast<size_t>(s) * n + j] = row[j];
    }
    return out;
}

std::vector<Rat> apsp_parallel(const WeightedGraph& g) {
    int n = g.size();
    std::vector<Rat> out(static_cast<size_t>(n) * n);
#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < n; ++s) {
        auto row = dijkstra(g, s);
        for (int j = 0; j < n; ++j) out[static_cast<size_t>(s) * n + j] = row[j];
    }
    return out;
}

}  // namespace boxdim

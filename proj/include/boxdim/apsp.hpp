#pragma once

#include "boxdim/rational.hpp"

#include <vector>

namespace boxdim {

/// Undirected graph with positive rational edge weights (adjacency lists).
struct WeightedGraph {
    struct Edge {
        int to;
        Rat weight;
    };
    explicit WeightedGraph(int n) : adj(n) {}
    int size() const { return static_cast<int>(adj.size()); }
    void add_edge(int a, int b, const Rat& w) {
        adj[a].push_back({b, w});
        adj[b].push_back({a, w});
    }
    std::vector<std::vector<Edge>> adj;
};

/// Single-source shortest paths. Unreachable vertices get distance -1.
std::vector<Rat> dijkstra(const WeightedGraph& g, int source);

/// All-pairs shortest paths as a flat n x n matrix, one Dijkstra per source.
std::vector<Rat> apsp_serial(const WeightedGraph& g);

/// Same result as apsp_serial; sources are distributed over OpenMP threads.
std::vector<Rat> apsp_parallel(const WeightedGraph& g);

}  // namespace boxdim

#include "curvlab/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "curvlab/rng.hpp"

namespace curvlab::gen {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

std::vector<Edge> tree_edges(std::size_t vertices, Rng& rng) {
    std::vector<Edge> edges;
    edges.reserve(vertices - 1);
    for (Vertex v = 1; v < vertices; ++v) edges.emplace_back(rng.below(v), v);
    return edges;
}

// Hop distance, giving up once it is known to be at least `cap`.
std::size_t capped_distance(const std::vector<std::set<Vertex>>& adj, Vertex from, Vertex to, std::size_t cap) {
    std::vector<bool> seen(adj.size(), false);
    std::vector<Vertex> frontier{from};
    seen[from] = true;
    for (std::size_t d = 0; d < cap; ++d) {
        if (frontier.empty()) break;
        std::vector<Vertex> next;
        for (Vertex u : frontier) {
            if (u == to) return d;
            for (Vertex w : adj[u]) {
                if (!seen[w]) {
                    seen[w] = true;
                    next.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    return cap;
}

}  // namespace

Graph cycle(std::size_t m) {
    require(m >= 3, "cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < m; ++v) edges.emplace_back(v, (v + 1) % m);
    return Graph(m, edges);
}

Graph star(std::size_t leaves) {
    require(leaves >= 1, "star needs at least 1 leaf");
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph(leaves + 1, edges);
}

Graph path(std::size_t vertices) {
    require(vertices >= 2, "path needs at least 2 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < vertices; ++v) edges.emplace_back(v, v + 1);
    return Graph(vertices, edges);
}

Graph complete(std::size_t vertices) {
    require(vertices >= 2, "complete graph needs at least 2 vertices");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < vertices; ++u) {
        for (Vertex v = u + 1; v < vertices; ++v) edges.emplace_back(u, v);
    }
    return Graph(vertices, edges);
}

Graph petersen() {
    // Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram 5..9.
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph(10, edges);
}

Graph random_tree(std::size_t vertices, std::uint64_t seed) {
    require(vertices >= 2, "tree needs at least 2 vertices");
    Rng rng(seed);
    return Graph(vertices, tree_edges(vertices, rng));
}

GirthGraph random_with_girth(std::size_t vertices, std::size_t target_edges, std::size_t min_girth,
                             std::uint64_t seed) {
    require(vertices >= 2, "random graph needs at least 2 vertices");
    require(min_girth >= 3, "minimum girth must be at least 3");
    require(target_edges >= vertices - 1, "target edges must be at least vertices - 1");
    require(target_edges <= vertices * (vertices - 1) / 2, "target edges exceed the complete graph");

    Rng rng(seed);
    std::vector<Edge> edges = tree_edges(vertices, rng);
    std::vector<std::set<Vertex>> adj(vertices);
    for (const auto& [u, v] : edges) {
        adj[u].insert(v);
        adj[v].insert(u);
    }

    const std::size_t max_edges = vertices * (vertices - 1) / 2;
    const std::size_t stall_limit = 50 * target_edges;
    std::size_t rejections = 0;
    while (edges.size() < target_edges && edges.size() < max_edges && rejections < stall_limit) {
        Vertex u = 0;
        Vertex v = 0;
        do {
            u = rng.below(vertices);
            v = rng.below(vertices);
        } while (u == v || adj[u].contains(v));

        if (capped_distance(adj, u, v, min_girth - 1) >= min_girth - 1) {
            adj[u].insert(v);
            adj[v].insert(u);
            edges.emplace_back(std::min(u, v), std::max(u, v));
            rejections = 0;
        } else {
            ++rejections;
        }
    }
    const bool reached = edges.size() >= target_edges;
    return GirthGraph{Graph(vertices, edges), reached};
}

}  // namespace curvlab::gen

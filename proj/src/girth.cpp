#include "curvlab/girth.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <vector>

namespace curvlab {

GirthValue GirthValue::finite(std::size_t length) {
    if (length < 3) throw std::invalid_argument("a cycle in a simple graph has length >= 3");
    return GirthValue(length);
}

std::string GirthValue::to_string() const {
    return length_ ? std::to_string(*length_) : std::string("inf");
}

GirthValue vertex_girth(const Graph& g, Vertex x) {
    constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> dist(n, unseen);
    std::vector<Vertex> branch(n, x);

    dist.at(x) = 0;
    std::deque<Vertex> queue;
    for (Vertex y : g.neighbors(x)) {
        dist[y] = 1;
        branch[y] = y;
        queue.push_back(y);
    }
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] == unseen) {
                dist[w] = dist[u] + 1;
                branch[w] = branch[u];
                queue.push_back(w);
            }
        }
    }

    // An edge joining two branches closes a cycle through x made of the two
    // tree paths; the shortest such edge gives the shortest cycle.
    std::size_t best = unseen;
    for (Vertex u = 0; u < n; ++u) {
        if (u == x || dist[u] == unseen) continue;
        for (Vertex w : g.neighbors(u)) {
            if (w <= u || w == x || dist[w] == unseen) continue;
            if (branch[u] != branch[w]) best = std::min(best, dist[u] + dist[w] + 1);
        }
    }
    return best == unseen ? GirthValue::infinite() : GirthValue::finite(best);
}

GirthValue graph_girth(const Graph& g) {
    GirthValue best = GirthValue::infinite();
    for (Vertex x = 0; x < g.vertex_count(); ++x) best = std::min(best, vertex_girth(g, x));
    return best;
}

bool has_girth_at_least(const Graph& g, std::size_t lower) {
    if (lower < 3) throw std::invalid_argument("girth bound must be >= 3");
    return graph_girth(g).at_least(lower);
}

}  // namespace curvlab

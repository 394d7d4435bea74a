#pragma once

#include <cstddef>
#include <cstdint>

#include "curvlab/graph.hpp"

// Deterministic test-graph families. Invalid parameters throw
// std::invalid_argument.
namespace curvlab::gen {

Graph cycle(std::size_t m);                                    // m >= 3
Graph star(std::size_t leaves);                                // center 0, leaves >= 1
Graph path(std::size_t vertices);                              // vertices >= 2
Graph complete(std::size_t vertices);                          // vertices >= 2
Graph petersen();
// Vertex i >= 1 attaches to a uniformly chosen vertex in [0, i).
Graph random_tree(std::size_t vertices, std::uint64_t seed);   // vertices >= 2

struct GirthGraph {
    Graph graph;
    // False when proposals stalled before target_edges was reached.
    bool reached_target = true;
};

// Random spanning tree plus random non-edges {u,v} accepted only when
// dist(u,v) >= min_girth - 1, so every cycle created has length >= min_girth.
// Gives up after 50 * target_edges consecutive rejections.
GirthGraph random_with_girth(std::size_t vertices, std::size_t target_edges, std::size_t min_girth,
                             std::uint64_t seed);

}  // namespace curvlab::gen

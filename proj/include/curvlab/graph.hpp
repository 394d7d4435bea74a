#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace curvlab {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// Raised for input that cannot form a valid graph.
class GraphError : public std::runtime_error {
public:
    enum class Kind { Parse, SelfLoop, Disconnected, IsolatedVertex, Empty };

    GraphError(Kind kind, std::size_t detail, const std::string& what)
        : std::runtime_error(what), kind_(kind), detail_(detail) {}

    Kind kind() const noexcept { return kind_; }
    // Line number for Parse, vertex id for SelfLoop / IsolatedVertex.
    std::size_t detail() const noexcept { return detail_; }

private:
    Kind kind_;
    std::size_t detail_;
};

// Finite, simple, undirected, connected graph without isolated vertices.
// Immutable after construction.
class Graph {
public:
    // Builds the graph on vertices 0..vertex_count-1. Duplicate edges (in
    // either orientation) collapse. Throws GraphError on self-loops, isolated
    // vertices or more than one component; std::out_of_range on bad ids.
    Graph(std::size_t vertex_count, std::span<const Edge> edges);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    // Sorted neighbor ids.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    bool adjacent(Vertex u, Vertex v) const;

    // Undirected edges with u < v in ascending lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

// Real-valued function on the vertices of a graph.
class VertexFunction {
public:
    VertexFunction() = default;
    explicit VertexFunction(std::size_t size, double fill = 0.0) : values_(size, fill) {}
    explicit VertexFunction(std::vector<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](Vertex v) const { return values_[v]; }
    double& operator[](Vertex v) { return values_[v]; }
    std::span<const double> values() const noexcept { return values_; }

    friend bool operator==(const VertexFunction&, const VertexFunction&) = default;

private:
    std::vector<double> values_;
};

// Vertices at distance one (s1) and two (s2) from a center. Coordinates are
// assigned to s1 first, then s2; the center has no coordinate.
class LocalBall {
public:
    LocalBall(Vertex center, std::vector<Vertex> s1, std::vector<Vertex> s2);

    Vertex center() const noexcept { return center_; }
    const std::vector<Vertex>& s1() const noexcept { return s1_; }
    const std::vector<Vertex>& s2() const noexcept { return s2_; }
    std::size_t dimension() const noexcept { return s1_.size() + s2_.size(); }

    // Vertex at coordinate i.
    Vertex vertex_at(std::size_t i) const { return i < s1_.size() ? s1_[i] : s2_.at(i - s1_.size()); }
    // Coordinate of v, or npos when v is not in s1 or s2.
    std::size_t coordinate(Vertex v) const;
    bool contains(Vertex v) const { return coordinate(v) != npos; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    Vertex center_;
    std::vector<Vertex> s1_;
    std::vector<Vertex> s2_;
    std::unordered_map<Vertex, std::size_t> index_;
};

struct ParseOptions {
    // Relabel sparse ids to 0..n-1 in increasing order instead of requiring
    // every id in 0..max_id to carry an edge.
    bool compact_ids = false;
};

// Reads "u v" lines; blank lines and lines starting with '#' are skipped.
// When ids are compacted, a notice is appended to `warnings` if given.
Graph parse_edge_list(std::string_view text, const ParseOptions& options = {},
                      std::vector<std::string>* warnings = nullptr);

// One "u v" line per edge (u < v) in ascending order, joined by LF with no
// trailing newline.
std::string serialize_edge_list(const Graph& g);

// Radius 1 or 2. Throws std::invalid_argument for any other radius.
LocalBall ball(const Graph& g, Vertex x, int radius);

// Hop distances from `source`; unreachable vertices never occur in a valid
// graph. Stops expanding past `limit` (entries beyond stay npos).
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source,
                                       std::size_t limit = static_cast<std::size_t>(-1));

}  // namespace curvlab

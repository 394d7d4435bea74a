#include "curvlab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <sstream>

namespace curvlab {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\v\f");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\v\f");
    return s.substr(first, last - first + 1);
}

bool parse_id(std::string_view token, std::size_t& out) {
    if (token.empty()) return false;
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

}  // namespace

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges) : adjacency_(vertex_count) {
    if (vertex_count == 0) {
        throw GraphError(GraphError::Kind::Empty, 0, "graph has no vertices");
    }
    for (const auto& [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count) {
            throw std::out_of_range("edge endpoint outside 0.." + std::to_string(vertex_count - 1));
        }
        if (u == v) {
            throw GraphError(GraphError::Kind::SelfLoop, u, "self-loop at vertex " + std::to_string(u));
        }
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        edge_count_ += nbrs.size();
    }
    edge_count_ /= 2;

    for (Vertex v = 0; v < vertex_count; ++v) {
        if (adjacency_[v].empty()) {
            throw GraphError(GraphError::Kind::IsolatedVertex, v, "vertex " + std::to_string(v) + " is isolated");
        }
    }
    const auto dist = bfs_distances(*this, 0);
    if (std::find(dist.begin(), dist.end(), kUnreached) != dist.end()) {
        throw GraphError(GraphError::Kind::Disconnected, 0, "graph is not connected");
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& nbrs = adjacency_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adjacency_.size(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

VertexFunction::VertexFunction(std::vector<double> values) : values_(std::move(values)) {
    for (double v : values_) {
        if (!std::isfinite(v)) throw std::invalid_argument("vertex function has a non-finite value");
    }
}

LocalBall::LocalBall(Vertex center, std::vector<Vertex> s1, std::vector<Vertex> s2)
    : center_(center), s1_(std::move(s1)), s2_(std::move(s2)) {
    for (std::size_t i = 0; i < dimension(); ++i) index_.emplace(vertex_at(i), i);
}

std::size_t LocalBall::coordinate(Vertex v) const {
    const auto it = index_.find(v);
    return it == index_.end() ? npos : it->second;
}

Graph parse_edge_list(std::string_view text, const ParseOptions& options, std::vector<std::string>* warnings) {
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        line = trim(line);
        if (line.empty() || line.front() == '#') continue;

        const auto split = line.find_first_of(" \t");
        if (split == std::string_view::npos) {
            throw GraphError(GraphError::Kind::Parse, line_no, "line " + std::to_string(line_no) + ": expected \"u v\"");
        }
        std::size_t u = 0;
        std::size_t v = 0;
        if (!parse_id(line.substr(0, split), u) || !parse_id(trim(line.substr(split)), v)) {
            throw GraphError(GraphError::Kind::Parse, line_no,
                             "line " + std::to_string(line_no) + ": expected two non-negative integers");
        }
        if (u == v) {
            throw GraphError(GraphError::Kind::SelfLoop, u, "self-loop at vertex " + std::to_string(u));
        }
        edges.emplace_back(u, v);
    }
    if (edges.empty()) throw GraphError(GraphError::Kind::Empty, 0, "edge list contains no edges");

    if (options.compact_ids) {
        std::map<std::size_t, Vertex> relabel;
        for (const auto& [u, v] : edges) {
            relabel.emplace(u, 0);
            relabel.emplace(v, 0);
        }
        Vertex next = 0;
        for (auto& [id, label] : relabel) label = next++;
        const bool dense = relabel.rbegin()->first + 1 == relabel.size();
        if (!dense && warnings != nullptr) {
            warnings->push_back("compacted " + std::to_string(relabel.size()) + " sparse vertex ids to 0.." +
                                std::to_string(relabel.size() - 1));
        }
        for (auto& [u, v] : edges) {
            u = relabel[u];
            v = relabel[v];
        }
        return Graph(relabel.size(), edges);
    }

    std::size_t max_id = 0;
    for (const auto& [u, v] : edges) max_id = std::max({max_id, u, v});
    return Graph(max_id + 1, edges);
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [u, v] : g.edges()) {
        if (!first) out << '\n';
        out << u << ' ' << v;
        first = false;
    }
    return out.str();
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source, std::size_t limit) {
    std::vector<std::size_t> dist(g.vertex_count(), kUnreached);
    std::deque<Vertex> queue{source};
    dist.at(source) = 0;
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        if (dist[u] >= limit) continue;
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] == kUnreached) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

LocalBall ball(const Graph& g, Vertex x, int radius) {
    if (radius != 1 && radius != 2) throw std::invalid_argument("ball radius must be 1 or 2");
    std::vector<Vertex> s1 = g.neighbors(x);
    std::vector<Vertex> s2;
    if (radius == 2) {
        const auto dist = bfs_distances(g, x, 2);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (dist[v] == 2) s2.push_back(v);
        }
    }
    return LocalBall(x, std::move(s1), std::move(s2));
}

}  // namespace curvlab

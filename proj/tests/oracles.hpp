#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check (no LocalBall, no SymMatrix, no BFS girth).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "curvlab/generators.hpp"
#include "curvlab/graph.hpp"
#include "curvlab/operators.hpp"
#include "curvlab/rng.hpp"

namespace oracle {

using curvlab::Graph;
using curvlab::Vertex;

// Shortest simple cycle through x by exhaustive DFS over simple paths.
// nullopt means no cycle.
inline std::optional<std::size_t> shortest_cycle_through(const Graph& g, Vertex x) {
    std::optional<std::size_t> best;
    std::vector<bool> on_path(g.vertex_count(), false);
    std::function<void(Vertex, std::size_t)> walk = [&](Vertex u, std::size_t len) {
        if (best && len + 1 >= *best) return;
        for (Vertex w : g.neighbors(u)) {
            if (w == x && len >= 2) {
                best = len + 1;
            } else if (!on_path[w] && w != x) {
                on_path[w] = true;
                walk(w, len + 1);
                on_path[w] = false;
            }
        }
    };
    on_path[x] = true;
    walk(x, 0);
    return best;
}

// Vertices at exact distance 1 and 2 by brute-force neighbor expansion.
inline std::pair<std::vector<Vertex>, std::vector<Vertex>> spheres(const Graph& g, Vertex x) {
    std::vector<Vertex> s1;
    std::vector<Vertex> s2;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (v == x) continue;
        if (g.adjacent(x, v)) {
            s1.push_back(v);
            continue;
        }
        for (Vertex y : g.neighbors(x)) {
            if (g.adjacent(y, v)) {
                s2.push_back(v);
                break;
            }
        }
    }
    return {s1, s2};
}

// Minimizes num(u)/den(u) over u with den(u) > 0, given two quadratic forms
// evaluated as black boxes. Random restarts, then exact line minimization
// of the ratio along coordinates for the best few starts.
struct RayleighOracle {
    using Quadratic = std::function<double(const std::vector<double>&)>;

    Quadratic num;
    Quadratic den;
    std::size_t dim = 0;
    std::size_t restarts = 10000;
    std::size_t polish = 8;
    int sweeps = 4000;

    double minimize(std::uint64_t seed) const {
        curvlab::Rng rng(seed);
        std::vector<std::pair<double, std::vector<double>>> starts;
        for (std::size_t r = 0; r < restarts; ++r) {
            std::vector<double> u(dim);
            for (double& x : u) x = rng.uniform(-1.0, 1.0);
            const double d = den(u);
            if (d <= 0.0) continue;
            starts.emplace_back(num(u) / d, std::move(u));
        }
        std::sort(starts.begin(), starts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t s = 0; s < std::min(polish, starts.size()); ++s) {
            best = std::min(best, descend(starts[s].second));
        }
        return best;
    }

    // Coordinate descent with exact minimization of
    // (a + 2bt + ct^2) / (p + 2qt + rt^2) along each coordinate direction.
    double descend(std::vector<double> u) const {
        double current = num(u) / den(u);
        for (int sweep = 0; sweep < sweeps; ++sweep) {
            const double before = current;
            for (std::size_t i = 0; i < dim; ++i) {
                std::vector<double> e(dim, 0.0);
                e[i] = 1.0;
                current = line_min(u, e, current);
            }
            if (before - current <= 1e-15 * std::max(1.0, std::abs(current))) break;
        }
        return current;
    }

    double line_min(std::vector<double>& u, const std::vector<double>& dir, double current) const {
        const auto shifted = [&](double t) {
            std::vector<double> v = u;
            for (std::size_t k = 0; k < dim; ++k) v[k] += t * dir[k];
            return v;
        };
        const double a = num(u), p = den(u);
        const double np = num(shifted(1.0)), nm = num(shifted(-1.0));
        const double dp = den(shifted(1.0)), dm = den(shifted(-1.0));
        const double c = 0.5 * (np + nm) - a, b = 0.25 * (np - nm);
        const double r = 0.5 * (dp + dm) - p, q = 0.25 * (dp - dm);
        // Stationary points of the ratio: (cq - br)t^2 + (cp - ar)t + (bp - aq) = 0.
        const double qa = c * q - b * r, qb = c * p - a * r, qc = b * p - a * q;
        std::vector<double> roots;
        if (std::abs(qa) > 1e-300) {
            const double disc = qb * qb - 4.0 * qa * qc;
            if (disc >= 0.0) {
                const double s = std::sqrt(disc);
                roots.push_back((-qb + s) / (2.0 * qa));
                roots.push_back((-qb - s) / (2.0 * qa));
            }
        } else if (std::abs(qb) > 1e-300) {
            roots.push_back(-qc / qb);
        }
        double best_t = 0.0;
        for (double t : roots) {
            if (!std::isfinite(t)) continue;
            const double dd = p + 2.0 * q * t + r * t * t;
            if (dd <= 1e-14 * std::max(1.0, p)) continue;
            const double val = (a + 2.0 * b * t + c * t * t) / dd;
            if (val < current) {
                current = val;
                best_t = t;
            }
        }
        if (best_t != 0.0) {
            for (std::size_t k = 0; k < dim; ++k) u[k] += best_t * dir[k];
            // Keep the scale bounded; the ratio is scale invariant.
            double norm = 0.0;
            for (double x : u) norm += x * x;
            norm = std::sqrt(norm);
            if (norm > 0.0) {
                for (double& x : u) x /= norm;
            }
            current = num(u) / den(u);
        }
        return current;
    }
};

// Minimum of (Γ2 - (1/n)(Δf)^2) / Γ over the 2-ball coordinates, evaluated
// through the local operator formulas only.
inline double cd_rayleigh(const Graph& g, Vertex x, double n, std::size_t restarts, std::uint64_t seed) {
    const auto [s1, s2] = spheres(g, x);
    std::vector<Vertex> coords = s1;
    coords.insert(coords.end(), s2.begin(), s2.end());
    const auto load = [&](const std::vector<double>& u) {
        curvlab::VertexFunction f(g.vertex_count());
        for (std::size_t i = 0; i < u.size(); ++i) f[coords[i]] = u[i];
        return f;
    };
    RayleighOracle search;
    search.dim = coords.size();
    search.restarts = restarts;
    search.num = [&](const std::vector<double>& u) {
        const curvlab::VertexFunction f = load(u);
        const double l = curvlab::laplacian(g, f, x);
        return curvlab::gamma2_local(g, f, x) - (std::isinf(n) ? 0.0 : l * l / n);
    };
    search.den = [&](const std::vector<double>& u) { return curvlab::gamma_local(g, load(u), x); };
    return search.minimize(seed);
}

// ------------------------------------------------------------ test corpus

inline std::vector<Graph> random_girth5_graphs(std::size_t count, std::uint64_t base_seed) {
    std::vector<Graph> out;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = 20 + (i * 7) % 21;  // 20..40 vertices
        const std::size_t m = n + 3 + i % 8;
        out.push_back(curvlab::gen::random_with_girth(n, m, 5, base_seed + i).graph);
    }
    return out;
}

inline std::vector<Graph> random_trees(std::size_t count, std::uint64_t base_seed) {
    std::vector<Graph> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(curvlab::gen::random_tree(8 + 3 * i, base_seed + i));
    return out;
}

// Random graph with at most max_vertices vertices and arbitrary girth: a
// random tree plus a few random chords.
inline Graph random_small_graph(curvlab::Rng& rng, std::size_t max_vertices) {
    const std::size_t n = 3 + rng.below(max_vertices - 2);
    std::vector<curvlab::Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(rng.below(v), v);
    const std::size_t extra = rng.below(n + 1);
    for (std::size_t k = 0; k < extra; ++k) {
        const Vertex u = rng.below(n), v = rng.below(n);
        if (u != v) edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

inline curvlab::VertexFunction random_function(curvlab::Rng& rng, std::size_t n, double lo = -1.0,
                                               double hi = 1.0) {
    std::vector<double> values(n);
    for (double& v : values) v = rng.uniform(lo, hi);
    return curvlab::VertexFunction(std::move(values));
}

inline bool close(double a, double b, double rel, double abs_floor = 1e-12) {
    return std::abs(a - b) <= std::max(abs_floor, rel * std::max(std::abs(a), std::abs(b)));
}

}  // namespace oracle

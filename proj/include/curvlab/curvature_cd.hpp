#pragma once

#include <limits>

#include "curvlab/graph.hpp"
#include "curvlab/spectra.hpp"

namespace curvlab {

// Passing this as the dimension drops the (1/n)(Δf)^2 term.
inline constexpr double kInfiniteDimension = std::numeric_limits<double>::infinity();

// Quadratic forms over the coordinates of a radius-2 ball, with f(x) = 0:
//   a: f -> Γ2(f)(x) - (1/n)(Δf(x))^2
//   b: f -> Γ(f)(x)
struct CdForms {
    SymMatrix a;
    SymMatrix b;
    LocalBall ball;
};

// Largest K with Γ2(f)(x) >= (1/n)(Δf)^2(x) + K Γ(f)(x) for every f.
struct CdResult {
    Vertex vertex = 0;
    double dimension_n = 2.0;
    double curvature_k = 0.0;
    // Attains the bound: zero at x and outside the 2-ball, Γ(f)(x) = 1/(2 d_x).
    VertexFunction minimizing_function;
};

// Throws std::invalid_argument unless n > 0 (n may be kInfiniteDimension).
CdForms assemble_cd_forms(const Graph& g, Vertex x, double n);

// Eliminates the distance-2 coordinates of `a` by Schur complement, then
// K = 2 d_x * λ_min of what remains.
CdResult cd_curvature(const Graph& g, Vertex x, double n);

// Γ2(f)(x) + 1e-12 >= (1/n)(Δf)^2(x) + K Γ(f)(x).
bool cd_check(const Graph& g, Vertex x, double n, double k, const VertexFunction& f);

}  // namespace curvlab

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "curvlab/graph.hpp"

// Normalized graph Laplacian and the gamma calculus built on it. Edge
// differences follow f(x,y) = f(y) - f(x) throughout.
//
// Most operators come in two independent flavours: a definitional one that
// applies the Laplacian to products of fields, and a closed local formula.
// They are meant to check each other.

namespace curvlab {

class OperatorError : public std::runtime_error {
public:
    enum class Kind { IterationTooDeep, NonpositiveValue };

    OperatorError(Kind kind, std::size_t detail, const std::string& what)
        : std::runtime_error(what), kind_(kind), detail_(detail) {}

    Kind kind() const noexcept { return kind_; }
    // Requested depth for IterationTooDeep, vertex id for NonpositiveValue.
    std::size_t detail() const noexcept { return detail_; }

private:
    Kind kind_;
    std::size_t detail_;
};

inline constexpr unsigned kMaxGammaIteration = 4;

// (1/d_x) * sum over y ~ x of (f(y) - f(x)).
double laplacian(const Graph& g, const VertexFunction& f, Vertex x);

// 1/2 (Δ(fh) - fΔh - hΔf)(x), evaluated through the Laplacian.
double gamma(const Graph& g, const VertexFunction& f, const VertexFunction& h, Vertex x);
inline double gamma(const Graph& g, const VertexFunction& f, Vertex x) { return gamma(g, f, f, x); }

// (1/(2 d_x)) * sum over y ~ x of (f(y) - f(x))^2.
double gamma_local(const Graph& g, const VertexFunction& f, Vertex x);

// Γ_0(f,h) = fh, Γ_{i+1}(f,h) = 1/2 (ΔΓ_i(f,h) - Γ_i(f,Δh) - Γ_i(Δf,h)).
// Materializes whole-graph fields, so the cost grows like 3^i * |E|.
// Throws OperatorError(IterationTooDeep) for i > kMaxGammaIteration.
double gamma_iterate(const Graph& g, const VertexFunction& f, const VertexFunction& h, Vertex x, unsigned i);

// 1/2 ΔΓ(f)(x) - Γ(f, Δf)(x).
double gamma2(const Graph& g, const VertexFunction& f, Vertex x);

// 1/2 ((Δf)^2 + μ_x Σ_{y~x} μ_y Σ_{z~y} (f(y,z)^2 - 1/2 f(x,z)^2)) with
// μ_v = 1/d_v; the inner sum includes z = x.
double gamma2_local(const Graph& g, const VertexFunction& f, Vertex x);

// Γ(f, Γ(f)/f)(x) with Γ(f)/f formed as a field and fed to gamma().
// Throws OperatorError(NonpositiveValue) if f <= 0 somewhere on the 2-ball.
double gamma_f_ratio(const Graph& g, const VertexFunction& f, Vertex x);

// Γ(f, Γ(f)/f)(x) = I1 - I2 - I3 with
//   I1 = 1/2 ΔΓ(f)(x)             (expanded edge by edge)
//   I2 = 1/2 f(x) Δ(Γ(f)/f)(x)
//   I3 = 1/2 (Γ(f)(x)/f(x)) Δf(x)
// using only the local formula for Γ.
struct RatioTerms {
    double i1 = 0.0;
    double i2 = 0.0;
    double i3 = 0.0;
    double value() const noexcept { return i1 - i2 - i3; }
};
RatioTerms gamma_f_ratio_terms(const Graph& g, const VertexFunction& f, Vertex x);
inline double gamma_f_ratio_split(const Graph& g, const VertexFunction& f, Vertex x) {
    return gamma_f_ratio_terms(g, f, x).value();
}

}  // namespace curvlab

#include "curvlab/curvature_cd.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "curvlab/operators.hpp"

namespace curvlab {

namespace {

constexpr double kCheckTolerance = 1e-12;

void require_dimension(double n) {
    if (!(n > 0.0)) throw std::invalid_argument("dimension n must be positive");
}

double inverse_dimension(double n) { return std::isinf(n) ? 0.0 : 1.0 / n; }

}  // namespace

CdForms assemble_cd_forms(const Graph& g, Vertex x, double n) {
    require_dimension(n);
    LocalBall local = ball(g, x, 2);
    const std::size_t dim = local.dimension();
    const std::size_t n1 = local.s1().size();
    const double mu_x = 1.0 / static_cast<double>(g.degree(x));

    SymMatrix a(dim);
    SymMatrix b(dim);

    // (1/2 - 1/n)(Δf)^2 with Δf(x) = μ_x Σ f(y).
    const double lap_weight = (0.5 - inverse_dimension(n)) * mu_x * mu_x;
    for (std::size_t i = 0; i < n1; ++i) {
        b.set(i, i, 0.5 * mu_x);
        for (std::size_t j = i; j < n1; ++j) a.add(i, j, lap_weight);
    }

    // 1/2 μ_x μ_y ((f(z) - f(y))^2 - 1/2 f(z)^2) for each y ~ x, z ~ y.
    for (std::size_t i = 0; i < n1; ++i) {
        const Vertex y = local.s1()[i];
        const double c = 0.5 * mu_x / static_cast<double>(g.degree(y));
        for (Vertex z : g.neighbors(y)) {
            a.add(i, i, c);
            if (z == x) continue;
            const std::size_t k = local.coordinate(z);
            a.add(k, k, 0.5 * c);
            a.add(i, k, -c);
        }
    }
    return CdForms{std::move(a), std::move(b), std::move(local)};
}

CdResult cd_curvature(const Graph& g, Vertex x, double n) {
    const CdForms forms = assemble_cd_forms(g, x, n);
    const std::size_t n1 = forms.ball.s1().size();
    std::vector<std::size_t> keep(n1);
    std::iota(keep.begin(), keep.end(), 0);

    const SchurResult reduced = schur_minimize(forms.a, keep);
    const EigenPair eig = smallest_eigenvalue(reduced.complement);
    const std::vector<double> coords = reduced.expand(eig.vector);

    CdResult result;
    result.vertex = x;
    result.dimension_n = n;
    result.curvature_k = 2.0 * static_cast<double>(g.degree(x)) * eig.value;
    result.minimizing_function = VertexFunction(g.vertex_count());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        result.minimizing_function[forms.ball.vertex_at(i)] = coords[i];
    }
    return result;
}

bool cd_check(const Graph& g, Vertex x, double n, double k, const VertexFunction& f) {
    require_dimension(n);
    const double lap = laplacian(g, f, x);
    const double lhs = gamma2(g, f, x);
    const double rhs = inverse_dimension(n) * lap * lap + k * gamma(g, f, x);
    return lhs + kCheckTolerance >= rhs;
}

}  // namespace curvlab

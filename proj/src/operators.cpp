#include "curvlab/operators.hpp"

#include <vector>

namespace curvlab {

namespace {

void require_matching(const Graph& g, const VertexFunction& f) {
    if (f.size() != g.vertex_count()) {
        throw std::invalid_argument("vertex function has " + std::to_string(f.size()) + " values, graph has " +
                                    std::to_string(g.vertex_count()) + " vertices");
    }
}

// Fields below are callables Vertex -> double, evaluated lazily so that each
// operator only touches the part of the graph it needs.

template <class Field>
double lap(const Graph& g, Vertex x, const Field& field) {
    const double fx = field(x);
    double sum = 0.0;
    for (Vertex y : g.neighbors(x)) sum += field(y) - fx;
    return sum / static_cast<double>(g.degree(x));
}

template <class FieldF, class FieldH>
double gam(const Graph& g, Vertex x, const FieldF& f, const FieldH& h) {
    const auto product = [&](Vertex v) { return f(v) * h(v); };
    return 0.5 * (lap(g, x, product) - f(x) * lap(g, x, h) - h(x) * lap(g, x, f));
}

std::vector<double> lap_field(const Graph& g, const std::vector<double>& values) {
    std::vector<double> out(values.size());
    const auto field = [&](Vertex v) { return values[v]; };
    for (Vertex v = 0; v < values.size(); ++v) out[v] = lap(g, v, field);
    return out;
}

std::vector<double> iterate_field(const Graph& g, const std::vector<double>& f, const std::vector<double>& h,
                                  unsigned i) {
    if (i == 0) {
        std::vector<double> out(f.size());
        for (std::size_t v = 0; v < f.size(); ++v) out[v] = f[v] * h[v];
        return out;
    }
    const auto base = lap_field(g, iterate_field(g, f, h, i - 1));
    const auto left = iterate_field(g, f, lap_field(g, h), i - 1);
    const auto right = iterate_field(g, lap_field(g, f), h, i - 1);
    std::vector<double> out(f.size());
    for (std::size_t v = 0; v < f.size(); ++v) out[v] = 0.5 * (base[v] - left[v] - right[v]);
    return out;
}

double local_gamma(const Graph& g, const VertexFunction& f, Vertex x) {
    const double fx = f[x];
    double sum = 0.0;
    for (Vertex y : g.neighbors(x)) {
        const double d = f[y] - fx;
        sum += d * d;
    }
    return sum / (2.0 * static_cast<double>(g.degree(x)));
}

void require_positive_on_ball(const Graph& g, const VertexFunction& f, Vertex x) {
    const auto check = [&](Vertex v) {
        if (!(f[v] > 0.0)) {
            throw OperatorError(OperatorError::Kind::NonpositiveValue, v,
                                "function must be positive, f(" + std::to_string(v) + ") <= 0");
        }
    };
    check(x);
    for (Vertex y : g.neighbors(x)) {
        check(y);
        for (Vertex z : g.neighbors(y)) check(z);
    }
}

}  // namespace

double laplacian(const Graph& g, const VertexFunction& f, Vertex x) {
    require_matching(g, f);
    return lap(g, x, [&](Vertex v) { return f[v]; });
}

double gamma(const Graph& g, const VertexFunction& f, const VertexFunction& h, Vertex x) {
    require_matching(g, f);
    require_matching(g, h);
    return gam(g, x, [&](Vertex v) { return f[v]; }, [&](Vertex v) { return h[v]; });
}

double gamma_local(const Graph& g, const VertexFunction& f, Vertex x) {
    require_matching(g, f);
    return local_gamma(g, f, x);
}

double gamma_iterate(const Graph& g, const VertexFunction& f, const VertexFunction& h, Vertex x, unsigned i) {
    require_matching(g, f);
    require_matching(g, h);
    if (i > kMaxGammaIteration) {
        throw OperatorError(OperatorError::Kind::IterationTooDeep, i,
                            "gamma iteration depth " + std::to_string(i) + " exceeds " +
                                std::to_string(kMaxGammaIteration));
    }
    if (x >= g.vertex_count()) throw std::out_of_range("vertex out of range");
    const std::vector<double> fv(f.values().begin(), f.values().end());
    const std::vector<double> hv(h.values().begin(), h.values().end());
    return iterate_field(g, fv, hv, i)[x];
}

double gamma2(const Graph& g, const VertexFunction& f, Vertex x) {
    require_matching(g, f);
    const auto fn = [&](Vertex v) { return f[v]; };
    const auto gamma_f = [&](Vertex v) { return gam(g, v, fn, fn); };
    const auto lap_f = [&](Vertex v) { return lap(g, v, fn); };
    return 0.5 * lap(g, x, gamma_f) - gam(g, x, fn, lap_f);
}

double gamma2_local(const Graph& g, const VertexFunction& f, Vertex x) {
    require_matching(g, f);
    const double fx = f[x];
    double lap_x = 0.0;
    double outer = 0.0;
    for (Vertex y : g.neighbors(x)) {
        const double fy = f[y];
        lap_x += fy - fx;
        double inner = 0.0;
        for (Vertex z : g.neighbors(y)) {
            const double yz = f[z] - fy;
            const double xz = f[z] - fx;
            inner += yz * yz - 0.5 * xz * xz;
        }
        outer += inner / static_cast<double>(g.degree(y));
    }
    const double dx = static_cast<double>(g.degree(x));
    lap_x /= dx;
    return 0.5 * (lap_x * lap_x + outer / dx);
}

double gamma_f_ratio(const Graph& g, const VertexFunction& f, Vertex x) {
    require_matching(g, f);
    require_positive_on_ball(g, f, x);
    const auto fn = [&](Vertex v) { return f[v]; };
    const auto ratio = [&](Vertex v) { return gam(g, v, fn, fn) / f[v]; };
    return gam(g, x, fn, ratio);
}

RatioTerms gamma_f_ratio_terms(const Graph& g, const VertexFunction& f, Vertex x) {
    require_matching(g, f);
    require_positive_on_ball(g, f, x);
    const double fx = f[x];
    const double dx = static_cast<double>(g.degree(x));
    const double gamma_x = local_gamma(g, f, x);

    double i1 = 0.0;
    double ratio_diffs = 0.0;
    double lap_x = 0.0;
    for (Vertex y : g.neighbors(x)) {
        const double fy = f[y];
        const double xy = fy - fx;
        double inner = 0.0;
        for (Vertex z : g.neighbors(y)) {
            const double yz = f[z] - fy;
            inner += yz * yz - xy * xy;
        }
        i1 += 0.5 * inner / static_cast<double>(g.degree(y));
        ratio_diffs += local_gamma(g, f, y) / fy - gamma_x / fx;
        lap_x += xy;
    }
    lap_x /= dx;

    RatioTerms terms;
    terms.i1 = 0.5 * i1 / dx;
    terms.i2 = 0.5 * fx * ratio_diffs / dx;
    terms.i3 = 0.5 * (gamma_x / fx) * lap_x;
    return terms;
}

}  // namespace curvlab

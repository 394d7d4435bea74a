#include "curvlab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace curvlab {

namespace {

constexpr double kJacobiTolerance = 1e-12;
constexpr int kMaxSweeps = 100;

// Row-major dense scratch matrix used by the solvers.
struct Dense {
    std::size_t n = 0;
    std::vector<double> a;

    explicit Dense(std::size_t size) : n(size), a(size * size, 0.0) {}
    double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

void rotate(Dense& a, Dense& v, std::size_t p, std::size_t q) {
    const double apq = a(p, q);
    if (apq == 0.0) return;
    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    for (std::size_t k = 0; k < a.n; ++k) {
        const double akp = a(k, p);
        const double akq = a(k, q);
        a(k, p) = c * akp - s * akq;
        a(k, q) = s * akp + c * akq;
    }
    for (std::size_t k = 0; k < a.n; ++k) {
        const double apk = a(p, k);
        const double aqk = a(q, k);
        a(p, k) = c * apk - s * aqk;
        a(q, k) = s * apk + c * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;

    for (std::size_t k = 0; k < v.n; ++k) {
        const double vkp = v(k, p);
        const double vkq = v(k, q);
        v(k, p) = c * vkp - s * vkq;
        v(k, q) = s * vkp + c * vkq;
    }
}

bool converged(const Dense& a) {
    double off = 0.0;
    double diag = 0.0;
    for (std::size_t i = 0; i < a.n; ++i) {
        for (std::size_t j = 0; j < a.n; ++j) {
            const double x = a(i, j);
            (i == j ? diag : off) += x * x;
        }
    }
    return off == 0.0 || std::sqrt(off) < kJacobiTolerance * std::sqrt(diag);
}

}  // namespace

SymMatrix SymMatrix::identity(std::size_t dimension) {
    SymMatrix m(dimension);
    for (std::size_t i = 0; i < dimension; ++i) m.set(i, i, 1.0);
    return m;
}

SymMatrix SymMatrix::diagonal(std::span<const double> entries) {
    SymMatrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, i, entries[i]);
    return m;
}

void SymMatrix::set(std::size_t i, std::size_t j, double value) {
    data_.at(i * dim_ + j) = value;
    data_.at(j * dim_ + i) = value;
}

void SymMatrix::add(std::size_t i, std::size_t j, double value) {
    data_.at(i * dim_ + j) += value;
    if (i != j) data_.at(j * dim_ + i) += value;
}

double SymMatrix::quadratic(std::span<const double> u) const {
    if (u.size() != dim_) throw std::invalid_argument("vector length does not match matrix dimension");
    double sum = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < dim_; ++j) row += (*this)(i, j) * u[j];
        sum += u[i] * row;
    }
    return sum;
}

std::vector<double> SymMatrix::multiply(std::span<const double> u) const {
    if (u.size() != dim_) throw std::invalid_argument("vector length does not match matrix dimension");
    std::vector<double> out(dim_, 0.0);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) out[i] += (*this)(i, j) * u[j];
    }
    return out;
}

double SymMatrix::frobenius_norm() const {
    return std::sqrt(std::inner_product(data_.begin(), data_.end(), data_.begin(), 0.0));
}

bool SymMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

SymMatrix SymMatrix::submatrix(std::span<const std::size_t> indices) const {
    SymMatrix out(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        for (std::size_t j = i; j < indices.size(); ++j) out.set(i, j, (*this)(indices[i], indices[j]));
    }
    return out;
}

EigenPair smallest_eigenvalue(const SymMatrix& m) {
    const std::size_t n = m.dimension();
    if (n == 0) throw SpectraError(SpectraError::Kind::Empty, "eigenproblem of dimension 0");
    if (!m.all_finite()) throw SpectraError(SpectraError::Kind::NonFinite, "matrix has non-finite entries");

    Dense a(n);
    Dense v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v(i, i) = 1.0;
        for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    }
    for (int sweep = 0; sweep < kMaxSweeps && !converged(a); ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (a(i, i) < a(best, best)) best = i;
    }
    EigenPair out;
    out.value = a(best, best);
    out.vector.resize(n);
    double norm = 0.0;
    std::size_t peak = 0;
    for (std::size_t k = 0; k < n; ++k) {
        out.vector[k] = v(k, best);
        norm += out.vector[k] * out.vector[k];
        if (std::abs(out.vector[k]) > std::abs(out.vector[peak])) peak = k;
    }
    norm = std::sqrt(norm);
    const double sign = out.vector[peak] < 0.0 ? -1.0 : 1.0;
    for (double& x : out.vector) x *= sign / norm;
    return out;
}

std::vector<double> SchurResult::minimizer(std::span<const double> kept_values) const {
    if (kept_values.size() != keep.size()) throw std::invalid_argument("kept vector has wrong length");
    std::vector<double> w(eliminated.size(), 0.0);
    for (std::size_t i = 0; i < eliminated.size(); ++i) {
        for (std::size_t j = 0; j < keep.size(); ++j) w[i] += back_substitution[i * keep.size() + j] * kept_values[j];
    }
    return w;
}

std::vector<double> SchurResult::expand(std::span<const double> kept_values) const {
    const auto w = minimizer(kept_values);
    std::vector<double> full(keep.size() + eliminated.size(), 0.0);
    for (std::size_t j = 0; j < keep.size(); ++j) full[keep[j]] = kept_values[j];
    for (std::size_t i = 0; i < eliminated.size(); ++i) full[eliminated[i]] = w[i];
    return full;
}

SchurResult schur_minimize(const SymMatrix& m, std::span<const std::size_t> keep) {
    const std::size_t n = m.dimension();
    if (!m.all_finite()) throw SpectraError(SpectraError::Kind::NonFinite, "matrix has non-finite entries");

    SchurResult out;
    std::vector<bool> kept(n, false);
    for (std::size_t k : keep) {
        if (k >= n || kept[k]) throw std::invalid_argument("keep set has an invalid or repeated index");
        kept[k] = true;
        out.keep.push_back(k);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!kept[i]) out.eliminated.push_back(i);
    }
    const std::size_t nk = out.keep.size();
    const std::size_t ne = out.eliminated.size();
    if (ne == 0) {
        out.complement = m.submatrix(out.keep);
        return out;
    }

    // Pivoted Cholesky: L L^T = P M_ee P^T, pivot order in `perm`.
    Dense work(ne);
    for (std::size_t i = 0; i < ne; ++i) {
        for (std::size_t j = 0; j < ne; ++j) work(i, j) = m(out.eliminated[i], out.eliminated[j]);
    }
    std::vector<std::size_t> perm(ne);
    std::iota(perm.begin(), perm.end(), 0);
    Dense lower(ne);
    for (std::size_t k = 0; k < ne; ++k) {
        std::size_t pivot = k;
        for (std::size_t j = k + 1; j < ne; ++j) {
            if (work(j, j) > work(pivot, pivot)) pivot = j;
        }
        if (!(work(pivot, pivot) > kPivotFloor)) {
            throw SpectraError(SpectraError::Kind::NotEliminable,
                               "eliminated block is not positive definite (pivot " +
                                   std::to_string(work(pivot, pivot)) + ")");
        }
        if (pivot != k) {
            std::swap(perm[k], perm[pivot]);
            for (std::size_t j = 0; j < ne; ++j) std::swap(work(k, j), work(pivot, j));
            for (std::size_t j = 0; j < ne; ++j) std::swap(work(j, k), work(j, pivot));
            for (std::size_t j = 0; j < k; ++j) std::swap(lower(k, j), lower(pivot, j));
        }
        const double diag = std::sqrt(work(k, k));
        lower(k, k) = diag;
        for (std::size_t i = k + 1; i < ne; ++i) lower(i, k) = work(i, k) / diag;
        for (std::size_t i = k + 1; i < ne; ++i) {
            for (std::size_t j = k + 1; j < ne; ++j) work(i, j) -= lower(i, k) * lower(j, k);
        }
    }

    // X = M_ee^{-1} M_ek, one kept column at a time.
    out.back_substitution.assign(ne * nk, 0.0);
    std::vector<double> y(ne);
    for (std::size_t c = 0; c < nk; ++c) {
        for (std::size_t i = 0; i < ne; ++i) {
            double acc = m(out.eliminated[perm[i]], out.keep[c]);
            for (std::size_t j = 0; j < i; ++j) acc -= lower(i, j) * y[j];
            y[i] = acc / lower(i, i);
        }
        for (std::size_t i = ne; i-- > 0;) {
            double acc = y[i];
            for (std::size_t j = i + 1; j < ne; ++j) acc -= lower(j, i) * y[j];
            y[i] = acc / lower(i, i);
        }
        for (std::size_t i = 0; i < ne; ++i) out.back_substitution[perm[i] * nk + c] = -y[i];
    }

    out.complement = SymMatrix(nk);
    for (std::size_t i = 0; i < nk; ++i) {
        for (std::size_t j = i; j < nk; ++j) {
            double s = m(out.keep[i], out.keep[j]);
            for (std::size_t e = 0; e < ne; ++e) {
                s += m(out.keep[i], out.eliminated[e]) * out.back_substitution[e * nk + j];
            }
            out.complement.set(i, j, s);
        }
    }
    return out;
}

}  // namespace curvlab

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace curvlab {

class SpectraError : public std::runtime_error {
public:
    enum class Kind { NonFinite, NotEliminable, Empty };

    SpectraError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

// Dense symmetric matrix. Writes through set() / add() update both (i,j) and
// (j,i), so the stored array is symmetric by construction.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t dimension) : dim_(dimension), data_(dimension * dimension, 0.0) {}

    static SymMatrix identity(std::size_t dimension);
    static SymMatrix diagonal(std::span<const double> entries);

    std::size_t dimension() const noexcept { return dim_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
    void set(std::size_t i, std::size_t j, double value);
    void add(std::size_t i, std::size_t j, double value);

    // u^T M u.
    double quadratic(std::span<const double> u) const;
    std::vector<double> multiply(std::span<const double> u) const;
    double frobenius_norm() const;
    bool all_finite() const;

    // Principal submatrix on the listed indices (in that order).
    SymMatrix submatrix(std::span<const std::size_t> indices) const;

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<double> data_;
};

struct EigenPair {
    double value = 0.0;
    // Unit norm; sign fixed so that the largest-magnitude entry is positive.
    std::vector<double> vector;
};

// Cyclic Jacobi rotations; stops once the off-diagonal Frobenius norm drops
// below 1e-12 times the diagonal norm, or after 100 sweeps.
EigenPair smallest_eigenvalue(const SymMatrix& m);

// Result of minimizing a quadratic form over a subset of its coordinates.
struct SchurResult {
    // S = M_kk - M_ke M_ee^{-1} M_ek, on the kept coordinates in `keep` order.
    SymMatrix complement;
    std::vector<std::size_t> keep;
    std::vector<std::size_t> eliminated;
    // Row-major |eliminated| x |keep| matrix X = -M_ee^{-1} M_ek.
    std::vector<double> back_substitution;

    // Optimal eliminated coordinates w* = X u for kept coordinates u.
    std::vector<double> minimizer(std::span<const double> kept_values) const;
    // Full coordinate vector [u; w*] in the original index order.
    std::vector<double> expand(std::span<const double> kept_values) const;
};

// Eliminates every coordinate not in `keep` by pivoted Cholesky of the
// eliminated block. Throws SpectraError(NotEliminable) when a pivot falls to
// 1e-12 or below, i.e. the block is not positive definite.
SchurResult schur_minimize(const SymMatrix& m, std::span<const std::size_t> keep);

inline constexpr double kPivotFloor = 1e-12;

}  // namespace curvlab

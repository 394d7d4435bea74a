#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "curvlab/girth.hpp"
#include "curvlab/graph.hpp"

// Checks of the girth >= 5 curvature bounds at every vertex:
//   CD(k, 2) at x with k = min_i (2 - k_i)/k_i over the neighbor degrees k_i;
//   CDE(-d_x/2 - 1, 2) at x, by falsification search.
namespace curvlab {

class PreconditionFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Verdict { Pass, Fail, PreconditionNotMet };
std::string to_string(Verdict v);

enum class Theorem { Cd, Cde, Both };

// Margins at or above this count as satisfied.
inline constexpr double kMarginTolerance = -1e-8;
inline constexpr double kTheoremDimension = 2.0;

struct VerifyOptions {
    std::size_t min_girth = 5;
    // Gate on the girth of the whole graph instead of the vertex girth.
    bool global_girth = false;
    std::size_t samples = 10000;
    std::uint64_t seed = 0;
};

struct VertexReport {
    Vertex vertex = 0;
    GirthValue girth = GirthValue::infinite();
    std::vector<std::size_t> neighbor_degrees;
    double cd_bound = 0.0;
    std::optional<double> cd_computed;
    std::optional<double> cd_margin;
    double cde_bound = 0.0;
    std::optional<double> cde_sampled_min;
    std::optional<double> cde_margin;
    std::optional<std::size_t> samples_used;
    Verdict verdict = Verdict::Pass;
    // Some margin lies in (-1e-8, 0).
    bool tight = false;
    // Present only for Fail: a function that re-verifies the violation.
    std::optional<VertexFunction> witness;
};

struct CurvatureReport {
    Theorem theorem = Theorem::Both;
    double dim = kTheoremDimension;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> samples;
    // Sorted by vertex id.
    std::vector<VertexReport> records;

    bool any_fail() const;
    bool all_precondition_not_met() const;
};

// min over y ~ x of (2 - d_y)/d_y.
double cd_bound_girth5(const Graph& g, Vertex x);
// -d_x/2 - 1.
double cde_bound_girth5(const Graph& g, Vertex x);

// With f(x) = 0, f(y_i) = 1, f = 0 on the other neighbors, f(z) = 2 on
// N(y_i) \ {x} and 0 elsewhere, returns
//   (1/k_i) Σ_{z ~ y_i} ((f(z) - f(y_i))^2 - f(z)^2 / 2),
// which equals -(k_i - 2)/k_i. Throws PreconditionFailed if the vertex girth
// at x is below 5, std::out_of_range for a bad neighbor index.
double cd_witness_value(const Graph& g, Vertex x, std::size_t neighbor_index);

CurvatureReport verify_cd_theorem(const Graph& g, const VerifyOptions& options = {});
CurvatureReport verify_cde_theorem(const Graph& g, const VerifyOptions& options = {});
CurvatureReport verify_theorems(const Graph& g, Theorem theorem, const VerifyOptions& options = {});

inline CurvatureReport verify_cde_theorem(const Graph& g, std::size_t samples, std::uint64_t seed) {
    VerifyOptions options;
    options.samples = samples;
    options.seed = seed;
    return verify_cde_theorem(g, options);
}

}  // namespace curvlab

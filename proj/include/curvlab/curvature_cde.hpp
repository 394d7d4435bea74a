#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "curvlab/graph.hpp"

namespace curvlab {

class CdeError : public std::runtime_error {
public:
    enum class Kind { InfeasibleFunction, NoFeasibleSample };

    CdeError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

// A positive function on the 2-ball of `vertex` (value 1 at the center and
// outside the ball) with its CDE ratio.
struct CdeSample {
    Vertex vertex = 0;
    VertexFunction function;
    double ratio = 0.0;
};

struct CdeEstimate {
    Vertex vertex = 0;
    double dimension_n = 2.0;
    // Smallest ratio seen; an upper bound on the pointwise infimum.
    double sampled_min = 0.0;
    CdeSample argmin;
    std::size_t samples_used = 0;
    std::uint64_t seed = 0;
};

// (Γ2(f) - Γ(f, Γ(f)/f) - (1/n)(Δf)^2)(x) / Γ(f)(x) for f > 0 on the 2-ball
// with Δf(x) < 0. Throws CdeError(InfeasibleFunction) naming the violated
// condition.
double cde_ratio(const Graph& g, Vertex x, double n, const VertexFunction& f);

// Same ratio through the local formulas (gamma2_local and the I1 - I2 - I3
// split). Used to re-verify violations independently.
double cde_ratio_local(const Graph& g, Vertex x, double n, const VertexFunction& f);

// cde_ratio(...) >= k - 1e-12.
bool cde_check(const Graph& g, Vertex x, double n, double k, const VertexFunction& f);

// Falsification search for small CDE ratios at x. Deterministic in
// (g, x, n, samples, seed): the random stream is derived from seed and x.
//
//  * `samples` feasible functions with log-uniform values in [e^-3, e^3]
//    (center 1, rejection on Δf(x) >= 0). Every draw that enters the running
//    top ten is refined by a projected compass search in log space.
//  * The family f(z) = f(y)^2 over the grid f(y) in {0.1, ..., 1.9}; the
//    full grid when it has at most kCdeGridBudget points, otherwise the
//    diagonal plus kCdeGridBudget seeded grid points. The best grid point is
//    refined as well.
//
// Throws CdeError(NoFeasibleSample) if rejection sampling stalls.
CdeEstimate cde_estimate(const Graph& g, Vertex x, double n, std::size_t samples, std::uint64_t seed);

inline constexpr std::size_t kCdeGridBudget = 20000;

}  // namespace curvlab

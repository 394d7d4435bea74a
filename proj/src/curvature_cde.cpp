#include "curvlab/curvature_cde.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "curvlab/operators.hpp"
#include "curvlab/rng.hpp"

namespace curvlab {

namespace {

constexpr double kCheckTolerance = 1e-12;
constexpr double kLogRange = 3.0;
constexpr double kClampMargin = 1e-9;
constexpr std::size_t kTopCandidates = 10;
constexpr std::size_t kMaxRejections = 1'000'000;
constexpr int kMaxRefineSweeps = 200;
constexpr double kMinStep = 1e-8;
constexpr double kMaxStep = 4.0;

double inverse_dimension(double n) { return std::isinf(n) ? 0.0 : 1.0 / n; }

void require_dimension(double n) {
    if (!(n > 0.0)) throw std::invalid_argument("dimension n must be positive");
}

struct Feasibility {
    double laplacian;
    double gamma;
};

Feasibility require_feasible(const Graph& g, Vertex x, const VertexFunction& f) {
    if (f.size() != g.vertex_count()) throw std::invalid_argument("vertex function does not match graph");
    const auto positive = [&](Vertex v) {
        if (!(f[v] > 0.0)) {
            throw CdeError(CdeError::Kind::InfeasibleFunction,
                           "f must be positive on the 2-ball, f(" + std::to_string(v) + ") <= 0");
        }
    };
    positive(x);
    for (Vertex y : g.neighbors(x)) {
        positive(y);
        for (Vertex z : g.neighbors(y)) positive(z);
    }
    const double lap = laplacian(g, f, x);
    if (!(lap < 0.0)) throw CdeError(CdeError::Kind::InfeasibleFunction, "requires Δf(x) < 0");
    const double gam = gamma_local(g, f, x);
    if (!(gam > 0.0)) throw CdeError(CdeError::Kind::InfeasibleFunction, "requires Γ(f)(x) > 0");
    return {lap, gam};
}

// Search state: values on the ball coordinates, written into a full-size
// function (1 at the center and everywhere outside the ball) for evaluation.
class BallSearch {
public:
    BallSearch(const Graph& g, Vertex x, double n)
        : g_(g), x_(x), n_(n), ball_(ball(g, x, 2)), work_(g.vertex_count(), 1.0),
          degree_(static_cast<double>(g.degree(x))) {
        for (Vertex z : ball_.s2()) {
            for (std::size_t i = 0; i < ball_.s1().size(); ++i) {
                if (g.adjacent(z, ball_.s1()[i])) {
                    parent_.push_back(i);
                    break;
                }
            }
        }
    }

    const LocalBall& local() const { return ball_; }
    std::size_t dimension() const { return ball_.dimension(); }
    std::size_t s1_size() const { return ball_.s1().size(); }
    // Index into s1 of the first neighbor of the j-th s2 vertex.
    std::size_t parent(std::size_t j) const { return parent_[j]; }

    // Δf(x) < 0, summed in the same order as the Laplacian so the two agree
    // bit for bit.
    bool feasible(const std::vector<double>& coords) const {
        double sum = 0.0;
        for (std::size_t i = 0; i < s1_size(); ++i) sum += coords[i] - 1.0;
        return sum < 0.0;
    }

    double ratio(const std::vector<double>& coords) {
        load(coords);
        return cde_ratio(g_, x_, n_, work_);
    }

    VertexFunction function(const std::vector<double>& coords) {
        load(coords);
        return work_;
    }

    // Projected compass search on log-values. Keeps every value >= 1e-9 and
    // Δf(x) <= -1e-9 by clamping each trial point.
    double refine(std::vector<double>& coords, double current) {
        const std::size_t m = dimension();
        std::vector<double> step(m, 0.25);
        for (int sweep = 0; sweep < kMaxRefineSweeps; ++sweep) {
            if (*std::max_element(step.begin(), step.end()) < kMinStep) break;
            for (std::size_t i = 0; i < m; ++i) {
                if (step[i] < kMinStep) continue;
                const double original = coords[i];
                bool improved = false;
                for (double sign : {1.0, -1.0}) {
                    const double trial = clamp_value(coords, i, original * std::exp(sign * step[i]));
                    if (trial <= 0.0 || trial == original) continue;
                    coords[i] = trial;
                    if (!feasible(coords)) {
                        coords[i] = original;
                        continue;
                    }
                    const double r = ratio(coords);
                    if (r < current) {
                        current = r;
                        improved = true;
                        break;
                    }
                    coords[i] = original;
                }
                step[i] = improved ? std::min(step[i] * 2.0, kMaxStep) : step[i] * 0.5;
            }
        }
        return current;
    }

private:
    void load(const std::vector<double>& coords) {
        for (std::size_t i = 0; i < coords.size(); ++i) work_[ball_.vertex_at(i)] = coords[i];
    }

    // Returns 0 when no admissible value exists.
    double clamp_value(const std::vector<double>& coords, std::size_t i, double value) const {
        value = std::max(value, kClampMargin);
        if (i < s1_size()) {
            double others = 0.0;
            for (std::size_t j = 0; j < s1_size(); ++j) {
                if (j != i) others += coords[j];
            }
            const double upper = degree_ * (1.0 - kClampMargin) - others;
            if (upper < kClampMargin) return 0.0;
            value = std::min(value, upper);
        }
        return value;
    }

    const Graph& g_;
    Vertex x_;
    double n_;
    LocalBall ball_;
    VertexFunction work_;
    double degree_;
    std::vector<std::size_t> parent_;
};

struct Best {
    double ratio = std::numeric_limits<double>::infinity();
    std::vector<double> coords;

    void offer(double r, const std::vector<double>& c) {
        if (r < ratio) {
            ratio = r;
            coords = c;
        }
    }
};

void scan_grid_family(BallSearch& search, std::uint64_t stream_seed, Best& best) {
    constexpr int kLevels = 19;
    const std::size_t d = search.s1_size();
    const std::size_t m = search.dimension();
    std::vector<double> coords(m, 1.0);
    Best local;

    const auto evaluate = [&](const std::vector<int>& level) {
        for (std::size_t i = 0; i < d; ++i) coords[i] = 0.1 * (level[i] + 1);
        for (std::size_t j = d; j < m; ++j) {
            const double fy = coords[search.parent(j - d)];
            coords[j] = fy * fy;
        }
        if (search.feasible(coords)) local.offer(search.ratio(coords), coords);
    };

    std::vector<int> level(d, 0);
    double grid_size = std::pow(static_cast<double>(kLevels), static_cast<double>(d));
    if (grid_size <= static_cast<double>(kCdeGridBudget)) {
        for (;;) {
            evaluate(level);
            std::size_t pos = 0;
            while (pos < d && ++level[pos] == kLevels) level[pos++] = 0;
            if (pos == d) break;
        }
    } else {
        for (int l = 0; l < kLevels; ++l) {
            std::fill(level.begin(), level.end(), l);
            evaluate(level);
        }
        Rng rng(stream_seed);
        for (std::size_t s = 0; s < kCdeGridBudget; ++s) {
            for (auto& l : level) l = static_cast<int>(rng.below(kLevels));
            evaluate(level);
        }
    }
    if (local.coords.empty()) return;
    best.offer(local.ratio, local.coords);
    const double refined = search.refine(local.coords, local.ratio);
    best.offer(refined, local.coords);
}

}  // namespace

double cde_ratio(const Graph& g, Vertex x, double n, const VertexFunction& f) {
    require_dimension(n);
    const auto [lap, gam] = require_feasible(g, x, f);
    const double numerator = gamma2(g, f, x) - gamma_f_ratio(g, f, x) - inverse_dimension(n) * lap * lap;
    return numerator / gam;
}

double cde_ratio_local(const Graph& g, Vertex x, double n, const VertexFunction& f) {
    require_dimension(n);
    const auto [lap, gam] = require_feasible(g, x, f);
    const double numerator =
        gamma2_local(g, f, x) - gamma_f_ratio_split(g, f, x) - inverse_dimension(n) * lap * lap;
    return numerator / gam;
}

bool cde_check(const Graph& g, Vertex x, double n, double k, const VertexFunction& f) {
    return cde_ratio(g, x, n, f) >= k - kCheckTolerance;
}

CdeEstimate cde_estimate(const Graph& g, Vertex x, double n, std::size_t samples, std::uint64_t seed) {
    require_dimension(n);
    if (samples == 0) throw std::invalid_argument("cde_estimate needs at least one sample");

    BallSearch search(g, x, n);
    const std::size_t m = search.dimension();
    const std::uint64_t vertex_seed = mix_seed(seed, x);
    Rng rng(mix_seed(vertex_seed, 0));

    Best best;
    std::vector<double> top;  // ratios of the running top candidates
    std::vector<double> coords(m);
    for (std::size_t s = 0; s < samples; ++s) {
        std::size_t rejected = 0;
        for (;;) {
            for (double& c : coords) c = std::exp(rng.uniform(-kLogRange, kLogRange));
            if (search.feasible(coords)) break;
            if (++rejected == kMaxRejections) {
                throw CdeError(CdeError::Kind::NoFeasibleSample,
                               "no feasible sample at vertex " + std::to_string(x));
            }
        }
        const double r = search.ratio(coords);
        best.offer(r, coords);

        const auto worst = std::max_element(top.begin(), top.end());
        if (top.size() < kTopCandidates || r < *worst) {
            if (top.size() == kTopCandidates) top.erase(worst);
            top.push_back(r);
            std::vector<double> candidate = coords;
            const double refined = search.refine(candidate, r);
            best.offer(refined, candidate);
        }
    }

    scan_grid_family(search, mix_seed(vertex_seed, 1), best);

    CdeEstimate out;
    out.vertex = x;
    out.dimension_n = n;
    out.sampled_min = best.ratio;
    out.argmin = CdeSample{x, search.function(best.coords), best.ratio};
    out.samples_used = samples;
    out.seed = seed;
    return out;
}

}  // namespace curvlab

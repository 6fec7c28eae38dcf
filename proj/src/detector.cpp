#include "edges/detector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "edges/error.hpp"

namespace edges {

namespace {

struct ActiveMode {
    int k;
    double weight;  // σ(k/N)
    cplx coeff;
};

std::vector<ActiveMode> active_modes(const SpectralData& data, const ConcentrationFactor& factor)
{
    if (factor.N() != data.N) {
        std::ostringstream msg;
        msg << "conjugate_sum: factor has N = " << factor.N() << " but data has N = " << data.N;
        throw PreconditionError(msg.str());
    }
    check_conjugate_symmetry(data, "conjugate_sum");
    std::vector<ActiveMode> modes;
    modes.reserve(static_cast<std::size_t>(data.N));
    for (int k = 1; k <= data.N; ++k) {
        const double s = factor.value(k);
        const cplx c = data.at(k);
        if (s != 0.0 && c != cplx{0.0, 0.0}) {
            modes.push_back({k, s, c});
        }
    }
    return modes;
}

// -2π Σ σ_k Im(c_k e^{ikx}); e^{ikx} advanced by rotation and re-anchored
// every 32 modes to bound round-off growth.
double evaluate_modes(const std::vector<ActiveMode>& modes, double x)
{
    constexpr int resync = 32;
    const cplx step = std::polar(1.0, x);
    cplx phase{1.0, 0.0};
    int phase_k = 0;
    int since_anchor = resync;
    double acc = 0.0;
    for (const ActiveMode& m : modes) {
        if (m.k != phase_k + 1 || since_anchor >= resync) {
            phase = std::polar(1.0, m.k * x);
            since_anchor = 0;
        } else {
            phase *= step;
            ++since_anchor;
        }
        phase_k = m.k;
        acc +=m.weight * (m.coeff.real() * phase.imag() + m.coeff.imag() * phase.real());
    }
    return -2.0 * std::numbers::pi * acc;
}

}  // namespace

std::vector<double> conjugate_sum(const SpectralData& data, const ConcentrationFactor& factor,
                                  std::span<const double> grid)
{
    const std::vector<ActiveMode> modes = active_modes(data, factor);
    std::vector<double> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        require(std::isfinite(grid[i]), "conjugate_sum: grid values must be finite");
        out[i] = evaluate_modes(modes, grid[i]);
    }
    return out;
}

double conjugate_sum_at(const SpectralData& data, const ConcentrationFactor& factor, double x)
{
    require(std::isfinite(x), "conjugate_sum: x must be finite");
    return evaluate_modes(active_modes(data, factor), x);
}

double predicted_scale(double eta, double beta, int N)
{
    require(N >= 2, "predicted_scale: N must be >= 2");
    require(std::isfinite(eta) && eta >= 0.0, "predicted_scale: eta must be >= 0");
    require(std::isfinite(beta) && beta > 0.0, "predicted_scale: beta must be > 0");
    const double smooth_scale = std::log(static_cast<double>(N)) / N;
    const double a = std::sqrt(eta) * beta;
    if (a * N < 1.0) {
        return smooth_scale;
    }
    return std::max(a * std::abs(std::log(a)), smooth_scale);
}

double predicted_scale(const ConcentrationFactor& factor)
{
    if (factor.has_noise_parameters()) {
        return predicted_scale(factor.params().eta, factor.params().beta, factor.N());
    }
    return predicted_scale(0.0, 1.0, factor.N());
}

DetectionResult detect_edges(std::vector<double> grid, std::vector<double> samples,
                             double epsilon_predicted, int N, const ThresholdPolicy& policy)
{
    require(!grid.empty(), "detect_edges: empty grid");
    require(grid.size() == samples.size(), "detect_edges: grid and samples differ in length");
    require(grid.size() >= 2, "detect_edges: grid needs at least two points");
    require(N >= 1, "detect_edges: N must be >= 1");
    require(std::isfinite(epsilon_predicted) && epsilon_predicted > 0.0,
            "detect_edges: epsilon_predicted must be > 0");
    require(policy.c_abs >= 0.0 && policy.c_rel >= 0.0,
            "detect_edges: threshold constants must be >= 0");

    const std::size_t m = grid.size();
    const double h = (grid.back() - grid.front()) / static_cast<double>(m - 1);
    require(h > 0.0, "detect_edges: grid must be increasing");
    for (std::size_t i = 1; i < m; ++i) {
        if (std::abs(grid[i] - grid[i - 1] - h) > 1e-6 * h) {
            throw PreconditionError("detect_edges: grid is not uniform");
        }
    }
    if (h > std::numbers::pi / N * (1.0 + 1e-9)) {
        std::ostringstream msg;
        msg << "detect_edges: grid spacing " << h << " exceeds pi/N = " << std::numbers::pi / N;
        throw PreconditionError(msg.str());
    }
    double peak = 0.0;
    for (const double s : samples) {
        require(std::isfinite(s), "detect_edges: samples must be finite");
        peak = std::max(peak, std::abs(s));
    }
    const bool cyclic =
        std::abs(static_cast<double>(m) * h - 2.0 * std::numbers::pi) <= 1e-6 * 2.0 * std::numbers::pi;

    DetectionResult result;
    result.epsilon_predicted = epsilon_predicted;
    result.threshold_used = std::max(policy.c_abs * epsilon_predicted, policy.c_rel * peak);
    const double threshold = result.threshold_used;

    const auto magnitude = [&](std::ptrdiff_t i) -> double {
        if (i < 0 || i >= static_cast<std::ptrdiff_t>(m)) {
            if (!cyclic) {
                return -1.0;
            }
            i = (i + static_cast<std::ptrdiff_t>(m)) % static_cast<std::ptrdiff_t>(m);
        }
        return std::abs(samples[static_cast<std::size_t>(i)]);
    };

    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < m; ++i) {
        const auto si = static_cast<std::ptrdiff_t>(i);
        const double a = magnitude(si);
        if (a > threshold && a >= magnitude(si - 1) && a > magnitude(si + 1)) {
            candidates.push_back(i);
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(), [&](std::size_t l, std::size_t r) {
        return std::abs(samples[l]) > std::abs(samples[r]);
    });

    const double window = std::max({2.0 * h, std::numbers::pi / N, epsilon_predicted});
    const auto distance = [&](double a, double b) {
        return cyclic ? periodic_distance(a, b) : std::abs(a - b);
    };
    std::vector<std::size_t> kept;
    for (const std::size_t c : candidates) {
        const bool suppressed = std::any_of(kept.begin(), kept.end(), [&](std::size_t k) {
            return distance(grid[c], grid[k]) <= window;
        });
        if (!suppressed) {
            kept.push_back(c);
        }
    }

    for (const std::size_t i : kept) {
        Edge e{grid[i], samples[i]};
        const auto si = static_cast<std::ptrdiff_t>(i);
        if (policy.parabolic_refinement && magnitude(si - 1) >= 0.0 && magnitude(si + 1) >= 0.0) {
            const auto at = [&](std::ptrdiff_t j) {
                j = (j + static_cast<std::ptrdiff_t>(m)) % static_cast<std::ptrdiff_t>(m);
                return samples[static_cast<std::size_t>(j)];
            };
            const double ym = at(si - 1);
            const double y0 = at(si);
            const double yp = at(si + 1);
            const double curvature = ym - 2.0 * y0 + yp;
            if (curvature != 0.0) {
                const double delta = std::clamp(0.5 * (ym - yp) / curvature, -0.5, 0.5);
                e.location = grid[i] + delta * h;
                e.amplitude = y0 - 0.25 * (ym - yp) * delta;
            }
        }
        if (cyclic) {
            e.location = wrap_angle(e.location);
        }
        result.edges.push_back(e);
    }
    std::sort(result.edges.begin(), result.edges.end(),
              [](const Edge& l, const Edge& r) { return l.location < r.location; });

    result.grid = std::move(grid);
    result.samples = std::move(samples);
    return result;
}

DetectionResult detect(const SpectralData& data, const ConcentrationFactor& factor,
                       std::span<const double> grid, const ThresholdPolicy& policy)
{
    std::vector<double> samples = conjugate_sum(data, factor, grid);
    return detect_edges(std::vector<double>(grid.begin(), grid.end()), std::move(samples),
                        predicted_scale(factor), data.N, policy);
}

}  // namespace edges

#include "edges/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "edges/quadrature.hpp"

namespace edges {

namespace {

constexpr double lower_limit = 1e-12;

// Two-pass adaptive Simpson: the second pass uses a tolerance relative to
// the first estimate so that tiny energies keep their significant digits.
template <typename G>
double integrate(G&& g, double a, double b, std::vector<double> cuts)
{
    cuts.push_back(a);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    const auto pass = [&](double tol) {
        double total = 0.0;
        for (std::size_t i = 1; i < cuts.size(); ++i) {
            const double lo = std::max(cuts[i - 1], a);
            const double hi = std::min(cuts[i], b);
            if (hi > lo) {
                total += quad::adaptive_simpson(g, lo, hi, {.abs_tol = tol});
            }
        }
        return total;
    };
    const double rough = pass(1e-8);
    return pass(1e-11 * std::abs(rough) + 1e-300);
}

}  // namespace

EpsilonDiagnostics epsilon_diagnostics(const ConcentrationFactor& factor)
{
    const int n = factor.N();
    require(n >= 2, "epsilon_diagnostics: factor needs N >= 2");
    EpsilonDiagnostics d;
    double previous_ratio = factor.value(1) * n;
    for (int k = 2; k <= n; ++k) {
        const double ratio = factor.value(k) * n / k;
        d.eps0 += std::abs(ratio - previous_ratio);
        previous_ratio = ratio;
        d.eps2 += std::abs(factor.value(k) - factor.value(k - 1)) * n / k;
    }
    d.eps0 /= n;
    d.eps2 /= n;
    d.eps1 = std::abs(factor.value(n)) / n;
    d.eps3 = std::abs(factor.value(1));
    d.eps_total = d.eps0 + d.eps1 + d.eps2 + d.eps3;
    return d;
}

EnergyReport energy_report(const ConcentrationFactor& factor, double eta, RegularEnergy variant)
{
    require(std::isfinite(eta) && eta >= 0.0, "energy_report: eta must be >= 0");
    const int n = factor.N();
    EnergyReport r;
    r.variant = variant;

    if (factor.family() == FactorFamily::custom_table) {
        for (int k = 1; k <= n; ++k) {
            const double s = factor.value(k);
            const double kk = k;
            r.jump += (s / kk) * (s / kk);
            r.noise += eta * s * s;
            r.regular += variant == RegularEnergy::l2 ? s * s / (kk * kk * kk * kk)
                                                      : std::abs(s) / (kk * kk);
        }
    } else {
        const std::vector<double> cuts = factor.breakpoints();
        const auto sigma = [&](double xi) { return factor.evaluate(xi); };
        r.jump = integrate([&](double xi) {
                     const double q = sigma(xi) / xi;
                     return q * q;
                 }, lower_limit, 1.0, cuts) / n;
        r.noise = eta * n * integrate([&](double xi) {
                      const double s = sigma(xi);
                      return s * s;
                  }, 0.0, 1.0, cuts);
        const double lo = 1.0 / n;
        if (variant == RegularEnergy::l2) {
            r.regular = integrate([&](double xi) {
                            const double s = sigma(xi);
                            return s * s / (xi * xi * xi * xi);
                        }, lo, 1.0, cuts) / (static_cast<double>(n) * n * n);
        } else {
            r.regular = integrate([&](double xi) { return std::abs(sigma(xi)) / (xi * xi); }, lo,
                                  1.0, cuts) / n;
        }
        // Below 1/N the factor vanishes only for a truncated band starting at k0 >= 1.
        r.regular_lower_truncated =
            !(factor.family() == FactorFamily::truncated_optimal && factor.params().k0 >= 1.0);
    }
    r.noise_effective = 2.0 * std::sqrt(r.noise);
    r.jump_effective = factor.has_noise_parameters() ? std::sqrt(eta) * factor.params().beta : 0.0;
    return r;
}

double noise_energy_exact(double eta, double beta, int N)
{
    require(std::isfinite(eta) && eta > 0.0, "noise_energy_exact: eta must be > 0");
    require(std::isfinite(beta) && beta > 0.0, "noise_energy_exact: beta must be > 0");
    require(N >= 1, "noise_energy_exact: N must be >= 1");
    const double scale = std::sqrt(eta) * beta * N;
    const double arctan = std::atan(scale);
    // ∫₀^A ζ²/(1+ζ²)² dζ = (atan A - A/(1+A²)) / 2
    const double profile = 0.5 * (arctan - scale / (1.0 + scale * scale));
    return std::sqrt(eta) / (beta * arctan * arctan) * profile;
}

double beta_policy(double eta)
{
    if (!(std::isfinite(eta) && eta > 0.0 && eta < 1.0)) {
        std::ostringstream msg;
        msg << "beta_policy: requires 0 < eta < 1 (got " << eta << ")";
        throw PreconditionError(msg.str());
    }
    return std::numbers::pi * std::pow(eta, -1.0 / 6.0);
}

double beta_objective(double eta, double beta, int N, BetaWeights weights)
{
    return weights.noise * 2.0 * std::sqrt(noise_energy_exact(eta, beta, N)) +
           weights.jump * std::sqrt(eta) * beta;
}

BetaOptimum optimize_beta(double eta, double beta_lo, double beta_hi, int N, BetaWeights weights,
                          double rel_tol)
{
    require(std::isfinite(eta) && eta > 0.0, "optimize_beta: eta must be > 0");
    require(std::isfinite(beta_lo) && std::isfinite(beta_hi) && beta_lo > 0.0 && beta_lo < beta_hi,
            "optimize_beta: requires 0 < beta_lo < beta_hi");
    require(weights.noise > 0.0 && weights.jump > 0.0, "optimize_beta: weights must be > 0");
    require(rel_tol > 0.0, "optimize_beta: rel_tol must be > 0");

    const auto objective = [&](double log_beta) {
        return beta_objective(eta, std::exp(log_beta), N, weights);
    };
    constexpr int grid_points = 100;
    const double log_lo = std::log(beta_lo);
    const double log_hi = std::log(beta_hi);
    const double step = (log_hi - log_lo) / (grid_points - 1);
    int best = 0;
    double best_value = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid_points; ++i) {
        const double v = objective(log_lo + i * step);
        if (v < best_value) {
            best_value = v;
            best = i;
        }
    }
    if (best == 0 || best == grid_points - 1) {
        const double boundary = std::exp(log_lo + best * step);
        std::ostringstream msg;
        msg << "optimize_beta: no interior minimum in [" << beta_lo << ", " << beta_hi
            << "]; boundary minimizer beta = " << boundary;
        throw NoInteriorMinimum(msg.str(), boundary);
    }

    // Golden section on the grid cell pair around the discrete minimum.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = log_lo + (best - 1) * step;
    double b = log_lo + (best + 1) * step;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = objective(c);
    double fd = objective(d);
    const double log_tol = std::log1p(rel_tol);
    while (b - a > log_tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = objective(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = objective(d);
        }
    }
    const double log_star = 0.5 * (a + b);
    const double f_star = objective(log_star);
    if (f_star > best_value) {
        return {std::exp(log_lo + best * step), best_value};
    }
    return {std::exp(log_star), f_star};
}

PlateauStats plateau_stats(std::span<const double> grid, std::span<const double> samples,
                           std::span<const Jump> jumps, double exclusion)
{
    require(grid.size() == samples.size(), "plateau_stats: grid and samples differ in length");
    PlateauStats s;
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const bool far = std::all_of(jumps.begin(), jumps.end(), [&](const Jump& j) {
            return periodic_distance(grid[i], j.location) > exclusion;
        });
        if (far) {
            sum_sq += samples[i] * samples[i];
            s.max = std::max(s.max, std::abs(samples[i]));
            ++s.count;
        }
    }
    if (s.count > 0) {
        s.rms = std::sqrt(sum_sq / static_cast<double>(s.count));
    }
    return s;
}

MonteCarloSummary monte_carlo_scale(const SignalSpec& signal, double eta,
                                    const ConcentrationFactor& factor, int trials,
                                    std::uint64_t seed, const MonteCarloOptions& options)
{
    require(trials >= 1, "monte_carlo_scale: trials must be >= 1");
    require(std::isfinite(eta) && eta >= 0.0, "monte_carlo_scale: eta must be >= 0");
    require(options.location_tolerance_cells >= 0.0,
            "monte_carlo_scale: location tolerance must be >= 0");
    const int n = factor.N();
    const SpectralData clean = analytic_coefficients(signal, n);
    const int grid_size = options.grid_size > 0 ? options.grid_size : 8 * n;
    const std::vector<double> grid = uniform_grid(grid_size);

    MonteCarloSummary summary;
    summary.epsilon_predicted = predicted_scale(factor);
    summary.plateau_exclusion =
        options.plateau_exclusion > 0.0 ? options.plateau_exclusion : 10.0 * summary.epsilon_predicted;
    summary.grid_spacing = 2.0 * std::numbers::pi / grid_size;
    const double location_tolerance = options.location_tolerance_cells * summary.grid_spacing;

    const std::size_t jump_count = signal.jumps.size();
    std::vector<double> sum(jump_count, 0.0);
    double plateau_sq = 0.0;
    int detected = 0;

    for (int t = 0; t < trials; ++t) {
        TrialRecord rec;
        rec.trial = t;
        rec.seed = seed + static_cast<std::uint64_t>(t);
        const SpectralData data = add_white_noise(clean, eta, rec.seed);
        DetectionResult det = detect(data, factor, grid, options.policy);

        for (std::size_t j = 0; j < jump_count; ++j) {
            const double v = conjugate_sum_at(data, factor, signal.jumps[j].location);
            rec.jump_values.push_back(v);
            sum[j] += v;
        }
        const PlateauStats plateau =
            plateau_stats(det.grid, det.samples, signal.jumps, summary.plateau_exclusion);
        rec.plateau_rms = plateau.rms;
        rec.plateau_max = plateau.max;
        rec.edge_count = det.edges.size();
        rec.detected = std::all_of(signal.jumps.begin(), signal.jumps.end(), [&](const Jump& jump) {
            return std::any_of(det.edges.begin(), det.edges.end(), [&](const Edge& e) {
                return periodic_distance(e.location, jump.location) <= location_tolerance &&
                       (e.amplitude > 0.0) == (jump.amplitude > 0.0);
            });
        });
        plateau_sq += plateau.rms * plateau.rms;
        summary.plateau_max = std::max(summary.plateau_max, plateau.max);
        detected += rec.detected ? 1 : 0;
        summary.trials.push_back(std::move(rec));
    }

    for (std::size_t j = 0; j < jump_count; ++j) {
        const double mean = sum[j] / trials;
        double var = 0.0;
        for (const TrialRecord& rec : summary.trials) {
            var += (rec.jump_values[j] - mean) * (rec.jump_values[j] - mean);
        }
        if (trials > 1) {
            var /= trials - 1;
        }
        summary.amplitude_mean.push_back(mean);
        summary.amplitude_std.push_back(std::sqrt(var));
    }
    summary.plateau_rms = std::sqrt(plateau_sq / trials);
    summary.detection_rate = static_cast<double>(detected) / trials;
    return summary;
}

}  // namespace edges

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "edges/concentration.hpp"
#include "edges/detector.hpp"
#include "edges/error.hpp"
#include "edges/spectral_core.hpp"

namespace edges {

/// Computable pieces of the concentration error ε_N = ε₀ + ε₁ + ε₂ + ε₃.
struct EpsilonDiagnostics {
    double eps0 = 0.0;  // (1/N) TV of s_k/(k/N)
    double eps1 = 0.0;  // |s_N|/N
    double eps2 = 0.0;  // (1/N) Σ_{k>=2} |s_k - s_{k-1}| / (k/N)
    double eps3 = 0.0;  // |s_1|
    double eps_total = 0.0;
};

EpsilonDiagnostics epsilon_diagnostics(const ConcentrationFactor& factor);

enum class RegularEnergy { l2, bv };

struct EnergyReport {
    double jump = 0.0;     // E_J = (1/N)∫(σ/ξ)²
    double regular = 0.0;  // E_R, L2 or BV-like
    double noise = 0.0;    // E_η = ηN∫σ²
    double noise_effective = 0.0;  // 2√E_η
    double jump_effective = 0.0;   // √η β (0 for families without β)
    RegularEnergy variant = RegularEnergy::l2;
    /// E_R was integrated from ξ = 1/N because σ/ξ² (BV) or σ²/ξ⁴ (L2) is not
    /// integrable at 0 for this factor.
    bool regular_lower_truncated = false;
};

/// Energies of the three parts of the conjugate sum. Analytic families are
/// integrated over their closed form; custom tables use the discrete sums
/// Σ(s_k/k)², ηΣs_k², Σs_k²/k⁴ (L2) or Σ|s_k|/k² (BV).
EnergyReport energy_report(const ConcentrationFactor& factor, double eta, RegularEnergy variant);

/// ηN∫₀¹σ_η² dξ for the noise-adapted factor, in closed form.
double noise_energy_exact(double eta, double beta, int N);

/// β = π η^{-1/6}; requires 0 < η < 1.
double beta_policy(double eta);

struct BetaWeights {
    double noise = 1.0;
    double jump = 1.0;
};

/// noise·2√E_η(β) + jump·√η β with the exact E_η.
double beta_objective(double eta, double beta, int N, BetaWeights weights = {});

struct BetaOptimum {
    double beta = 0.0;
    double objective = 0.0;
};

/// Thrown when the minimum of the β objective sits on the bracket boundary.
class NoInteriorMinimum : public NumericalError {
public:
    NoInteriorMinimum(const std::string& message, double boundary_beta)
        : NumericalError(message), boundary_beta_(boundary_beta)
    {
    }
    [[nodiscard]] double boundary_beta() const { return boundary_beta_; }

private:
    double boundary_beta_;
};

/// Golden-section search (in log β) for the minimizer of beta_objective
/// inside [beta_lo, beta_hi]. The result is never worse than any point of
/// a 100-point logarithmic grid over the bracket.
BetaOptimum optimize_beta(double eta, double beta_lo, double beta_hi, int N = 1000,
                          BetaWeights weights = {}, double rel_tol = 1e-4);

struct PlateauStats {
    double rms = 0.0;
    double max = 0.0;
    std::size_t count = 0;
};

/// |K| statistics over grid points farther than `exclusion` from every jump.
PlateauStats plateau_stats(std::span<const double> grid, std::span<const double> samples,
                           std::span<const Jump> jumps, double exclusion);

struct MonteCarloOptions {
    ThresholdPolicy policy{};
    int grid_size = 0;                      // 0: 8N points
    double location_tolerance_cells = 2.0;  // detection window, in grid cells
    double plateau_exclusion = 0.0;         // <= 0: 10 · predicted scale
};

struct TrialRecord {
    int trial = 0;
    std::uint64_t seed = 0;
    std::vector<double> jump_values;  // K at each true jump location
    double plateau_rms = 0.0;
    double plateau_max = 0.0;
    std::size_t edge_count = 0;
    bool detected = false;  // every jump found, right sign, within tolerance
};

struct MonteCarloSummary {
    std::vector<TrialRecord> trials;
    std::vector<double> amplitude_mean;
    std::vector<double> amplitude_std;
    double plateau_rms = 0.0;  // quadratic mean over trials
    double plateau_max = 0.0;  // max over trials
    double detection_rate = 0.0;
    double epsilon_predicted = 0.0;
    double plateau_exclusion = 0.0;
    double grid_spacing = 0.0;
};

/// Repeats noise injection (seed + trial) and detection `trials` times.
MonteCarloSummary monte_carlo_scale(const SignalSpec& signal, double eta,
                                    const ConcentrationFactor& factor, int trials,
                                    std::uint64_t seed, const MonteCarloOptions& options = {});

}  // namespace edges

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edges/analysis.hpp"
#include "edges/concentration.hpp"
#include "edges/detector.hpp"
#include "edges/spectral_core.hpp"

namespace edges {

/// Raw key = value settings in insertion-independent order.
using Settings = std::map<std::string, std::string>;

/// Every key accepted in a config file or as a --key flag.
const std::vector<std::string>& config_keys();

/// Parses "key = value" lines. '#' and ';' start comments; "[section]"
/// headers are cosmetic, except that everything under "[derived]" is
/// skipped (run manifests keep their outputs there). Unknown keys and
/// duplicates are rejected.
Settings parse_settings(std::istream& in, std::string_view source = "config");

/// Settings of a named preset ("fig1", "fig2", "fig3-case1", "fig3-case2").
Settings preset_settings(std::string_view name);

/// Reals accept a trailing "pi" multiplier: "8pi", "-pi/2", "0.5*pi".
double parse_real(std::string_view text, std::string_view key);

struct ExperimentConfig {
    std::string preset;
    std::string signal = "sawtooth";  // sawtooth | two_jumps | custom
    std::string jumps_text;           // custom: "loc:amp, ..."
    std::string smooth_text;          // "cos:k:a, sin:k:b, coef:k:re:im"
    int N = 128;
    double eta = 0.0;
    bool input_noise = true;
    std::uint64_t seed = 1;
    FactorFamily factor = FactorFamily::classical_linear;
    std::optional<double> beta;  // empty: beta_policy(eta)
    double k0 = 0.0;
    int N0 = 0;  // 0: N
    double eps_reg = 0.01;
    std::string factor_table;
    bool normalize = true;
    int grid = 0;  // 0: 8N
    double c_abs = 2.0;
    double c_rel = 0.3;
    bool refine = false;
    int trials = 100;
    double plateau_exclusion = 0.0;  // 0: 10 · predicted scale
    std::string output = "edges_out";
    std::string sweep_param;
    std::vector<double> sweep_values;
    std::vector<std::string> notes;

    /// Validates cross-field preconditions; throws PreconditionError naming
    /// the violated one.
    void validate() const;
};

/// Typed configuration from layered settings (later layers win).
ExperimentConfig resolve_config(const std::vector<Settings>& layers);

/// The settings that reproduce this config (β resolved to a number).
Settings to_settings(const ExperimentConfig& config);

SignalSpec build_signal(const ExperimentConfig& config);
double resolved_beta(const ExperimentConfig& config);
ConcentrationFactor build_factor(const ExperimentConfig& config);
SpectralData build_data(const ExperimentConfig& config);

struct DetectRun {
    SpectralData data;
    ConcentrationFactor factor;
    DetectionResult detection;
    PlateauStats plateau;
    double jump_error = 0.0;  // max_j |K(z_j) - [f](z_j)|
};

/// Runs the pipeline without touching the filesystem.
DetectRun compute_detect(const ExperimentConfig& config);

/// Writes coefficients.csv, factor.csv, detection.csv, edges.csv and
/// manifest.cfg under config.output.
DetectRun run_detect(const ExperimentConfig& config);

struct SweepRow {
    double value = 0.0;
    double plateau_rms = 0.0;
    double plateau_max = 0.0;
    double jump_error = 0.0;
    double epsilon_predicted = 0.0;
    std::size_t edge_count = 0;
};

/// One detect sub-run per sweep value (under output/<param>_<i>/) plus
/// summary.csv.
std::vector<SweepRow> run_sweep(const ExperimentConfig& config);

/// monte_carlo.csv and manifest.cfg under config.output.
MonteCarloSummary run_montecarlo(const ExperimentConfig& config);

/// Writes the factor table to `out` and to factor.csv under config.output.
ConcentrationFactor run_factors(const ExperimentConfig& config, std::ostream& out);

void write_manifest(const std::filesystem::path& path, const ExperimentConfig& config,
                    const Settings& derived);

}  // namespace edges

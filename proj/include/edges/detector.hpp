#pragma once

#include <span>
#include <vector>

#include "edges/concentration.hpp"
#include "edges/spectral_core.hpp"

namespace edges {

/// K_N^σ f(x) = πi Σ_{|k|<=N} sgn(k) σ(|k|/N) c_k e^{ikx}, evaluated through
/// its real form -2π Σ_{k=1}^N σ(k/N) Im(c_k e^{ikx}).
///
/// Requires factor.N() == data.N and conjugate-symmetric data.
std::vector<double> conjugate_sum(const SpectralData& data, const ConcentrationFactor& factor,
                                  std::span<const double> grid);

/// Conjugate sum at a single point.
double conjugate_sum_at(const SpectralData& data, const ConcentrationFactor& factor, double x);

/// Small scale of the concentration property: ln(N)/N when √ηβN < 1,
/// otherwise √ηβ|ln(√ηβ)| (never below ln(N)/N).
double predicted_scale(double eta, double beta, int N);

/// predicted_scale with the factor's own (η, β); η = 0 for families
/// without noise parameters.
double predicted_scale(const ConcentrationFactor& factor);

struct ThresholdPolicy {
    double c_abs = 2.0;
    double c_rel = 0.3;
    /// Three-point parabolic refinement of location and amplitude.
    bool parabolic_refinement = false;
};

struct Edge {
    double location = 0.0;
    double amplitude = 0.0;
};

struct DetectionResult {
    std::vector<double> grid;
    std::vector<double> samples;
    std::vector<Edge> edges;  // sorted by location
    double epsilon_predicted = 0.0;
    double threshold_used = 0.0;
};

/// Extracts edges from samples of K_N^σ f on a uniform grid.
///
/// Threshold T = max(c_abs·ε, c_rel·max|K|). Candidates are local maxima of
/// |K| above T; greedy non-maximum suppression keeps the strongest candidate
/// in every window of half-width max(2h, π/N, ε). Grids spanning the whole
/// period are treated as cyclic.
DetectionResult detect_edges(std::vector<double> grid, std::vector<double> samples,
                             double epsilon_predicted, int N, const ThresholdPolicy& policy = {});

/// conjugate_sum + predicted_scale + detect_edges.
DetectionResult detect(const SpectralData& data, const ConcentrationFactor& factor,
                       std::span<const double> grid, const ThresholdPolicy& policy = {});

}  // namespace edges

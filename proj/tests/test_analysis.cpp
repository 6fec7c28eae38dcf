#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "edges/analysis.hpp"
#include "oracles.hpp"

using namespace edges;

namespace {

constexpr double pi = std::numbers::pi;

}  // namespace

TEST(EpsilonDiagnostics, Classical)
{
    const int n = 128;
    const EpsilonDiagnostics d = epsilon_diagnostics(classical_factor(n));
    EXPECT_NEAR(d.eps0, 0.0, 1e-15);
    EXPECT_NEAR(d.eps1, 1.0 / n, 1e-15);
    EXPECT_NEAR(d.eps3, 1.0 / n, 1e-15);
    EXPECT_DOUBLE_EQ(d.eps_total, d.eps0 + d.eps1 + d.eps2 + d.eps3);
}

TEST(EpsilonDiagnostics, ClassicalEps2FollowsLogNOverN)
{
    std::vector<double> lx, ly;
    for (int n : {64, 128, 256, 512, 1024}) {
        const double eps2 = epsilon_diagnostics(classical_factor(n)).eps2;
        const double scale = std::log(n) / n;
        EXPECT_LE(eps2, scale);
        lx.push_back(std::log(scale));
        ly.push_back(std::log(eps2));
    }
    EXPECT_NEAR(oracle::slope(lx, ly), 1.0, 0.1);
}

TEST(EpsilonDiagnostics, NoiseAdaptedEps0)
{
    const EpsilonDiagnostics d = epsilon_diagnostics(noise_adapted_factor(1e-4, 10.0, 1000));
    const double c = d.eps0 / 0.1;
    RecordProperty("observed_c", std::to_string(c));
    EXPECT_LE(c, 2.0);
    EXPECT_GT(c, 0.0);
}

TEST(EpsilonDiagnostics, TruncatedStartsAboveFirstMode)
{
    const EpsilonDiagnostics d = epsilon_diagnostics(truncated_factor(2e-5, 19.0, 8.0 * pi, 1000, 1000));
    EXPECT_EQ(d.eps3, 0.0);
}

TEST(EnergyReport, ClassicalJumpEnergy)
{
    for (int n : {10, 100, 1000}) {
        const EnergyReport r = energy_report(classical_factor(n), 0.0, RegularEnergy::l2);
        EXPECT_NEAR(r.jump * n, 1.0, 1e-9);
        EXPECT_EQ(r.noise, 0.0);
        EXPECT_TRUE(r.regular_lower_truncated);
    }
}

TEST(EnergyReport, NoiseEnergyMatchesOracles)
{
    const double eta = 1e-4, beta = 4.0;
    const int n = 1000;
    const ConcentrationFactor f = noise_adapted_factor(eta, beta, n);
    const EnergyReport r = energy_report(f, eta, RegularEnergy::bv);
    const double exact = noise_energy_exact(eta, beta, n);
    const double gk = oracle::gauss_kronrod([&](double xi) { return f.evaluate(xi) * f.evaluate(xi); }, 0.0, 1.0);
    EXPECT_NEAR(r.noise / exact, 1.0, 1e-9);
    EXPECT_NEAR(r.noise / (eta * n * gk), 1.0, 1e-9);
    EXPECT_DOUBLE_EQ(r.noise_effective * r.noise_effective, 4.0 * r.noise);
    EXPECT_DOUBLE_EQ(r.jump_effective, std::sqrt(eta) * beta);
}

TEST(EnergyReport, NoiseEnergyAsymptote)
{
    // ∫ζ²/(1+ζ²)² over (0, ∞) is π/4, so E_η → √η/(πβ) once √ηβN is large.
    for (double eta : {1e-6, 1e-5, 1e-4}) {
        for (double beta : {1.0, 5.0, 20.0}) {
            const int n = 1000;
            if (std::sqrt(eta) * beta * n < 10.0) continue;
            const EnergyReport r = energy_report(noise_adapted_factor(eta, beta, n), eta, RegularEnergy::l2);
            EXPECT_NEAR(r.noise * pi * beta / std::sqrt(eta), 1.0, 0.25);
        }
    }
}

TEST(EnergyReport, Homogeneity)
{
    const double eta = 2e-5;
    const ConcentrationFactor f = truncated_factor(eta, 19.0, 8.0 * pi, 800, 1000);
    const ConcentrationFactor g = f.scaled(-3.0);
    const EnergyReport a = energy_report(f, eta, RegularEnergy::bv);
    const EnergyReport b = energy_report(g, eta, RegularEnergy::bv);
    EXPECT_NEAR(b.jump / a.jump, 9.0, 1e-8);
    EXPECT_NEAR(b.noise / a.noise, 9.0, 1e-8);
    EXPECT_NEAR(b.regular / a.regular, 3.0, 1e-8);
    EXPECT_FALSE(a.regular_lower_truncated);
    const EnergyReport l2a = energy_report(f, eta, RegularEnergy::l2);
    const EnergyReport l2b = energy_report(g, eta, RegularEnergy::l2);
    EXPECT_NEAR(l2b.regular / l2a.regular, 9.0, 1e-8);
}

TEST(EnergyReport, CustomTableUsesDiscreteSums)
{
    const ConcentrationFactor f = custom_factor({0.5, 1.0, 0.25}, false);
    const EnergyReport r = energy_report(f, 0.1, RegularEnergy::bv);
    EXPECT_NEAR(r.jump, 0.25 + 0.25 + 0.25 * 0.25 / 9.0, 1e-15);
    EXPECT_NEAR(r.noise, 0.1 * (0.25 + 1.0 + 0.0625), 1e-15);
    EXPECT_NEAR(r.regular, 0.5 + 0.25 + 0.25 / 9.0, 1e-15);
    EXPECT_EQ(r.jump_effective, 0.0);
}

TEST(BetaPolicy, Values)
{
    EXPECT_NEAR(beta_policy(2e-5), 19.07, 0.01);
    EXPECT_NEAR(beta_policy(4.5e-5), 16.66, 0.01);
    EXPECT_NEAR(beta_policy(std::pow(pi, 6) * 1e-6), 10.0, 1e-12);
    EXPECT_THROW(beta_policy(1.0), PreconditionError);
    EXPECT_THROW(beta_policy(0.0), PreconditionError);
}

TEST(OptimizeBeta, SlopeAndStationaryPoint)
{
    std::vector<double> lx, ly;
    for (double eta : {1e-6, 1e-5, 1e-4}) {
        const BetaOptimum opt = optimize_beta(eta, 0.1, 1000.0);
        // Stationary point of 2η^{1/4}/√(πβ) + √ηβ.
        const double stationary = std::pow(pi, -1.0 / 3.0) * std::pow(eta, -1.0 / 6.0);
        EXPECT_NEAR(opt.beta / stationary, 1.0, 0.3);
        EXPECT_LE(opt.objective, beta_objective(eta, beta_policy(eta), 1000));
        lx.push_back(std::log(eta));
        ly.push_back(std::log(opt.beta));
    }
    EXPECT_NEAR(oracle::slope(lx, ly), -1.0 / 6.0, 0.05);
}

TEST(OptimizeBeta, BeatsLogGrid)
{
    const double eta = 1e-5, lo = 0.5, hi = 200.0;
    const BetaOptimum opt = optimize_beta(eta, lo, hi);
    for (int i = 0; i < 100; ++i) {
        const double beta = std::exp(std::log(lo) + i * (std::log(hi) - std::log(lo)) / 99.0);
        EXPECT_LE(opt.objective, beta_objective(eta, beta, 1000));
    }
}

TEST(OptimizeBeta, WeightScalingInvariance)
{
    const BetaOptimum a = optimize_beta(1e-5, 0.1, 1000.0, 1000, {1.0, 1.0});
    const BetaOptimum b = optimize_beta(1e-5, 0.1, 1000.0, 1000, {2.0, 2.0});
    EXPECT_NEAR(b.beta / a.beta, 1.0, 1e-4);
    EXPECT_NEAR(b.objective, 2.0 * a.objective, 1e-12);
}

TEST(OptimizeBeta, BoundaryMinimumReported)
{
    try {
        optimize_beta(1e-4, 50.0, 100.0);
        FAIL() << "expected NoInteriorMinimum";
    } catch (const NoInteriorMinimum& e) {
        EXPECT_DOUBLE_EQ(e.boundary_beta(), 50.0);
    }
    EXPECT_THROW(optimize_beta(1e-4, 5.0, 1.0), PreconditionError);
}

TEST(PlateauStats, ExcludesNeighbourhoods)
{
    const std::vector<double> grid = {-3.0, -1.0, 0.0, 1.0, 3.0};
    const std::vector<double> samples = {0.1, 2.0, 5.0, -0.4, -0.2};
    const std::vector<Jump> jumps = {{0.0, 1.0}};
    const PlateauStats p = plateau_stats(grid, samples, jumps, 0.5);
    EXPECT_EQ(p.count, 4u);
    EXPECT_DOUBLE_EQ(p.max, 2.0);
    // -3 and 3 are 2π - 6 ≈ 0.28 from each other, not from the jump; both stay.
    EXPECT_NEAR(p.rms, std::sqrt((0.01 + 4.0 + 0.16 + 0.04) / 4.0), 1e-15);
}

TEST(MonteCarlo, NoiselessTrialsHaveZeroVariance)
{
    const int n = 64;
    const MonteCarloSummary s =
        monte_carlo_scale(SignalSpec::sawtooth(), 0.0, classical_factor(n), 3, 10);
    ASSERT_EQ(s.trials.size(), 3u);
    EXPECT_EQ(s.amplitude_std[0], 0.0);
    EXPECT_NEAR(s.amplitude_mean[0], 1.0, 1e-13);
    EXPECT_EQ(s.detection_rate, 1.0);
    EXPECT_EQ(s.trials[2].seed, 12u);
}

TEST(MonteCarlo, Deterministic)
{
    const int n = 128;
    const ConcentrationFactor f = noise_adapted_factor(1e-4, beta_policy(1e-4), n);
    const MonteCarloSummary a = monte_carlo_scale(SignalSpec::sawtooth(), 1e-4, f, 5, 77);
    const MonteCarloSummary b = monte_carlo_scale(SignalSpec::sawtooth(), 1e-4, f, 5, 77);
    for (std::size_t t = 0; t < 5; ++t) {
        EXPECT_EQ(a.trials[t].jump_values, b.trials[t].jump_values);
        EXPECT_EQ(a.trials[t].plateau_rms, b.trials[t].plateau_rms);
    }
    EXPECT_GT(a.amplitude_std[0], 0.0);
}

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace edges {

enum class FactorFamily {
    classical_linear,
    noise_adapted,
    truncated_optimal,
    regularized_optimal,
    custom_table,
};

std::string_view to_string(FactorFamily family);
/// Throws PreconditionError for unknown names.
FactorFamily factor_family_from_string(std::string_view name);

/// Parameters of the noise-aware families. k0 and N0 are in mode units;
/// k0 may be non-integer.
struct FactorParams {
    double eta = 0.0;
    double beta = 1.0;
    double k0 = 0.0;
    int N0 = 0;
    double epsilon_reg = 0.0;
};

/// A concentration factor σ sampled at ξ_k = k/N, k = 1..N, together with
/// the closed form it was sampled from.
///
/// Construct through the factory functions below; values are immutable.
class ConcentrationFactor {
public:
    [[nodiscard]] FactorFamily family() const { return family_; }
    [[nodiscard]] const FactorParams& params() const { return params_; }
    [[nodiscard]] int N() const { return N_; }
    [[nodiscard]] std::span<const double> values() const { return values_; }
    /// s_k for k = 1..N; zero for k = 0.
    [[nodiscard]] double value(int k) const;
    /// C_σ actually applied (including any later scaling).
    [[nodiscard]] double norm_constant() const { return norm_constant_ * gain_; }

    /// σ(ξ) on [0, 1]. Custom tables interpolate σ(ξ)/ξ linearly between
    /// the samples, holding the first ratio constant on [0, 1/N].
    [[nodiscard]] double evaluate(double xi) const;

    /// ∫₀¹ σ(ξ)/ξ dξ: adaptive quadrature of the closed form for the
    /// analytic families, the trapezoid rule for custom tables.
    [[nodiscard]] double normalization_integral() const;

    /// Points in (0, 1) where σ has a kink or a jump.
    [[nodiscard]] std::vector<double> breakpoints() const;

    /// The same factor multiplied by c (closed form and samples).
    [[nodiscard]] ConcentrationFactor scaled(double c) const;

    /// True for the families built from (η, β).
    [[nodiscard]] bool has_noise_parameters() const;

private:
    ConcentrationFactor(FactorFamily family, FactorParams params, int N, double norm_constant);
    // σ at continuous mode index κ = Nξ, without the gain.
    [[nodiscard]] double shape_at_mode(double kappa) const;
    void sample();

    friend ConcentrationFactor classical_factor(int N);
    friend ConcentrationFactor noise_adapted_factor(double eta, double beta, int N);
    friend ConcentrationFactor truncated_factor(double eta, double beta, double k0, int N0, int N);
    friend ConcentrationFactor regularized_factor(double eta, double beta, double k0, int N,
                                                  double epsilon_reg);
    friend ConcentrationFactor custom_factor(std::vector<double> table, bool normalize);

    FactorFamily family_;
    FactorParams params_;
    int N_;
    double norm_constant_;
    double gain_ = 1.0;
    std::vector<double> values_;
    std::vector<double> ratios_;  // custom tables: s_k / (k/N)
};

/// σ(ξ) = ξ. Already normalized.
ConcentrationFactor classical_factor(int N);

/// σ_η(ξ) = √ηβNξ / ((1 + ηβ²N²ξ²) · atan(√ηβN)).
ConcentrationFactor noise_adapted_factor(double eta, double beta, int N);

/// Closed form of ∫_{k0/N}^1 (Nξ - k0) / (ξ(ηβ²N²ξ² + 1)) dξ with N = n_eff.
/// The value is cross-checked against adaptive quadrature and a relative
/// mismatch above 1e-8 raises NumericalError.
double exact_normalization_integral(double eta, double beta, double k0, int n_eff);

/// Adaptive-quadrature evaluation of the same integral.
double quadrature_normalization_integral(double eta, double beta, double k0, int n_eff);

/// Large-N simplifications of the normalization integral, kept as diagnostics:
/// k0 ln(√ηβN) + atan(√ηβN)/(√ηβ) and k0 ln(√ηβN) + π/(2√ηβ).
double approximate_normalization_integral(double eta, double beta, double k0, int n_eff);
double asymptotic_normalization_integral(double eta, double beta, double k0, int n_eff);

/// s_k = C(k - k0)₊ / (1 + ηβ²k²) for k0 < k <= N0, zero otherwise, with
/// C = 1 / exact_normalization_integral(η, β, k0, N0).
ConcentrationFactor truncated_factor(double eta, double beta, double k0, int N0, int N);

/// Mollified optimal factor: the truncated form where Nξ - k0 > ε, and
/// CεNξ / (ε(1 + ηβ²N²ξ²) + Ck0) below it. C is the truncated constant
/// with N0 = N.
ConcentrationFactor regularized_factor(double eta, double beta, double k0, int N,
                                       double epsilon_reg);

/// User-supplied samples s_1..s_N. With normalize, rescaled so the trapezoid
/// estimate of ∫σ/ξ is one.
ConcentrationFactor custom_factor(std::vector<double> table, bool normalize);

}  // namespace edges

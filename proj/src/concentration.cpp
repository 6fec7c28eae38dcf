#include "edges/concentration.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "edges/error.hpp"
#include "edges/quadrature.hpp"

namespace edges {

namespace {

constexpr double lower_limit = 1e-12;

void require_finite_positive(double v, const char* what)
{
    if (!(std::isfinite(v) && v > 0.0)) {
        std::ostringstream msg;
        msg << what << " must be finite and > 0 (got " << v << ")";
        throw PreconditionError(msg.str());
    }
}

void require_band(double k0, int n_eff)
{
    if (!(std::isfinite(k0) && k0 >= 0.0 && k0 < n_eff)) {
        std::ostringstream msg;
        msg << "normalization integral: requires 0 <= k0 < N_eff (k0 = " << k0
            << ", N_eff = " << n_eff << ")";
        throw PreconditionError(msg.str());
    }
}

// Integrates g over [a, b] splitting at the given interior points.
template <typename G>
double piecewise_integral(G&& g, double a, double b, std::vector<double> cuts, double tol)
{
    cuts.push_back(a);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    double total = 0.0;
    for (std::size_t i = 1; i < cuts.size(); ++i) {
        const double lo = std::max(cuts[i - 1], a);
        const double hi = std::min(cuts[i], b);
        if (hi > lo) {
            total += quad::adaptive_simpson(g, lo, hi, {.abs_tol = tol});
        }
    }
    return total;
}

}  // namespace

std::string_view to_string(FactorFamily family)
{
    switch (family) {
    case FactorFamily::classical_linear: return "classical_linear";
    case FactorFamily::noise_adapted: return "noise_adapted";
    case FactorFamily::truncated_optimal: return "truncated_optimal";
    case FactorFamily::regularized_optimal: return "regularized_optimal";
    case FactorFamily::custom_table: return "custom_table";
    }
    return "unknown";
}

FactorFamily factor_family_from_string(std::string_view name)
{
    if (name == "classical_linear" || name == "classical") return FactorFamily::classical_linear;
    if (name == "noise_adapted") return FactorFamily::noise_adapted;
    if (name == "truncated_optimal" || name == "truncated") return FactorFamily::truncated_optimal;
    if (name == "regularized_optimal" || name == "regularized") return FactorFamily::regularized_optimal;
    if (name == "custom_table" || name == "custom") return FactorFamily::custom_table;
    throw PreconditionError("unknown factor family '" + std::string(name) + "'");
}

ConcentrationFactor::ConcentrationFactor(FactorFamily family, FactorParams params, int N,
                                         double norm_constant)
    : family_(family), params_(params), N_(N), norm_constant_(norm_constant)
{
}

double ConcentrationFactor::shape_at_mode(double kappa) const
{
    const FactorParams& p = params_;
    switch (family_) {
    case FactorFamily::classical_linear:
        return kappa / N_;
    case FactorFamily::noise_adapted: {
        const double a = std::sqrt(p.eta) * p.beta;
        return norm_constant_ * a * kappa / (1.0 + a * a * kappa * kappa);
    }
    case FactorFamily::truncated_optimal:
        if (kappa <= p.k0 || kappa > p.N0) {
            return 0.0;
        }
        return norm_constant_ * (kappa - p.k0) / (1.0 + p.eta * p.beta * p.beta * kappa * kappa);
    case FactorFamily::regularized_optimal: {
        const double damping = 1.0 + p.eta * p.beta * p.beta * kappa * kappa;
        const double t = kappa - p.k0;
        if (t > p.epsilon_reg) {
            return norm_constant_ * t / damping;
        }
        return norm_constant_ * p.epsilon_reg * kappa /
               (p.epsilon_reg * damping + norm_constant_ * p.k0);
    }
    case FactorFamily::custom_table: {
        const double xi = kappa / N_;
        if (kappa <= 1.0) {
            return xi * ratios_.front();
        }
        const auto lower = static_cast<std::size_t>(kappa);
        if (lower >= ratios_.size()) {
            return xi * ratios_.back();
        }
        const double w = kappa - static_cast<double>(lower);
        return xi * ((1.0 - w) * ratios_[lower - 1] + w * ratios_[lower]);
    }
    }
    return 0.0;
}

void ConcentrationFactor::sample()
{
    values_.resize(static_cast<std::size_t>(N_));
    for (int k = 1; k <= N_; ++k) {
        const double v = shape_at_mode(static_cast<double>(k));
        if (!std::isfinite(v)) {
            throw NumericalError("concentration factor produced a non-finite sample");
        }
        values_[static_cast<std::size_t>(k - 1)] = v;
    }
}

double ConcentrationFactor::value(int k) const
{
    if (k <= 0 || k > N_) {
        return 0.0;
    }
    return gain_ * values_[static_cast<std::size_t>(k - 1)];
}

double ConcentrationFactor::evaluate(double xi) const
{
    return gain_ * shape_at_mode(xi * N_);
}

std::vector<double> ConcentrationFactor::breakpoints() const
{
    std::vector<double> cuts;
    const auto add = [&](double kappa) {
        const double xi = kappa / N_;
        if (xi > 0.0 && xi < 1.0) {
            cuts.push_back(xi);
        }
    };
    switch (family_) {
    case FactorFamily::truncated_optimal:
        add(params_.k0);
        add(params_.N0);
        break;
    case FactorFamily::regularized_optimal:
        add(params_.k0 + params_.epsilon_reg);
        break;
    case FactorFamily::custom_table:
        for (int k = 1; k < N_; ++k) {
            add(k);
        }
        break;
    default:
        break;
    }
    return cuts;
}

double ConcentrationFactor::normalization_integral() const
{
    if (family_ == FactorFamily::custom_table) {
        // Exact integral of the piecewise-linear ratio = trapezoid rule.
        double sum = ratios_.front() / N_;
        for (std::size_t i = 1; i < ratios_.size(); ++i) {
            sum += 0.5 * (ratios_[i - 1] + ratios_[i]) / N_;
        }
        return gain_ * sum;
    }
    const auto integrand = [this](double xi) { return evaluate(xi) / xi; };
    return piecewise_integral(integrand, lower_limit, 1.0, breakpoints(), 1e-10 * std::abs(gain_) + 1e-14);
}

ConcentrationFactor ConcentrationFactor::scaled(double c) const
{
    require(std::isfinite(c), "scaled: factor must be finite");
    ConcentrationFactor out = *this;
    out.gain_ *= c;
    return out;
}

bool ConcentrationFactor::has_noise_parameters() const
{
    return family_ == FactorFamily::noise_adapted || family_ == FactorFamily::truncated_optimal ||
           family_ == FactorFamily::regularized_optimal;
}

ConcentrationFactor classical_factor(int N)
{
    require(N >= 1, "classical_factor: N must be >= 1");
    ConcentrationFactor f(FactorFamily::classical_linear, FactorParams{.N0 = N}, N, 1.0);
    f.sample();
    return f;
}

ConcentrationFactor noise_adapted_factor(double eta, double beta, int N)
{
    require(N >= 1, "noise_adapted_factor: N must be >= 1");
    require_finite_positive(eta, "noise_adapted_factor: eta");
    require_finite_positive(beta, "noise_adapted_factor: beta");
    const double scale = std::sqrt(eta) * beta * N;
    FactorParams p{.eta = eta, .beta = beta, .k0 = 0.0, .N0 = N};
    ConcentrationFactor f(FactorFamily::noise_adapted, p, N, 1.0 / std::atan(scale));
    f.sample();
    const double integral = f.normalization_integral();
    if (std::abs(integral - 1.0) > 1e-8) {
        std::ostringstream msg;
        msg << "noise_adapted_factor: normalization integral " << integral << " differs from 1";
        throw NumericalError(msg.str());
    }
    return f;
}

double quadrature_normalization_integral(double eta, double beta, double k0, int n_eff)
{
    require_finite_positive(eta, "normalization integral: eta");
    require_finite_positive(beta, "normalization integral: beta");
    require_band(k0, n_eff);
    const double n = n_eff;
    const double q = eta * beta * beta * n * n;
    const auto integrand = [=](double xi) {
        return (n * xi - k0) / (xi * (q * xi * xi + 1.0));
    };
    const double a = std::max(k0 / n, lower_limit);
    // Second pass with a tolerance proportional to the value itself.
    const double rough = quad::adaptive_simpson(integrand, a, 1.0, {.abs_tol = 1e-8});
    return quad::adaptive_simpson(integrand, a, 1.0, {.abs_tol = 1e-12 * std::abs(rough) + 1e-300});
}

double exact_normalization_integral(double eta, double beta, double k0, int n_eff)
{
    require_finite_positive(eta, "normalization integral: eta");
    require_finite_positive(beta, "normalization integral: beta");
    require_band(k0, n_eff);
    const double a = std::sqrt(eta) * beta;
    const double n = n_eff;
    const double log_term = k0 > 0.0 ? k0 * std::log(k0 / n) : 0.0;
    const double damping_term =
        0.5 * k0 * std::log((a * a * n * n + 1.0) / (a * a * k0 * k0 + 1.0));
    const double arctan_term = (std::atan(a * n) - std::atan(a * k0)) / a;
    const double closed = log_term + damping_term + arctan_term;

    const double numeric = quadrature_normalization_integral(eta, beta, k0, n_eff);
    if (std::abs(closed - numeric) > 1e-8 * std::abs(closed)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "exact_normalization_integral: closed form " << closed << " vs quadrature " << numeric;
        throw NumericalError(msg.str());
    }
    return closed;
}

double approximate_normalization_integral(double eta, double beta, double k0, int n_eff)
{
    const double a = std::sqrt(eta) * beta;
    return k0 * std::log(a * n_eff) + std::atan(a * n_eff) / a;
}

double asymptotic_normalization_integral(double eta, double beta, double k0, int n_eff)
{
    const double a = std::sqrt(eta) * beta;
    return k0 * std::log(a * n_eff) + std::numbers::pi / (2.0 * a);
}

ConcentrationFactor truncated_factor(double eta, double beta, double k0, int N0, int N)
{
    require(N >= 1, "truncated_factor: N must be >= 1");
    require(N0 >= 1 && N0 <= N, "truncated_factor: requires 1 <= N0 <= N");
    if (!(k0 < N0)) {
        std::ostringstream msg;
        msg << "truncated_factor: requires k0 < N0 (k0 = " << k0 << ", N0 = " << N0 << ")";
        throw PreconditionError(msg.str());
    }
    const double c = 1.0 / exact_normalization_integral(eta, beta, k0, N0);
    FactorParams p{.eta = eta, .beta = beta, .k0 = k0, .N0 = N0};
    ConcentrationFactor f(FactorFamily::truncated_optimal, p, N, c);
    f.sample();
    return f;
}

ConcentrationFactor regularized_factor(double eta, double beta, double k0, int N,
                                       double epsilon_reg)
{
    require(N >= 1, "regularized_factor: N must be >= 1");
    require_finite_positive(epsilon_reg, "regularized_factor: epsilon_reg");
    const double c = 1.0 / exact_normalization_integral(eta, beta, k0, N);
    FactorParams p{.eta = eta, .beta = beta, .k0 = k0, .N0 = N, .epsilon_reg = epsilon_reg};
    ConcentrationFactor f(FactorFamily::regularized_optimal, p, N, c);
    f.sample();
    return f;
}

ConcentrationFactor custom_factor(std::vector<double> table, bool normalize)
{
    require(!table.empty(), "custom_factor: table must not be empty");
    for (const double v : table) {
        require(std::isfinite(v), "custom_factor: table entries must be finite");
    }
    const int N = static_cast<int>(table.size());
    ConcentrationFactor f(FactorFamily::custom_table, FactorParams{.N0 = N}, N, 1.0);
    f.ratios_.resize(table.size());
    for (int k = 1; k <= N; ++k) {
        f.ratios_[static_cast<std::size_t>(k - 1)] =
            table[static_cast<std::size_t>(k - 1)] * N / static_cast<double>(k);
    }
    if (normalize) {
        const double integral = f.normalization_integral();
        if (!(std::abs(integral) >= 1e-12)) {
            std::ostringstream msg;
            msg << "custom_factor: normalization integral " << integral << " is too small to normalize";
            throw PreconditionError(msg.str());
        }
        f.norm_constant_ = 1.0 / integral;
        for (double& r : f.ratios_) {
            r *= f.norm_constant_;
        }
        for (double& v : table) {
            v *= f.norm_constant_;
        }
    }
    f.values_ = std::move(table);
    return f;
}

}  // namespace edges

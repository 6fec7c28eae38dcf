#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace edges {

using cplx = std::complex<double>;

/// A jump discontinuity: location in (-π, π] and amplitude f(z+) - f(z-).
struct Jump {
    double location = 0.0;
    double amplitude = 0.0;
};

/// Band-limited smooth part of a test signal, stored by its Fourier
/// coefficients ŝ(k) for k = 0..K. Negative modes follow from conjugate
/// symmetry, so the represented function is always real.
class SmoothPart {
public:
    SmoothPart() = default;

    SmoothPart& add_cosine(int k, double amplitude);
    SmoothPart& add_sine(int k, double amplitude);
    /// Adds c to ŝ(k) (and conj(c) to ŝ(-k)). For k = 0, c must be real.
    SmoothPart& add_coefficient(int k, cplx c);

    [[nodiscard]] cplx coefficient(int k) const;
    [[nodiscard]] double value(double x) const;
    [[nodiscard]] int max_mode() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const;

private:
    std::vector<cplx> coeffs_;
};

/// Piecewise-smooth 2π-periodic test signal: jumps plus a smooth part.
///
/// Each jump contributes amplitude · saw(x - z), where saw is the zero-mean
/// sawtooth 1/2 - y/(2π) on (0, 2π) with a unit upward jump at y = 0.
struct SignalSpec {
    std::vector<Jump> jumps;
    SmoothPart smooth;

    /// Throws PreconditionError on duplicate locations, zero amplitudes,
    /// or locations outside (-π, π].
    void validate() const;

    /// Pointwise value; at a jump the average of the one-sided limits.
    [[nodiscard]] double value(double x) const;

    /// Same signal translated by delta (jump locations wrapped into (-π, π]).
    [[nodiscard]] SignalSpec shifted(double delta) const;

    static SignalSpec sawtooth(double location = 0.0, double amplitude = 1.0);
};

/// Fourier coefficients c_k, k = -N..N, plus noise provenance.
struct SpectralData {
    int N = 0;
    std::vector<cplx> coeffs;  // index k + N
    std::optional<double> noise_variance;
    std::optional<std::uint64_t> seed;

    SpectralData() = default;
    explicit SpectralData(int modes);

    [[nodiscard]] cplx at(int k) const { return coeffs[static_cast<std::size_t>(k + N)]; }
    cplx& at(int k) { return coeffs[static_cast<std::size_t>(k + N)]; }

    /// max_k |c_{-k} - conj(c_k)| (k = 0 included through its imaginary part).
    [[nodiscard]] double symmetry_defect() const;
    /// Σ |c_k| over all modes.
    [[nodiscard]] double l1_norm() const;
};

/// a·x + y, mode by mode. Noise metadata is dropped.
SpectralData axpy(double a, const SpectralData& x, const SpectralData& y);

/// Wraps an angle into (-π, π].
double wrap_angle(double x);

/// Distance between two angles on the circle.
double periodic_distance(double a, double b);

/// M uniformly spaced points covering (-π, π]: x_j = -π + 2π(j + 1)/M.
std::vector<double> uniform_grid(int M);

/// Exact coefficients from the closed forms of the jump and smooth parts.
SpectralData analytic_coefficients(const SignalSpec& signal, int N);

/// Default sample count for quadrature_coefficients: max(8N, 1024).
int default_sample_count(int N);

/// Coefficients by midpoint-rule discretization of (1/2π)∫ f(x) e^{-ikx} dx
/// over M samples. Rejects M < 2N + 1. M = 0 selects the default.
SpectralData quadrature_coefficients(const SignalSpec& signal, int N, int M = 0);

/// Adds complex white noise with E|n̂(k)|² = η: real and imaginary parts each
/// N(0, η/2) for k ≥ 1, n̂(-k) = conj n̂(k), and n̂(0) ~ N(0, η).
SpectralData add_white_noise(SpectralData data, double eta, std::uint64_t seed);

/// Real part of S_N f on the grid. Throws NumericalError if the data is not
/// conjugate-symmetric to within 1e-10 · Σ|c_k|.
std::vector<double> partial_sum_eval(const SpectralData& data, std::span<const double> grid);

/// Throws NumericalError when c_{-k} differs from conj(c_k) beyond
/// 1e-10 · Σ|c_k|. `context` prefixes the message.
void check_conjugate_symmetry(const SpectralData& data, const char* context);

}  // namespace edges

#include "edges/spectral_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "edges/error.hpp"

namespace edges {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

// Zero-mean sawtooth with a unit upward jump at 0.
double unit_saw(double y)
{
    double t = std::fmod(y, two_pi);
    if (t < 0.0) {
        t += two_pi;
    }
    if (t == 0.0) {
        return 0.0;
    }
    return 0.5 - t / two_pi;
}

// Standard normals from a 64-bit Mersenne Twister through Box-Muller, so the
// stream is identical across standard libraries.
class NormalStream {
public:
    explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

    double next()
    {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_open();
        const double u2 = uniform_open();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        spare_ = radius * std::sin(two_pi * u2);
        has_spare_ = true;
        return radius * std::cos(two_pi * u2);
    }

private:
    // Uniform on (0, 1].
    double uniform_open() { return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53; }

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace

SmoothPart& SmoothPart::add_coefficient(int k, cplx c)
{
    require(k >= 0, "SmoothPart: mode index must be non-negative");
    require(std::isfinite(c.real()) && std::isfinite(c.imag()),
            "SmoothPart: coefficient must be finite");
    require(k != 0 || c.imag() == 0.0, "SmoothPart: the mean coefficient must be real");
    if (static_cast<int>(coeffs_.size()) <= k) {
        coeffs_.resize(static_cast<std::size_t>(k) + 1, cplx{0.0, 0.0});
    }
    coeffs_[static_cast<std::size_t>(k)] += c;
    return *this;
}

SmoothPart& SmoothPart::add_cosine(int k, double amplitude)
{
    return add_coefficient(k, k == 0 ? cplx{amplitude, 0.0} : cplx{0.5 * amplitude, 0.0});
}

SmoothPart& SmoothPart::add_sine(int k, double amplitude)
{
    require(k >= 1, "SmoothPart: sine mode must be >= 1");
    return add_coefficient(k, cplx{0.0, -0.5 * amplitude});
}

cplx SmoothPart::coefficient(int k) const
{
    const int m = std::abs(k);
    if (m >= static_cast<int>(coeffs_.size())) {
        return {0.0, 0.0};
    }
    const cplx c = coeffs_[static_cast<std::size_t>(m)];
    return k >= 0 ? c : std::conj(c);
}

double SmoothPart::value(double x) const
{
    if (coeffs_.empty()) {
        return 0.0;
    }
    double sum = coeffs_[0].real();
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        const double kx = static_cast<double>(k) * x;
        sum += 2.0 * (coeffs_[k].real() * std::cos(kx) - coeffs_[k].imag() * std::sin(kx));
    }
    return sum;
}

bool SmoothPart::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const cplx& c) { return c == cplx{0.0, 0.0}; });
}

void SignalSpec::validate() const
{
    for (std::size_t i = 0; i < jumps.size(); ++i) {
        const Jump& j = jumps[i];
        require(std::isfinite(j.location) && std::isfinite(j.amplitude),
                "SignalSpec: jump location and amplitude must be finite");
        require(j.location > -pi && j.location <= pi,
                "SignalSpec: jump location must lie in (-pi, pi]");
        require(j.amplitude != 0.0, "SignalSpec: jump amplitude must be nonzero");
        for (std::size_t m = 0; m < i; ++m) {
            require(jumps[m].location != j.location, "SignalSpec: jump locations must be distinct");
        }
    }
}

double SignalSpec::value(double x) const
{
    double sum = smooth.value(x);
    for (const Jump& j : jumps) {
        sum += j.amplitude * unit_saw(x - j.location);
    }
    return sum;
}

SignalSpec SignalSpec::shifted(double delta) const
{
    SignalSpec out;
    out.jumps.reserve(jumps.size());
    for (const Jump& j : jumps) {
        out.jumps.push_back({wrap_angle(j.location + delta), j.amplitude});
    }
    for (int k = 0; k <= smooth.max_mode(); ++k) {
        const cplx c = smooth.coefficient(k);
        if (c != cplx{0.0, 0.0}) {
            out.smooth.add_coefficient(k, k == 0 ? c : c * std::polar(1.0, -k * delta));
        }
    }
    return out;
}

SignalSpec SignalSpec::sawtooth(double location, double amplitude)
{
    SignalSpec s;
    s.jumps.push_back({location, amplitude});
    return s;
}

SpectralData::SpectralData(int modes) : N(modes)
{
    require(modes >= 1, "SpectralData: N must be >= 1");
    coeffs.assign(2 * static_cast<std::size_t>(modes) + 1, cplx{0.0, 0.0});
}

double SpectralData::symmetry_defect() const
{
    double defect = std::abs(at(0).imag());
    for (int k = 1; k <= N; ++k) {
        defect = std::max(defect, std::abs(at(-k) - std::conj(at(k))));
    }
    return defect;
}

double SpectralData::l1_norm() const
{
    double sum = 0.0;
    for (const cplx& c : coeffs) {
        sum += std::abs(c);
    }
    return sum;
}

SpectralData axpy(double a, const SpectralData& x, const SpectralData& y)
{
    require(x.N == y.N, "axpy: mode counts differ");
    SpectralData out(x.N);
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
        out.coeffs[i] = a * x.coeffs[i] + y.coeffs[i];
    }
    return out;
}

double wrap_angle(double x)
{
    double t = std::fmod(x + pi, two_pi);
    if (t <= 0.0) {
        t += two_pi;
    }
    return t - pi;
}

double periodic_distance(double a, double b)
{
    return std::abs(wrap_angle(a - b));
}

std::vector<double> uniform_grid(int M)
{
    require(M >= 1, "uniform_grid: M must be >= 1");
    std::vector<double> grid(static_cast<std::size_t>(M));
    for (int j = 0; j < M; ++j) {
        grid[static_cast<std::size_t>(j)] = -pi + two_pi * (j + 1) / M;
    }
    return grid;
}

SpectralData analytic_coefficients(const SignalSpec& signal, int N)
{
    require(N >= 1, "analytic_coefficients: N must be >= 1");
    signal.validate();
    SpectralData data(N);
    for (int k = -N; k <= N; ++k) {
        cplx c = signal.smooth.coefficient(k);
        if (k != 0) {
            for (const Jump& j : signal.jumps) {
                c += j.amplitude * std::polar(1.0, -k * j.location) / cplx{0.0, two_pi * k};
            }
        }
        data.at(k) = c;
    }
    return data;
}

int default_sample_count(int N)
{
    return std::max(8 * N, 1024);
}

SpectralData quadrature_coefficients(const SignalSpec& signal, int N, int M)
{
    require(N >= 1, "quadrature_coefficients: N must be >= 1");
    signal.validate();
    if (M == 0) {
        M = default_sample_count(N);
    }
    if (M < 2 * N + 1) {
        std::ostringstream msg;
        msg << "quadrature_coefficients: M = " << M << " aliases N = " << N
            << " (need M >= 2N + 1)";
        throw PreconditionError(msg.str());
    }
    std::vector<double> x(static_cast<std::size_t>(M));
    std::vector<double> f(static_cast<std::size_t>(M));
    for (int m = 0; m < M; ++m) {
        x[static_cast<std::size_t>(m)] = -pi + two_pi * (m + 0.5) / M;
        f[static_cast<std::size_t>(m)] = signal.value(x[static_cast<std::size_t>(m)]);
    }
    SpectralData data(N);
    for (int k = 0; k <= N; ++k) {
        cplx sum{0.0, 0.0};
        for (int m = 0; m < M; ++m) {
            sum += f[static_cast<std::size_t>(m)] * std::polar(1.0, -k * x[static_cast<std::size_t>(m)]);
        }
        sum /= static_cast<double>(M);
        if (k == 0) {
            sum.imag(0.0);
        }
        data.at(k) = sum;
        data.at(-k) = std::conj(sum);
    }
    return data;
}

SpectralData add_white_noise(SpectralData data, double eta, std::uint64_t seed)
{
    require(std::isfinite(eta) && eta >= 0.0, "add_white_noise: eta must be finite and >= 0");
    if (eta == 0.0) {
        return data;
    }
    NormalStream normals(seed);
    data.at(0) += cplx{std::sqrt(eta) * normals.next(), 0.0};
    const double half_sd = std::sqrt(0.5 * eta);
    for (int k = 1; k <= data.N; ++k) {
        const double re = half_sd * normals.next();
        const double im = half_sd * normals.next();
        data.at(k) += cplx{re, im};
        data.at(-k) += cplx{re, -im};
    }
    data.noise_variance = eta;
    data.seed = seed;
    return data;
}

void check_conjugate_symmetry(const SpectralData& data, const char* context)
{
    const double scale = data.l1_norm();
    const double defect = data.symmetry_defect();
    if (defect > 1e-10 * scale) {
        std::ostringstream msg;
        msg << context << ": coefficients are not conjugate-symmetric (defect " << defect
            << ", scale " << scale << ")";
        throw NumericalError(msg.str());
    }
}

std::vector<double> partial_sum_eval(const SpectralData& data, std::span<const double> grid)
{
    check_conjugate_symmetry(data, "partial_sum_eval");
    std::vector<double> out;
    out.reserve(grid.size());
    for (const double x : grid) {
        require(std::isfinite(x), "partial_sum_eval: grid values must be finite");
        // Real part of Σ c_k e^{ikx} folded onto k >= 0.
        double sum = data.at(0).real();
        for (int k = 1; k <= data.N; ++k) {
            const cplx c = data.at(k);
            const double kx = k * x;
            sum += 2.0 * (c.real() * std::cos(kx) - c.imag() * std::sin(kx));
        }
        out.push_back(sum);
    }
    return out;
}

}  // namespace edges

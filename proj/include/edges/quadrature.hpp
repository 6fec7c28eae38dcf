#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <utility>

#include "edges/error.hpp"

namespace edges::quad {

struct Options {
    double abs_tol = 1e-10;
    int max_depth = 50;
    long max_evaluations = 20'000'000;
};

namespace detail {

struct State {
    int max_depth;
    long budget;
};

template <typename F>
double simpson_step(F& f, double a, double fa, double m, double fm, double b, double fb,
                    double whole, double tol, int depth, State& st)
{
    if ((st.budget -= 2) < 0) {
        throw NumericalError("adaptive_simpson: evaluation budget exhausted");
    }
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    // Below roundoff of the local estimate further halving cannot help.
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() *
                         (std::abs(left) + std::abs(right));
    if (depth >= st.max_depth || std::abs(delta) <= std::max(15.0 * tol, floor)) {
        return left + right + delta / 15.0;
    }
    return simpson_step(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth + 1, st) +
           simpson_step(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth + 1, st);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b] with Richardson correction.
///
/// The interval is first split into 16 panels so that narrow features (a
/// Lorentzian of width 1/(√η β N), say) are not skipped by the initial
/// five-point estimate.
template <typename F>
double adaptive_simpson(F&& f, double a, double b, Options opts = {})
{
    if (!(b > a)) {
        return 0.0;
    }
    constexpr int panels = 16;
    const double width = (b - a) / panels;
    const double panel_tol = opts.abs_tol / panels;
    detail::State state{opts.max_depth, opts.max_evaluations};
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * width;
        const double hi = (p + 1 == panels) ? b : lo + width;
        const double mid = 0.5 * (lo + hi);
        const double flo = f(lo);
        const double fmid = f(mid);
        const double fhi = f(hi);
        const double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
        total += detail::simpson_step(f, lo, flo, mid, fmid, hi, fhi, whole, panel_tol, 0, state);
    }
    if (!std::isfinite(total)) {
        throw NumericalError("adaptive_simpson: non-finite integral");
    }
    return total;
}

/// Trapezoid rule over tabulated (x, y) pairs; x must be increasing.
inline double trapezoid(std::span<const double> x, std::span<const double> y)
{
    require(x.size() == y.size(), "trapezoid: x and y differ in length");
    double sum = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        sum += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
    }
    return sum;
}

}  // namespace edges::quad

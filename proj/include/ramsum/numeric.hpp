// Small numeric building blocks shared across the library:
// compensated (Kahan) accumulators, an adaptive Simpson rule for
// complex-valued integrands over a real parameter, and a least-squares
// slope fit. All reductions are sequential and deterministic.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>

namespace ramsum {

using cplx = std::complex<double>;

// Kahan-compensated accumulator. Adding terms in a fixed order gives
// bit-reproducible sums.
class KahanSum {
  public:
    void add(double x) {
        const double y = x - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Component-wise compensated complex accumulator.
class KahanSumC {
  public:
    void add(const cplx& z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    cplx value() const { return {re_.value(), im_.value()}; }

  private:
    KahanSum re_, im_;
};

// Thrown by evaluators when a numeric procedure cannot meet its contract
// (pole proximity, non-convergence, unreachable tolerance).
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline cplx simpson_step(const std::function<cplx(double)>& f, double a, double m, double b,
                         cplx fa, cplx fm, cplx fb, cplx whole, double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const cplx flm = f(lm);
    const cplx frm = f(rm);
    const cplx left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const cplx right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const cplx delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol || depth <= 0)
        return left + right + delta / 15.0;
    return simpson_step(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace detail

// Adaptive composite Simpson quadrature of a complex-valued function on
// [a, b]. `step` is the width of the initial panels (the recursion refines
// from there); `abs_tol` is the absolute tolerance budget for the whole
// interval.
inline cplx integrate_simpson(const std::function<cplx(double)>& f, double a, double b,
                              double abs_tol, double step, int max_depth = 28) {
    if (!(b > a)) return cplx{0.0, 0.0};
    if (!(step > 0.0)) throw numeric_error("integrate_simpson: step must be positive");
    const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / step)));
    const double h = (b - a) / panels;
    const double panel_tol = abs_tol / panels;
    KahanSumC total;
    for (int i = 0; i < panels; ++i) {
        const double x0 = a + i * h;
        const double x1 = (i + 1 == panels) ? b : x0 + h;
        const double xm = 0.5 * (x0 + x1);
        const cplx f0 = f(x0);
        const cplx fm = f(xm);
        const cplx f1 = f(x1);
        const cplx whole = (x1 - x0) / 6.0 * (f0 + 4.0 * fm + f1);
        total.add(detail::simpson_step(f, x0, xm, x1, f0, fm, f1, whole, panel_tol, max_depth));
    }
    return total.value();
}

// Ordinary least-squares slope of y against x. Requires >= 2 points.
inline double ols_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("ols_slope: need >= 2 aligned points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw std::invalid_argument("ols_slope: degenerate abscissae");
    return (n * sxy - sx * sy) / denom;
}

} // namespace ramsum

#include "ramsum/explicit_formula.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ramsum {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_pairs(const ZeroTable& table, std::size_t pairs) {
    if (pairs > table.size())
        throw std::out_of_range("zero sum: pairs exceeds the loaded table size");
}

// Sum of a positive-term-magnitude series whose terms are unimodal in k:
// they may grow up to about k_peak before factorial/geometric decay wins.
// `next_term(k)` returns the signed k-th term. Stops once past the peak
// and |term| < tol; growth for three consecutive k past the peak (or a
// magnitude blow-up) trips the divergence guard.
template <typename F>
double unimodal_series(F next_term, double tol, int k_peak, int k_cap) {
    KahanSum acc;
    double prev_mag = 0.0;
    int growth_streak = 0;
    for (int k = 1; k <= k_cap; ++k) {
        const double term = next_term(k);
        const double mag = std::abs(term);
        if (!std::isfinite(term) || mag > 1e290)
            throw numeric_error("series: terms overflow double range");
        acc.add(term);
        if (k > k_peak) {
            if (mag < tol) return acc.value();
            if (mag > prev_mag) {
                if (++growth_streak >= 3)
                    throw numeric_error("series: divergence guard tripped");
            } else {
                growth_streak = 0;
            }
        }
        prev_mag = mag;
    }
    throw numeric_error("series: no convergence within term cap");
}

} // namespace

std::vector<cplx> zero_sum_weights_c(const SumParams& params, const ZeroTable& table,
                                     std::size_t pairs) {
    params.validate();
    check_pairs(table, pairs);
    std::vector<cplx> w;
    w.reserve(pairs);
    for (std::size_t k = 0; k < pairs; ++k) {
        const cplx rho{0.5, table.ordinate(k)};
        const cplx sig = sigma(1.0 - rho / static_cast<double>(params.beta), params);
        w.push_back(sig / (table.zeta_prime_at(k) * rho));
    }
    return w;
}

double zero_sum_from_weights(const std::vector<cplx>& weights, const ZeroTable& table,
                             double x) {
    if (!(x > 0.0)) throw std::invalid_argument("zero sum: x must be positive");
    const double lx = std::log(x);
    const double sx = std::sqrt(x);
    KahanSum acc;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        const cplx xrho = std::polar(sx, table.ordinate(k) * lx);
        acc.add(2.0 * std::real(weights[k] * xrho));
    }
    return acc.value();
}

double zero_sum_c(double x, const SumParams& params, const ZeroTable& table,
                  std::size_t pairs) {
    return zero_sum_from_weights(zero_sum_weights_c(params, table, pairs), table, x);
}

double trivial_series_c(double x, const SumParams& params, double tol) {
    params.validate();
    if (!(x > 0.0)) throw std::invalid_argument("trivial_series_c: x must be positive");
    const auto divisors = power_divisors(params.n, params.beta);
    const double dmax = static_cast<double>(divisors.back());
    // term_k = (-1)^{k-1} (2 pi / x)^{2k} sigma_{1+2k/b}(n) / ((2k)! k zeta(2k+1)).
    // Expanding sigma over the divisor roots d gives per-divisor factors
    //   d^b (2 pi d / x)^{2k} / (2k)!
    // which are kept as running products so neither factor overflows on its
    // own; |term| peaks near 2k ~ 2 pi dmax / x.
    const int k_peak = static_cast<int>(std::ceil(std::numbers::pi * dmax / x)) + 1;
    std::vector<double> ratio2, run, dpow;
    for (long long d : divisors) {
        const double r = kTwoPi * static_cast<double>(d) / x;
        ratio2.push_back(r * r);
        run.push_back(1.0);
        dpow.push_back(std::pow(static_cast<double>(d), static_cast<double>(params.beta)));
    }
    auto term = [&, ratio2, run, dpow](int k) mutable {
        const double f = 1.0 / ((2.0 * k - 1.0) * (2.0 * k));
        double sig_weighted = 0.0; // sigma_{1+2k/b}(n) (2 pi / x)^{2k} / (2k)!
        for (std::size_t i = 0; i < run.size(); ++i) {
            run[i] *= ratio2[i] * f;
            sig_weighted += dpow[i] * run[i];
        }
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        return sign * sig_weighted / (static_cast<double>(k) * zeta_odd(k));
    };
    return unimodal_series(term, tol, k_peak, 4000);
}

ExplicitEvaluation explicit_c(double x, const SumParams& params, const ZeroTable& table,
                              std::size_t pairs, double tol) {
    params.validate();
    if (!(x >= 1.0)) throw std::invalid_argument("explicit_c: x must be >= 1");
    ExplicitEvaluation ev;
    ev.x = x;
    ev.leading_term = 0.0;
    ev.constant_term = -2.0 * static_cast<double>(sigma_int(1, params));
    ev.zero_sum = zero_sum_c(x, params, table, pairs);
    ev.trivial_series = trivial_series_c(x, params, tol);
    ev.formula_total = ev.leading_term + ev.constant_term + ev.zero_sum + ev.trivial_series;
    ev.actual_sharp = summatory_c(x, params).sharp;
    ev.residual = ev.actual_sharp - ev.formula_total;
    return ev;
}

std::vector<cplx> zero_sum_weights_psi(long long m, int beta, const ZeroTable& table,
                                       std::size_t pairs) {
    const SumParams params{m, beta};
    params.validate();
    check_pairs(table, pairs);
    std::vector<cplx> w;
    w.reserve(pairs);
    for (std::size_t k = 0; k < pairs; ++k) {
        const cplx rho{0.5, table.ordinate(k)};
        const cplx sig = sigma(1.0 - rho / static_cast<double>(beta), params);
        w.push_back(-sig / rho); // leading minus of the psi formula
    }
    return w;
}

double zero_sum_psi(double x, long long m, int beta, const ZeroTable& table,
                    std::size_t pairs) {
    if (!(x > static_cast<double>(m)))
        throw std::invalid_argument("zero_sum_psi: requires x > m");
    return zero_sum_from_weights(zero_sum_weights_psi(m, beta, table, pairs), table, x);
}

double trivial_series_psi(double x, long long m, int beta, double tol) {
    const SumParams params{m, beta};
    params.validate();
    if (!(x > static_cast<double>(m)))
        throw std::invalid_argument("trivial_series_psi: requires x > m");
    // -sum_k sigma_{1+2k/b}(m) x^{-2k} / (2k); per-divisor running ratios
    // (d/x)^{2k} decay geometrically since every d <= m^{1/b} < x.
    std::vector<double> ratio2, run, dpow;
    for (long long d : power_divisors(m, beta)) {
        const double r = static_cast<double>(d) / x;
        ratio2.push_back(r * r);
        run.push_back(1.0);
        dpow.push_back(std::pow(static_cast<double>(d), static_cast<double>(beta)));
    }
    auto term = [&, ratio2, run, dpow](int k) mutable {
        double sig_weighted = 0.0; // sigma_{1+2k/b}(m) x^{-2k}
        for (std::size_t i = 0; i < run.size(); ++i) {
            run[i] *= ratio2[i];
            sig_weighted += dpow[i] * run[i];
        }
        return -sig_weighted / (2.0 * k);
    };
    return unimodal_series(term, tol, 0, 4000);
}

ExplicitEvaluation explicit_psi(double x, long long m, int beta, const ZeroTable& table,
                                std::size_t pairs, double tol) {
    const SumParams params{m, beta};
    params.validate();
    if (!(x > static_cast<double>(m)))
        throw std::invalid_argument("explicit_psi: requires x > m");
    ExplicitEvaluation ev;
    ev.x = x;
    ev.leading_term =
        sigma(cplx{1.0 - 1.0 / static_cast<double>(beta), 0.0}, params).real() * x;
    ev.constant_term = -static_cast<double>(sigma_int(1, params)) * std::log(kTwoPi);
    ev.zero_sum = zero_sum_psi(x, m, beta, table, pairs);
    ev.trivial_series = trivial_series_psi(x, m, beta, tol);
    ev.formula_total = ev.leading_term + ev.constant_term + ev.zero_sum + ev.trivial_series;
    ev.actual_sharp = summatory_psi(x, m, beta).sharp;
    ev.residual = ev.actual_sharp - ev.formula_total;
    return ev;
}

} // namespace ramsum

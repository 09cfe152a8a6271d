#include "ramsum/bartz.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramsum/gamma.hpp"

namespace ramsum {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr cplx kI{0.0, 1.0};
constexpr cplx kTwoPiI{0.0, 2.0 * std::numbers::pi};
constexpr double kLog2Pi = 1.8378770664093454836;

void require_upper(cplx z, const char* who) {
    if (!(z.imag() > 0.0))
        throw std::invalid_argument(std::string(who) + ": requires Im z > 0");
}

// sigma_{1-s/b}^(b)(n) = sum over the divisor roots d (d^b | n) of d^{b-s}.
cplx sigma_contour(cplx s, int beta, const std::vector<long long>& roots) {
    cplx total{0.0, 0.0};
    for (long long d : roots)
        total += std::exp((static_cast<double>(beta) - s) * std::log(static_cast<double>(d)));
    return total;
}

// sum over the roots of d^{b + 1/2}, bounding |sigma_{1-s/b}| on Re s = -1/2.
double sigma_contour_bound(int beta, const std::vector<long long>& roots) {
    double total = 0.0;
    for (long long d : roots)
        total += std::pow(static_cast<double>(d), static_cast<double>(beta) + 0.5);
    return total;
}

// Integrand sigma_{1-s/b}(n) e^{sz} / zeta(s) shared by varpi1/varpi2.
cplx contour_integrand(cplx s, cplx z, int beta, const std::vector<long long>& roots) {
    return sigma_contour(s, beta, roots) * std::exp(s * z) * inv_zeta(s);
}

// Fixed-height contour integral of sigma/zeta e^{sz} along Re s = -1/2,
// with no tail admission check. As a function of z this truncation is
// entire, which is all the residue probe needs; varpi1 proper wraps it
// with the tail bound.
cplx varpi1_truncated(cplx z, int beta, const std::vector<long long>& roots, double t_cut,
                      double step, double abs_tol) {
    auto g = [&](double t) { return contour_integrand(cplx{-0.5, t}, z, beta, roots); };
    return -kI * integrate_simpson(g, 0.0, t_cut, abs_tol, step);
}

// Complex series with unimodal term magnitudes (may hump before decaying).
template <typename F>
cplx unimodal_series_c(F next_term, double tol, int k_peak, int k_cap, const char* who) {
    KahanSumC acc;
    double prev_mag = 0.0;
    int growth_streak = 0;
    for (int k = 1; k <= k_cap; ++k) {
        const cplx term = next_term(k);
        const double mag = std::abs(term);
        if (!std::isfinite(mag) || mag > 1e290)
            throw numeric_error(std::string(who) + ": terms overflow double range");
        acc.add(term);
        if (k > k_peak) {
            if (mag < tol) return acc.value();
            if (mag > prev_mag) {
                if (++growth_streak >= 3)
                    throw numeric_error(std::string(who) + ": divergence guard tripped");
            } else {
                growth_streak = 0;
            }
        }
        prev_mag = mag;
    }
    throw numeric_error(std::string(who) + ": no convergence within term cap");
}

// Shared body of the two companion-series forms. `index_doubled` selects
// sigma_{1+2k/b} (running base (2 pi d e^{-z})^2) against sigma_{1+k/b}
// (running base (2 pi e^{-z})^2 d); `lead` is the -2 / +2 front factor.
cplx companion_series(cplx z, const SumParams& params, int kmax, double tol,
                      bool index_doubled, double lead) {
    params.validate();
    const auto roots = power_divisors(params.n, params.beta);
    const cplx base = kTwoPi * std::exp(-z);
    std::vector<cplx> ratio, run;
    std::vector<double> dpow;
    double peak_scale = 0.0;
    for (long long d : roots) {
        const double dd = static_cast<double>(d);
        const cplx r = index_doubled ? base * base * (dd * dd) : base * base * dd;
        ratio.push_back(r);
        run.push_back(cplx{1.0, 0.0});
        dpow.push_back(std::pow(dd, static_cast<double>(params.beta)));
        peak_scale = std::max(peak_scale, std::sqrt(std::abs(r)));
    }
    const int k_peak = static_cast<int>(std::ceil(0.5 * peak_scale)) + 1;
    auto term = [&, ratio, run, dpow](int k) mutable {
        const double f = 1.0 / ((2.0 * k - 1.0) * (2.0 * k));
        cplx weighted{0.0, 0.0};
        for (std::size_t i = 0; i < run.size(); ++i) {
            run[i] *= ratio[i] * f;
            weighted += dpow[i] * run[i];
        }
        const double sign = (k % 2 == 0) ? 1.0 : -1.0; // (-1)^k
        return lead * sign * weighted / zeta_odd(k);
    };
    return unimodal_series_c(term, tol, k_peak, kmax, "a_series");
}

} // namespace

void TruncationConfig::validate() const {
    if (zero_pairs == 0) throw std::invalid_argument("TruncationConfig: zero_pairs == 0");
    if (!(series_tol > 0.0)) throw std::invalid_argument("TruncationConfig: series_tol <= 0");
    if (q_cutoff < 1) throw std::invalid_argument("TruncationConfig: q_cutoff < 1");
    if (!(quad_step > 0.0)) throw std::invalid_argument("TruncationConfig: quad_step <= 0");
    if (!(t_cut > 0.0)) throw std::invalid_argument("TruncationConfig: t_cut <= 0");
}

cplx varpi_zero_sum(cplx z, const SumParams& params, const ZeroTable& table,
                    std::size_t count) {
    params.validate();
    require_upper(z, "varpi_zero_sum");
    if (count > table.size())
        throw std::out_of_range("varpi_zero_sum: count exceeds table size");
    KahanSumC acc;
    for (std::size_t k = 0; k < count; ++k) {
        const cplx rho{0.5, table.ordinate(k)};
        const cplx sig = sigma(1.0 - rho / static_cast<double>(params.beta), params);
        acc.add(sig / table.zeta_prime_at(k) * std::exp(rho * z));
    }
    return acc.value();
}

double varpi1_tail_height(cplx z, const SumParams& params, double tol) {
    params.validate();
    require_upper(z, "varpi1_tail_height");
    const auto roots = power_divisors(params.n, params.beta);
    const double bound = sigma_contour_bound(params.beta, roots) * std::exp(-0.5 * z.real());
    const double y = z.imag();
    // tail(T) <= bound e^{-T y} / (0.05 (1+T) y), using |zeta(-1/2+it)| >=
    // 0.05 (1+t) for t >= 30
    double t_cut = 30.0;
    while (t_cut < 195.0) {
        const double tail = bound * std::exp(-t_cut * y) / (0.05 * (1.0 + t_cut) * y);
        if (tail < tol) return t_cut;
        t_cut += 5.0;
    }
    throw numeric_error("varpi1: tail bound not reachable below t = 195 (Im z too small)");
}

cplx varpi1(cplx z, const SumParams& params, double t_cut, double step, double abs_tol) {
    params.validate();
    require_upper(z, "varpi1");
    if (!(t_cut > 0.0)) throw std::invalid_argument("varpi1: t_cut must be positive");
    const auto roots = power_divisors(params.n, params.beta);
    const double bound = sigma_contour_bound(params.beta, roots) * std::exp(-0.5 * z.real());
    const double y = z.imag();
    const double tail = t_cut >= 30.0
                            ? bound * std::exp(-t_cut * y) / (0.05 * (1.0 + t_cut) * y)
                            : bound / y;
    if (tail > abs_tol)
        throw numeric_error("varpi1: tail estimate " + std::to_string(tail) +
                            " above tolerance at t_cut");
    // path from -1/2 + i t_cut down to -1/2: ds = i dt with t falling
    return varpi1_truncated(z, params.beta, roots, t_cut, step, abs_tol);
}

cplx varpi2(cplx z, const SumParams& params, double step, double abs_tol) {
    params.validate();
    const auto roots = power_divisors(params.n, params.beta);
    auto g = [&](double u) { return contour_integrand(cplx{u, 0.0}, z, params.beta, roots); };
    return integrate_simpson(g, -0.5, 1.5, abs_tol, step);
}

TruncatedSum varpi3(cplx z, const SumParams& params, long long Q) {
    params.validate();
    if (Q < 1) throw std::invalid_argument("varpi3: Q must be >= 1");
    const auto c = cohen_sum_range(Q, params);
    KahanSumC acc;
    for (long long q = 1; q <= Q; ++q) {
        const long long cq = c[static_cast<std::size_t>(q - 1)];
        if (cq == 0) continue;
        const double lq = std::log(static_cast<double>(q));
        const cplx denom = z - lq;
        if (std::abs(denom) < 1e-9)
            throw numeric_error("varpi3: z within 1e-9 of the pole at log " +
                                std::to_string(q));
        acc.add(static_cast<double>(cq) /
                (std::pow(static_cast<double>(q), 1.5) * denom));
    }
    TruncatedSum out;
    const cplx front = -std::exp(1.5 * z);
    out.value = front * acc.value();
    // |sum_{q>Q}| <= sigma_1(n) * max 1/|z - log q| * sum q^{-3/2}
    const double dist =
        std::abs(z.imag()) > 0.0
            ? std::abs(z.imag())
            : std::max(1e-9, std::abs(std::log(static_cast<double>(Q + 1)) - z.real()));
    out.tail_bound = std::abs(front) * static_cast<double>(sigma_int(1, params)) * 2.0 /
                     (std::sqrt(static_cast<double>(Q)) * dist);
    return out;
}

BartzEvaluation decompose(cplx z, const SumParams& params, const ZeroTable& table,
                          const TruncationConfig& cfg) {
    cfg.validate();
    require_upper(z, "decompose");
    BartzEvaluation ev;
    ev.z = z;
    ev.varpi_zero_sum = varpi_zero_sum(z, params, table, cfg.zero_pairs);
    const double t_cut = std::max(cfg.t_cut, varpi1_tail_height(z, params, cfg.series_tol));
    ev.varpi1 = varpi1(z, params, t_cut, cfg.quad_step, cfg.series_tol);
    ev.varpi2 = varpi2(z, params, cfg.quad_step, cfg.series_tol);
    ev.varpi3 = varpi3(z, params, cfg.q_cutoff).value;
    ev.decomposition_residual =
        kTwoPiI * ev.varpi_zero_sum - (ev.varpi1 + ev.varpi2 + ev.varpi3);
    return ev;
}

cplx a_series(cplx z, const SumParams& params, int kmax, double tol) {
    return companion_series(z, params, kmax, tol, /*index_doubled=*/true, -2.0);
}

cplx a_series_variant(cplx z, const SumParams& params, int kmax, double tol) {
    return companion_series(z, params, kmax, tol, /*index_doubled=*/false, 2.0);
}

cplx varpi1_continuation_series(cplx z, const SumParams& params, long long Q) {
    params.validate();
    if (Q < 16) throw std::invalid_argument("varpi1_continuation_series: Q too small");
    const auto roots = power_divisors(params.n, params.beta);
    const cplx w = kTwoPiI * std::exp(-z);
    // the per-k corrections below hump like (|w| dmax / Q)^k / k!; keep the
    // cutoff comfortably past |w| dmax so they decay from the start
    const double w_scale = std::abs(w) * static_cast<double>(roots.back());
    if (20.0 * w_scale > 5e6)
        throw numeric_error("varpi1_continuation_series: n e^{-Re z} too large");
    Q = std::max(Q, static_cast<long long>(20.0 * w_scale));

    // sum_{q<=Q} mu(q)/q sum_d d^b expm1(-w d / q); exp is stable here
    // since Re(w d) > 0 for 0 < Im z < pi.
    std::vector<double> dpow;
    for (long long d : roots)
        dpow.push_back(std::pow(static_cast<double>(d), static_cast<double>(params.beta)));
    KahanSumC acc;
    for (long long q = 1; q <= Q; ++q) {
        const int mu = mobius(q);
        if (mu == 0) continue;
        cplx inner{0.0, 0.0};
        for (std::size_t i = 0; i < roots.size(); ++i) {
            const cplx e = std::exp(-w * static_cast<double>(roots[i]) / static_cast<double>(q));
            inner += dpow[i] * (e - 1.0);
        }
        acc.add(static_cast<double>(mu) / static_cast<double>(q) * inner);
    }

    // exact q > Q corrections per power k:
    //   sum_k ((-w)^k / k!) sigma_{1+k/b}(n) [1/zeta(k+1) - sum_{q<=Q} mu(q) q^{-k-1}]
    // The bracket is O(Q^{-k}), so a handful of k suffice.
    for (int k = 1; k <= 60; ++k) {
        KahanSum partial;
        for (long long q = 1; q <= Q; ++q) {
            const int mu = mobius(q);
            if (mu == 0) continue;
            partial.add(static_cast<double>(mu) *
                        std::pow(static_cast<double>(q), -(1.0 + k)));
        }
        const double bracket = 1.0 / zeta_int(k + 1) - partial.value();
        cplx wk{1.0, 0.0};
        double kfact = 1.0;
        for (int i = 1; i <= k; ++i) {
            wk *= -w;
            kfact *= static_cast<double>(i);
        }
        cplx sig{0.0, 0.0};
        for (std::size_t i = 0; i < roots.size(); ++i)
            sig += dpow[i] * std::pow(static_cast<double>(roots[i]), static_cast<double>(k));
        const cplx corr = wk / kfact * sig * bracket;
        acc.add(corr);
        if (std::abs(corr) < 1e-16 && k > 3) break;
    }
    return acc.value();
}

namespace {

// J1 and J2: the Gamma/zeta vertical integrals of the varpi1 continuation.
cplx j_integral(cplx z, const SumParams& params, double pi_shift_sign, double t_sign,
                double step, double abs_tol) {
    const auto roots = power_divisors(params.n, params.beta);
    const cplx shift = z - kLog2Pi + pi_shift_sign * kI * (0.5 * kPi);
    auto g = [&](double t) {
        const cplx s{-0.5, t_sign * t};
        return std::exp(s * shift) * sigma_contour(s, params.beta, roots) * gamma_fn(s) /
               zeta_em(1.0 - s);
    };
    // decay e^{-t (pi -+ y)}: pick the height from the slower rate
    const double rate = kPi - std::abs(z.imag());
    if (!(rate > 0.2))
        throw numeric_error("j_integral: requires Im z below pi - 0.2 for the tail");
    const double height = std::min(185.0, 30.0 + 40.0 / rate);
    return kI * integrate_simpson(g, 0.0, height, abs_tol, step);
}

} // namespace

cplx functional_equation_residual(cplx z, const SumParams& params, const ZeroTable& table,
                                  const TruncationConfig& cfg) {
    cfg.validate();
    params.validate();
    if (!(z.imag() > 0.0 && z.imag() < kPi - 0.2))
        throw std::invalid_argument(
            "functional_equation_residual: requires 0 < Im z < pi - 0.2");
    const cplx vz = varpi_zero_sum(z, params, table, cfg.zero_pairs);
    const cplx dminus = varpi1_continuation_series(z, params, cfg.q_cutoff);
    const cplx j1 = j_integral(z, params, -1.0, -1.0, cfg.quad_step, cfg.series_tol);
    const cplx j2 = j_integral(z, params, +1.0, +1.0, cfg.quad_step, cfg.series_tol);
    const cplx v2 = varpi2(z, params, cfg.quad_step, cfg.series_tol);
    const cplx v3 = varpi3(z, params, cfg.q_cutoff).value;
    return vz + dminus + (j2 - j1 - v2 - v3) / kTwoPiI;
}

cplx functional_equation_residual_variant(cplx z, const SumParams& params,
                                          const ZeroTable& table,
                                          const TruncationConfig& cfg) {
    const cplx base = functional_equation_residual(z, params, table, cfg);
    return base + a_series(z, params) - a_series_variant(z, params);
}

cplx residue_probe(long long q, const SumParams& params, double eps,
                   const TruncationConfig& cfg) {
    cfg.validate();
    params.validate();
    if (q < 1) throw std::invalid_argument("residue_probe: q must be >= 1");
    if (!(eps > 1e-6 && eps < 1e-2))
        throw std::invalid_argument("residue_probe: eps must lie in (1e-6, 1e-2)");
    if (cohen_sum(q, params) == 0)
        throw std::invalid_argument("residue_probe: c_q is zero, no pole at log q");
    const double z0 = std::log(static_cast<double>(q));
    // neighbouring poles must stay clear of the circle
    for (long long p = std::max<long long>(1, q / 3); p <= 3 * q + 2 && p <= cfg.q_cutoff;
         ++p) {
        if (p == q || cohen_sum(p, params) == 0) continue;
        if (std::abs(std::log(static_cast<double>(p)) - z0) <= 2.0 * eps)
            throw numeric_error("residue_probe: eps circle overlaps the pole at log " +
                                std::to_string(p));
    }
    const auto roots = power_divisors(params.n, params.beta);
    const int points = 8;
    KahanSumC acc;
    for (int j = 0; j < points; ++j) {
        const double theta = kTwoPi * static_cast<double>(j) / points;
        const cplx zj = z0 + eps * std::polar(1.0, theta);
        // the fixed-height varpi1 truncation is analytic across the circle,
        // so whatever it misses of the true varpi1 averages out below
        const cplx f = (varpi1_truncated(zj, params.beta, roots, cfg.t_cut, cfg.quad_step,
                                         cfg.series_tol) +
                        varpi2(zj, params, cfg.quad_step, cfg.series_tol) +
                        varpi3(zj, params, cfg.q_cutoff).value) /
                       kTwoPiI;
        acc.add((zj - z0) * f);
    }
    return acc.value() / static_cast<double>(points);
}

} // namespace ramsum

#include "ramsum/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ramsum {

cplx dirichlet_partial(cplx s, const SumParams& params, long long Q) {
    params.validate();
    if (Q < 1) throw std::invalid_argument("dirichlet_partial: Q must be >= 1");
    const auto c = cohen_sum_range(Q, params);
    KahanSumC acc;
    for (long long q = 1; q <= Q; ++q) {
        const long long cq = c[static_cast<std::size_t>(q - 1)];
        if (cq == 0) continue;
        acc.add(static_cast<double>(cq) *
                std::exp(-s * std::log(static_cast<double>(q))));
    }
    return acc.value();
}

cplx dirichlet_target(cplx s, const SumParams& params) {
    params.validate();
    if (std::abs(s - cplx{1.0, 0.0}) < 1e-12) return cplx{0.0, 0.0};
    const cplx z = zeta_eval(s);
    if (std::abs(z) < 1e-12)
        throw numeric_error("dirichlet_target: s is too close to a zero of zeta");
    return sigma(1.0 - s / static_cast<double>(params.beta), params) / z;
}

SeriesDiagnostic convergence_sweep(cplx s, const SumParams& params,
                                   const std::vector<long long>& cutoffs) {
    params.validate();
    if (cutoffs.empty()) throw std::invalid_argument("convergence_sweep: no cutoffs");
    if (!std::is_sorted(cutoffs.begin(), cutoffs.end()) || cutoffs.front() < 1)
        throw std::invalid_argument("convergence_sweep: cutoffs must ascend from >= 1");

    SeriesDiagnostic diag;
    diag.s = s;
    diag.cutoffs = cutoffs;
    diag.target = dirichlet_target(s, params);

    const long long qmax = cutoffs.back();
    const auto c = cohen_sum_range(qmax, params);
    KahanSumC acc;
    std::size_t next = 0;
    for (long long q = 1; q <= qmax; ++q) {
        const long long cq = c[static_cast<std::size_t>(q - 1)];
        if (cq != 0)
            acc.add(static_cast<double>(cq) *
                    std::exp(-s * std::log(static_cast<double>(q))));
        while (next < cutoffs.size() && cutoffs[next] == q) {
            diag.partials.push_back(acc.value());
            diag.residuals.push_back(std::abs(acc.value() - diag.target));
            ++next;
        }
    }
    return diag;
}

MangoldtSeriesCheck mangoldt_series_check(cplx s, long long m, int beta, long long Q) {
    const SumParams params{m, beta};
    params.validate();
    if (!(s.real() > 1.0))
        throw std::invalid_argument("mangoldt_series_check: requires Re s > 1");
    if (Q < 1) throw std::invalid_argument("mangoldt_series_check: Q must be >= 1");
    KahanSumC acc;
    for (long long j = 2; j <= Q; ++j) {
        const double lam = von_mangoldt(j, m, beta);
        if (lam != 0.0)
            acc.add(lam * std::exp(-s * std::log(static_cast<double>(j))));
    }
    MangoldtSeriesCheck out;
    out.partial = acc.value();
    out.target = -sigma(1.0 - s / static_cast<double>(beta), params) * zeta_prime(s) /
                 zeta_eval(s);
    return out;
}

std::optional<double> fit_growth_exponent(const std::vector<long long>& summatory) {
    if (summatory.size() < 100)
        throw std::invalid_argument("fit_growth_exponent: need >= 100 points");
    // dyadic checkpoints 2, 4, ..., <= xmax; keep the upper half to damp
    // the small-x transient
    std::vector<double> log_x, log_max;
    long long running = 0;
    long long next_cp = 2;
    for (std::size_t i = 0; i < summatory.size(); ++i) {
        running = std::max(running, std::llabs(summatory[i]));
        const long long x = static_cast<long long>(i) + 1;
        if (x == next_cp) {
            log_x.push_back(std::log(static_cast<double>(x)));
            log_max.push_back(running > 0 ? std::log(static_cast<double>(running)) : -1.0);
            next_cp *= 2;
        }
    }
    const std::size_t keep = log_x.size() / 2;
    std::vector<double> xs(log_x.end() - keep, log_x.end());
    std::vector<double> ys(log_max.end() - keep, log_max.end());
    if (keep < 2) return std::nullopt;
    // degenerate when the trajectory brought no growth information
    bool any_positive = false;
    std::size_t lo = summatory.size() / 2;
    for (std::size_t i = lo; i < summatory.size(); ++i)
        if (summatory[i] != 0) any_positive = true;
    if (!any_positive) return std::nullopt;
    for (double y : ys)
        if (y < 0.0) return std::nullopt; // running max was zero at a checkpoint
    return ols_slope(xs, ys);
}

std::optional<double> growth_exponent(const SumParams& params, long long xmax) {
    params.validate();
    if (xmax < 100) throw std::invalid_argument("growth_exponent: xmax must be >= 100");
    const auto c = cohen_sum_range(xmax, params);
    std::vector<long long> summatory(c.size());
    long long acc = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        acc += c[i];
        summatory[i] = acc;
    }
    return fit_growth_exponent(summatory);
}

} // namespace ramsum

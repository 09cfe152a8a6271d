// Dirichlet-series diagnostics for the c-sums:
//
//   sum_{q>=1} c_q^(b)(n) / q^s  =  sigma_{1-s/b}^(b)(n) / zeta(s),
//
// absolutely convergent for Re s > 1, conditionally down to Re s = 1
// (value 0 at s = 1, where 1/zeta vanishes against the pole). Partial
// sums are tracked against the closed form, the k = 1 von Mangoldt
// Dirichlet series is checked against -sigma_{1-s/b}(m) zeta'(s)/zeta(s),
// and a least-squares growth exponent of the summatory c-function probes
// the x^{1/2+eps} regime.

#pragma once

#include <optional>
#include <vector>

#include "ramsum/arith.hpp"
#include "ramsum/zeta.hpp"

namespace ramsum {

// Partial-sum trajectory of a Dirichlet series against its target.
struct SeriesDiagnostic {
    cplx s;
    std::vector<long long> cutoffs; // ascending Q values
    std::vector<cplx> partials;     // partial sum at each cutoff
    cplx target;                    // closed-form value
    std::vector<double> residuals;  // |partial - target| per cutoff
};

// sum_{q <= Q} c_q^(b)(n) q^{-s}, compensated, ascending q.
cplx dirichlet_partial(cplx s, const SumParams& params, long long Q);

// sigma_{1-s/b}^(b)(n) / zeta(s); 0 at s = 1 by the pole of zeta. Throws
// numeric_error within 1e-12 of a zeta zero.
cplx dirichlet_target(cplx s, const SumParams& params);

// One pass to max(cutoffs), recording the partial sum at each cutoff.
SeriesDiagnostic convergence_sweep(cplx s, const SumParams& params,
                                   const std::vector<long long>& cutoffs);

// Partial sum_{j <= Q} Lambda_{1,m}^(b)(j) j^{-s} and its target
// -sigma_{1-s/b}^(b)(m) zeta'(s)/zeta(s); requires Re s > 1.
struct MangoldtSeriesCheck {
    cplx partial;
    cplx target;
};
MangoldtSeriesCheck mangoldt_series_check(cplx s, long long m, int beta, long long Q);

// Least-squares slope of log(running max |C(n,x)|) against log x over the
// dyadic checkpoints in the upper half of [1, xmax]; empty when the
// summatory trajectory is degenerate (identically zero over the window).
std::optional<double> fit_growth_exponent(const std::vector<long long>& summatory);

// Growth-exponent probe of the summatory c-function up to xmax (>= 100).
std::optional<double> growth_exponent(const SumParams& params, long long xmax);

} // namespace ramsum

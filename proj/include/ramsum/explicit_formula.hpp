// Truncated explicit formulas over nontrivial zeta zeros.
//
// For the summatory c-function (half-jump adjusted at integers):
//
//   Csharp(n, x) = -2 sigma_1^(b)(n)
//                + sum over zeros rho = 1/2 + i gamma, |gamma| < T of
//                      sigma_{1-rho/b}^(b)(n) / zeta'(rho) * x^rho / rho
//                + sum_{k>=1} (-1)^{k-1} (2 pi / x)^{2k}
//                      sigma_{1+2k/b}^(b)(n) / ((2k)! k zeta(2k+1)),
//
// and for the generalized Chebyshev function:
//
//   psi_sharp(m, x) = sigma_{1-1/b}^(b)(m) x
//                   - sum over zeros of sigma_{1-rho/b}^(b)(m) x^rho / rho
//                   - sigma_1^(b)(m) log(2 pi)
//                   - sum_{k>=1} sigma_{1+2k/b}^(b)(m) x^{-2k} / (2k).
//
// Zeros are assumed simple (no multiple zero is known); the conjugate
// pair at -gamma is folded in as 2 Re[...]. Each evaluator returns a
// per-term breakdown plus the residual against the exact summatory value.

#pragma once

#include <vector>

#include "ramsum/arith.hpp"
#include "ramsum/zeta.hpp"

namespace ramsum {

// One explicit-formula evaluation, broken into the terms as summed.
// formula_total = leading_term + constant_term + zero_sum + trivial_series.
struct ExplicitEvaluation {
    double x = 0.0;
    double leading_term = 0.0; // sigma_{1-1/b}(m) x for psi, 0 for the c-sum
    double constant_term = 0.0;
    double zero_sum = 0.0;
    double trivial_series = 0.0;
    double formula_total = 0.0;
    double actual_sharp = 0.0;
    double residual = 0.0; // actual_sharp - formula_total
};

// Per-zero weights sigma_{1-rho/b}^(b)(n) / (zeta'(rho) rho) for the first
// `pairs` table zeros; reusable across an x-grid.
std::vector<cplx> zero_sum_weights_c(const SumParams& params, const ZeroTable& table,
                                     std::size_t pairs);

// sum over the first `pairs` zeros of 2 Re[w_k x^{rho_k}] given weights.
double zero_sum_from_weights(const std::vector<cplx>& weights, const ZeroTable& table,
                             double x);

// Zero-pair sum of the c-formula (ascending gamma, compensated).
double zero_sum_c(double x, const SumParams& params, const ZeroTable& table,
                  std::size_t pairs);

// Trivial-zero series of the c-formula, summed with a running-tolerance
// stop. The term magnitudes are unimodal (they may grow before the
// factorial takes over, with peak index ~ pi d_max / x), so the stop only
// engages past the peak; growth after the peak trips the divergence guard.
double trivial_series_c(double x, const SumParams& params, double tol = 1e-12);

// Full c-formula evaluation against arith::summatory_c.
ExplicitEvaluation explicit_c(double x, const SumParams& params, const ZeroTable& table,
                              std::size_t pairs, double tol = 1e-12);

// Psi-formula pieces; both carry the leading minus sign of the formula.
std::vector<cplx> zero_sum_weights_psi(long long m, int beta, const ZeroTable& table,
                                       std::size_t pairs);
double zero_sum_psi(double x, long long m, int beta, const ZeroTable& table,
                    std::size_t pairs);
double trivial_series_psi(double x, long long m, int beta, double tol = 1e-12);

// Full psi-formula evaluation against arith::summatory_psi; requires x > m.
ExplicitEvaluation explicit_psi(double x, long long m, int beta, const ZeroTable& table,
                                std::size_t pairs, double tol = 1e-12);

} // namespace ramsum

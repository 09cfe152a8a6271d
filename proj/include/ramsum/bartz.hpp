// The generalized Bartz function
//
//   varpi_n^(b)(z) = sum over zeros rho = 1/2 + i gamma, gamma > 0, of
//                    sigma_{1-rho/b}^(b)(n) / zeta'(rho) * e^{rho z},
//
// convergent for Im z > 0 (no conjugate pairing), together with its
// contour decomposition
//
//   2 pi i varpi(z) = varpi1(z) + varpi2(z) + varpi3(z),
//   varpi1 = integral from -1/2 + i inf down to -1/2 of sigma/zeta e^{sz} ds,
//   varpi2 = integral over [-1/2, 3/2] of the same integrand,
//   varpi3 = -e^{3z/2} sum_q c_q^(b)(n) / (q^{3/2} (z - log q)),
//
// the entire companion A_n^(b)(z) with
//
//   varpi(z) + conj(varpi(conj z)) = A(z)
//           = -2 sum_{k>=1} (-1)^k (2 pi)^{2k} e^{-2kz}
//                  sigma_{1+2k/b}^(b)(n) / ((2k)! zeta(2k+1)),
//
// and the residue law: simple poles exactly at z = log q with
// c_q^(b)(n) != 0, residue -c_q^(b)(n) / (2 pi i).
//
// The functional-equation residual is evaluated through the analytic
// continuation of varpi1,
//
//   varpi1(z) = -2 pi i D-(z) + J1(z) - J2(z),
//   D-(z)     = sum_{k>=1} (-w)^k sigma_{1+k/b}^(b)(n) / (k! zeta(k+1)),
//   w         = 2 pi i e^{-z},
//   J1        = integral from -1/2 - i inf to -1/2 of
//                   e^{s(z - log 2pi - i pi/2)} sigma Gamma(s)/zeta(1-s) ds,
//   J2        = the mirrored integral up to -1/2 + i inf with +i pi/2,
//
// in the rearrangement  residual = varpi(z) + D-(z)
//                                + (J2 - J1 - varpi2 - varpi3) / (2 pi i),
// which is exactly varpi(z) + conj(varpi(conj z)) - A(z) with the A-series
// cancelled symbolically against the continuation series (the two grow
// like exp(2 pi n e^{-Re z} sin(Im z)) and would wipe out double precision
// if subtracted numerically).

#pragma once

#include "ramsum/arith.hpp"
#include "ramsum/truncation.hpp"
#include "ramsum/zeta.hpp"

namespace ramsum {

// One decomposition check at a point z.
struct BartzEvaluation {
    cplx z;
    cplx varpi_zero_sum;
    cplx varpi1;
    cplx varpi2;
    cplx varpi3;
    cplx decomposition_residual; // 2 pi i varpi_zero_sum - (varpi1+varpi2+varpi3)
};

// A truncated series value with the a-priori bound on what was dropped.
struct TruncatedSum {
    cplx value;
    double tail_bound = 0.0;
};

// Truncated zero sum over the first `count` table zeros; requires Im z > 0.
cplx varpi_zero_sum(cplx z, const SumParams& params, const ZeroTable& table,
                    std::size_t count);

// Vertical-contour integral truncated at height t_cut; throws when the
// tail bound at t_cut exceeds the tolerance. Requires Im z > 0.
cplx varpi1(cplx z, const SumParams& params, double t_cut, double step,
            double abs_tol = 1e-10);

// Truncation height at which the varpi1 tail bound drops below tol.
double varpi1_tail_height(cplx z, const SumParams& params, double tol);

// Real-segment integral over [-1/2, 3/2]; entire in z, the integrand
// vanishes at s = 1 through the pole-aware 1/zeta.
cplx varpi2(cplx z, const SumParams& params, double step, double abs_tol = 1e-10);

// Truncated pole series with its tail bound; throws within 1e-9 of a pole
// z = log q carrying c_q != 0.
TruncatedSum varpi3(cplx z, const SumParams& params, long long Q);

// Zero sum against the three decomposition pieces at z (Im z > 0).
BartzEvaluation decompose(cplx z, const SumParams& params, const ZeroTable& table,
                          const TruncationConfig& cfg);

// Entire companion series, summed per divisor root with a running-
// tolerance stop past the term-magnitude peak.
cplx a_series(cplx z, const SumParams& params, int kmax = 4000, double tol = 1e-12);

// Sign-flipped, half-index variant of the companion series (+2 and
// sigma_{1+k/b} in place of -2 and sigma_{1+2k/b}); kept for numerical
// comparison, and rejected by the functional-equation check.
cplx a_series_variant(cplx z, const SumParams& params, int kmax = 4000,
                      double tol = 1e-12);

// D-(z): the continuation series of varpi1, evaluated through the
// Moebius expansion 1/zeta(k+1) = sum_q mu(q) q^{-k-1} as
//   sum_{q<=Q} mu(q)/q sum_d d^b expm1(-w d / q)
// plus exact per-k corrections for the q > Q remainder.
cplx varpi1_continuation_series(cplx z, const SumParams& params, long long Q);

// Functional-equation residual varpi(z) + conj(varpi(conj z)) - A(z) in
// the rearranged form above. Requires 0 < Im z < pi (with enough margin
// for the J1 tail).
cplx functional_equation_residual(cplx z, const SumParams& params, const ZeroTable& table,
                                  const TruncationConfig& cfg);

// Residual against the variant companion series instead; equals
// functional_equation_residual + (a_series - a_series_variant).
cplx functional_equation_residual_variant(cplx z, const SumParams& params,
                                          const ZeroTable& table,
                                          const TruncationConfig& cfg);

// Averaged residue estimate of varpi at z = log q over an eps-circle,
// using the decomposition form (the pole sits explicitly in varpi3).
// Expected value -c_q^(b)(n) / (2 pi i). Requires c_q != 0 and
// eps in (1e-6, 1e-2), with no other pole within 2 eps.
cplx residue_probe(long long q, const SumParams& params, double eps,
                   const TruncationConfig& cfg);

} // namespace ramsum

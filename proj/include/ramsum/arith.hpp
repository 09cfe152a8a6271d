// Arithmetic functions built around Cohen's generalization of the
// Ramanujan sum:
//
//   c_q^(b)(n) = sum over 0 <= h < q^b, where h and q^b share no b-th
//                power divisor > 1, of e^{2 pi i n h / q^b}
//             = sum over d | q with d^b | n of mu(q/d) d^b.
//
// The second (Moebius) form is exact in integer arithmetic and is the
// production path; the exponential sum is kept as a brute-force oracle.
// Alongside live the generalized divisor function
// sigma_z^(b)(n) = sum over d^b | n of d^{bz}, the associated von
// Mangoldt convolution Lambda_{1,m}^(b) = c_.^(b)(m) * log, and the
// summatory functions of both with their half-jump-adjusted variants.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "ramsum/numeric.hpp"

namespace ramsum {

// The pair (n, beta) parameterizing every arithmetic function here.
struct SumParams {
    long long n = 1;
    int beta = 1;

    void validate() const; // throws std::invalid_argument unless n >= 1, beta >= 1
};

// One value of a summatory function at limit x.
//   raw   : sum over the support points <= x (exact integer for the c-sum)
//   sharp : raw minus half the boundary term when x is an integer, else raw
struct SummatoryValue {
    double x = 0.0;
    double raw = 0.0;
    double sharp = 0.0;
};

// Moebius function by factorization (sieve-backed for q <= ~10^6,
// trial division beyond).
int mobius(long long q);

// Ascending list of the d >= 1 with d^beta | n.
std::vector<long long> power_divisors(long long n, int beta);

// Brute-force oracle: the exponential sum of the definition, enumerating
// all admissible h in [0, q^beta). Throws numeric_error when q^beta
// exceeds `enumeration_bound`.
cplx cohen_sum_direct(long long q, const SumParams& params,
                      long long enumeration_bound = 20'000'000);

// Exact evaluation through the Moebius form.
long long cohen_sum(long long q, const SumParams& params);

// c_1..c_qmax as one ascending pass (shared smallest-prime-factor sieve).
std::vector<long long> cohen_sum_range(long long qmax, const SumParams& params);

// sigma_z^(beta)(n) for integer z >= 0, exact.
long long sigma_int(int z, const SumParams& params);

// sigma_z^(beta)(n) for complex z; routes through sigma_int when z is a
// nonnegative real integer.
cplx sigma(cplx z, const SumParams& params);

// Lambda_{1,m}^(beta)(j) = sum over d*delta = j of c_d^(beta)(m) log(delta).
double von_mangoldt(long long j, long long m, int beta);

// Summatory c-function: raw = sum_{q <= x} c_q^(beta)(n) (exact integer),
// sharp = raw - c_x/2 at integer x.
SummatoryValue summatory_c(double x, const SumParams& params);

// Generalized Chebyshev function: raw = sum_{j <= x} Lambda_{1,m}^(beta)(j)
// (compensated, ascending j), sharp = raw - Lambda(x)/2 at integer x.
SummatoryValue summatory_psi(double x, long long m, int beta);

} // namespace ramsum

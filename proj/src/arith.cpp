#include "ramsum/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ramsum {

namespace {

// Smallest-prime-factor sieve, built once. Inputs are desk-scale, so a
// fixed bound with a trial-division fallback keeps everything a pure
// lookup afterwards.
constexpr long long kSieveBound = 1'100'000;

const std::vector<int32_t>& spf_table() {
    static const std::vector<int32_t> table = [] {
        std::vector<int32_t> spf(kSieveBound + 1, 0);
        for (long long i = 2; i <= kSieveBound; ++i) {
            if (spf[i] == 0) {
                for (long long j = i; j <= kSieveBound; j += i)
                    if (spf[j] == 0) spf[j] = static_cast<int32_t>(i);
            }
        }
        return spf;
    }();
    return table;
}

int mobius_trial(long long q) {
    int primes = 0;
    for (long long p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            q /= p;
            if (q % p == 0) return 0;
            ++primes;
        }
    }
    if (q > 1) ++primes;
    return (primes % 2 == 0) ? 1 : -1;
}

// Integer power with overflow guard; returns -1 on overflow past `cap`.
long long ipow_capped(long long base, int exp, long long cap) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > cap / base) return -1;
        r *= base;
    }
    return r;
}

bool is_integral(double x) { return x == std::round(x); }

} // namespace

void SumParams::validate() const {
    if (n < 1) throw std::invalid_argument("SumParams: n must be >= 1");
    if (beta < 1) throw std::invalid_argument("SumParams: beta must be >= 1");
}

int mobius(long long q) {
    if (q < 1) throw std::invalid_argument("mobius: q must be >= 1");
    if (q == 1) return 1;
    if (q > kSieveBound) return mobius_trial(q);
    const auto& spf = spf_table();
    int primes = 0;
    long long m = q;
    while (m > 1) {
        const long long p = spf[m];
        m /= p;
        if (m % p == 0) return 0;
        ++primes;
    }
    return (primes % 2 == 0) ? 1 : -1;
}

std::vector<long long> power_divisors(long long n, int beta) {
    std::vector<long long> out;
    for (long long d = 1;; ++d) {
        const long long dp = ipow_capped(d, beta, n);
        if (dp < 0 || dp > n) break;
        if (n % dp == 0) out.push_back(d);
    }
    return out;
}

cplx cohen_sum_direct(long long q, const SumParams& params, long long enumeration_bound) {
    params.validate();
    if (q < 1) throw std::invalid_argument("cohen_sum_direct: q must be >= 1");
    const long long qb = ipow_capped(q, params.beta, enumeration_bound);
    if (qb < 0)
        throw numeric_error("cohen_sum_direct: q^beta exceeds the enumeration bound (q=" +
                            std::to_string(q) + ", beta=" + std::to_string(params.beta) + ")");
    if (q == 1) return cplx{1.0, 0.0}; // single admissible h = 0

    // Admissibility: no d > 1 with d^beta | h and d^beta | q^beta. Since
    // d^beta | q^beta iff d | q, the minimal obstructions are the primes
    // p | q, so h is admissible iff p^beta does not divide h for every
    // such p. h = 0 fails for any prime (p^beta | 0).
    std::vector<long long> prime_powers;
    long long m = q;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            prime_powers.push_back(ipow_capped(p, params.beta, qb));
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) prime_powers.push_back(ipow_capped(m, params.beta, qb));

    const double w = 2.0 * std::numbers::pi / static_cast<double>(qb);
    KahanSumC acc;
    for (long long h = 1; h < qb; ++h) {
        bool admissible = true;
        for (long long pp : prime_powers) {
            if (h % pp == 0) {
                admissible = false;
                break;
            }
        }
        if (!admissible) continue;
        // e^{2 pi i n h / q^beta}; reduce n h mod q^beta so the sincos
        // argument stays small.
        const long long r =
            static_cast<long long>((static_cast<__int128>(h) * params.n) % qb);
        acc.add(std::polar(1.0, w * static_cast<double>(r)));
    }
    return acc.value();
}

long long cohen_sum(long long q, const SumParams& params) {
    params.validate();
    if (q < 1) throw std::invalid_argument("cohen_sum: q must be >= 1");
    long long total = 0;
    for (long long d : power_divisors(params.n, params.beta)) {
        if (q % d != 0) continue;
        const long long dp = ipow_capped(d, params.beta, params.n);
        total += static_cast<long long>(mobius(q / d)) * dp;
    }
    return total;
}

std::vector<long long> cohen_sum_range(long long qmax, const SumParams& params) {
    params.validate();
    if (qmax < 1) throw std::invalid_argument("cohen_sum_range: qmax must be >= 1");
    std::vector<long long> c(static_cast<std::size_t>(qmax) + 1, 0);
    for (long long d : power_divisors(params.n, params.beta)) {
        const long long dp = ipow_capped(d, params.beta, params.n);
        for (long long q = d; q <= qmax; q += d)
            c[static_cast<std::size_t>(q)] += static_cast<long long>(mobius(q / d)) * dp;
    }
    c.erase(c.begin()); // index 0 unused; c[k-1] now holds c_k
    return c;
}

long long sigma_int(int z, const SumParams& params) {
    params.validate();
    if (z < 0) throw std::invalid_argument("sigma_int: z must be >= 0");
    long long total = 0;
    for (long long d : power_divisors(params.n, params.beta)) {
        long long term = 1;
        for (int i = 0; i < params.beta * z; ++i) term *= d;
        total += term;
    }
    return total;
}

cplx sigma(cplx z, const SumParams& params) {
    params.validate();
    if (z.imag() == 0.0 && is_integral(z.real()) && z.real() >= 0.0 && z.real() < 40.0) {
        // exact path; the largest base is n^{1/beta} so desk-scale inputs
        // stay well inside 64 bits for the exponents we ever use exactly
        const long long dmax = power_divisors(params.n, params.beta).back();
        const double bits = params.beta * z.real() * std::log2(static_cast<double>(dmax) + 1.0);
        if (bits < 62.0)
            return cplx{static_cast<double>(sigma_int(static_cast<int>(z.real()), params)), 0.0};
    }
    KahanSumC acc;
    for (long long d : power_divisors(params.n, params.beta)) {
        const double ld = std::log(static_cast<double>(d));
        acc.add(std::exp(z * (static_cast<double>(params.beta) * ld)));
    }
    return acc.value();
}

double von_mangoldt(long long j, long long m, int beta) {
    if (j < 1) throw std::invalid_argument("von_mangoldt: j must be >= 1");
    if (j == 1) return 0.0;
    const SumParams params{m, beta};
    params.validate();
    // ascending divisors of j
    std::vector<long long> divs;
    for (long long d = 1; d * d <= j; ++d) {
        if (j % d == 0) {
            divs.push_back(d);
            if (d != j / d) divs.push_back(j / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    KahanSum acc;
    for (long long d : divs) {
        const long long delta = j / d;
        if (delta == 1) continue; // log 1 = 0
        const long long cd = cohen_sum(d, params);
        if (cd != 0) acc.add(static_cast<double>(cd) * std::log(static_cast<double>(delta)));
    }
    return acc.value();
}

SummatoryValue summatory_c(double x, const SumParams& params) {
    params.validate();
    if (!(x >= 1.0)) throw std::invalid_argument("summatory_c: x must be >= 1");
    const long long qmax = static_cast<long long>(std::floor(x));
    long long raw = 0;
    for (long long q = 1; q <= qmax; ++q) raw += cohen_sum(q, params);
    SummatoryValue v;
    v.x = x;
    v.raw = static_cast<double>(raw);
    v.sharp = v.raw;
    if (is_integral(x))
        v.sharp = v.raw - 0.5 * static_cast<double>(cohen_sum(qmax, params));
    return v;
}

SummatoryValue summatory_psi(double x, long long m, int beta) {
    if (!(x >= 1.0)) throw std::invalid_argument("summatory_psi: x must be >= 1");
    const long long jmax = static_cast<long long>(std::floor(x));
    KahanSum acc;
    for (long long j = 1; j <= jmax; ++j) acc.add(von_mangoldt(j, m, beta));
    SummatoryValue v;
    v.x = x;
    v.raw = acc.value();
    v.sharp = v.raw;
    if (is_integral(x)) v.sharp = v.raw - 0.5 * von_mangoldt(jmax, m, beta);
    return v;
}

} // namespace ramsum

#include "ramsum/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <utility>

#include "ramsum/gamma.hpp"

namespace ramsum {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};

// B_{2r}/(2r)!, r = 1..30.
constexpr double kBernOverFact[30] = {
    0.083333333333333333333,   -0.0013888888888888888889, 0.000033068783068783068783,
    -8.2671957671957671958e-7, 2.0876756987868098979e-8,  -5.2841901386874931848e-10,
    1.3382536530684678833e-11, -3.3896802963225828668e-13, 8.5860620562778445641e-15,
    -2.174868698558061873e-16, 5.5090028283602295152e-18, -1.3954464685812523341e-19,
    3.5347070396294674717e-21, -8.9535174270375468504e-23, 2.2679524523376830603e-24,
    -5.7447906688722024453e-26, 1.4551724756148649019e-27, -3.6859949406653101782e-29,
    9.336734257095044672e-31,  -2.3650224157006299346e-32, 5.9906717624821343047e-34,
    -1.5174548844682902617e-35, 3.8437581254541882322e-37, -9.7363530726466910353e-39,
    2.4662470442006809571e-40, -6.2470767418207436931e-42, 1.5824030244644914298e-43,
    -4.0082736859489359685e-45, 1.0153075855569556312e-46, -2.5718041582418717499e-48,
};

// Stieltjes constants for the Laurent expansion of zeta at s = 1.
constexpr double kStieltjes0 = 0.57721566490153286061;
constexpr double kStieltjes1 = -0.072815845483676724861;
constexpr double kStieltjes2 = -0.0096903631928723184845;

int direct_terms(cplx s, const EvalAccuracy& acc) {
    const double t = std::abs(s.imag());
    return std::max({acc.em_terms, 10, static_cast<int>(std::ceil(2.0 * t))});
}

void check_pole(cplx s) {
    if (std::abs(s - cplx{1.0, 0.0}) < 1e-12)
        throw numeric_error("zeta: evaluation at the pole s = 1");
}

// log chi(s) for zeta(s) = chi(s) zeta(1-s).
cplx log_chi(cplx s) {
    return s * std::log(2.0) + (s - 1.0) * std::log(kPi) + log_sin(0.5 * kPi * s) +
           log_gamma(1.0 - s);
}

// chi'(s)/chi(s) = log(2 pi) + (pi/2) cot(pi s / 2) - digamma(1 - s).
cplx chi_log_deriv(cplx s) {
    const cplx w = 0.5 * kPi * s;
    cplx cot;
    if (w.imag() > 0.0)
        cot = kI * (std::exp(2.0 * kI * w) + 1.0) / (std::exp(2.0 * kI * w) - 1.0);
    else
        cot = kI * (1.0 + std::exp(-2.0 * kI * w)) / (1.0 - std::exp(-2.0 * kI * w));
    return std::log(2.0 * kPi) + 0.5 * kPi * cot - digamma(1.0 - s);
}

} // namespace

void EvalAccuracy::validate() const {
    if (em_terms < 10) throw std::invalid_argument("EvalAccuracy: em_terms must be >= 10");
    if (bernoulli_terms < 2 || bernoulli_terms > 30)
        throw std::invalid_argument("EvalAccuracy: bernoulli_terms must lie in [2, 30]");
    if (!(target_abs_err > 0.0))
        throw std::invalid_argument("EvalAccuracy: target_abs_err must be positive");
}

cplx zeta_em(cplx s, const EvalAccuracy& acc) {
    acc.validate();
    check_pole(s);
    const int n_terms = direct_terms(s, acc);
    const double nn = static_cast<double>(n_terms);
    const double log_n = std::log(nn);

    KahanSumC sum;
    sum.add(cplx{1.0, 0.0}); // j = 1
    for (int j = 2; j < n_terms; ++j) sum.add(std::exp(-s * std::log(static_cast<double>(j))));

    const cplx n_pow = std::exp(-s * log_n); // N^{-s}
    sum.add(nn * n_pow / (s - 1.0));         // N^{1-s}/(s-1)
    sum.add(0.5 * n_pow);

    // Bernoulli corrections: term_r = B_{2r}/(2r)! * P_r(s) * N^{-s-2r+1},
    // P_r = s (s+1) ... (s+2r-2).
    cplx rising = s;
    double n_fall = nn; // N^{1-2r} running factor, starts at N^{-1+2} = N
    const double inv_n2 = 1.0 / (nn * nn);
    for (int r = 1; r <= acc.bernoulli_terms; ++r) {
        n_fall *= inv_n2;
        sum.add(kBernOverFact[r - 1] * rising * n_pow * n_fall);
        rising *= (s + static_cast<double>(2 * r - 1)) * (s + static_cast<double>(2 * r));
    }
    return sum.value();
}

cplx zeta_em_prime(cplx s, const EvalAccuracy& acc) {
    acc.validate();
    check_pole(s);
    const int n_terms = direct_terms(s, acc);
    const double nn = static_cast<double>(n_terms);
    const double log_n = std::log(nn);

    KahanSumC sum;
    for (int j = 2; j < n_terms; ++j) {
        const double lj = std::log(static_cast<double>(j));
        sum.add(-lj * std::exp(-s * lj));
    }

    const cplx n_pow = std::exp(-s * log_n);
    const cplx inv_sm1 = 1.0 / (s - 1.0);
    sum.add(nn * n_pow * (-log_n * inv_sm1 - inv_sm1 * inv_sm1));
    sum.add(-0.5 * log_n * n_pow);

    // d/ds [P_r N^{-s-2r+1}] = (P_r' - log N P_r) N^{-s-2r+1}, with the
    // rising product P_r = s (s+1) ... (s+2r-2) and its derivative carried
    // by the product rule (no division, so integer s stays finite).
    cplx rising = s;
    cplx rising_d{1.0, 0.0};
    double n_fall = nn;
    const double inv_n2 = 1.0 / (nn * nn);
    for (int r = 1; r <= acc.bernoulli_terms; ++r) {
        n_fall *= inv_n2;
        sum.add(kBernOverFact[r - 1] * (rising_d - log_n * rising) * n_pow * n_fall);
        const cplx f1 = s + static_cast<double>(2 * r - 1);
        const cplx f2 = s + static_cast<double>(2 * r);
        rising_d = rising_d * f1 * f2 + rising * (f1 + f2);
        rising *= f1 * f2;
    }
    return sum.value();
}

cplx zeta_reflected(cplx s, const EvalAccuracy& acc) {
    check_pole(s);
    return std::exp(log_chi(s)) * zeta_em(1.0 - s, acc);
}

cplx zeta_eval(cplx s, const EvalAccuracy& acc) {
    check_pole(s);
    if (s.real() >= -0.5) return zeta_em(s, acc);
    return zeta_reflected(s, acc);
}

cplx zeta_prime(cplx s, const EvalAccuracy& acc) {
    check_pole(s);
    if (s.real() >= -0.5) return zeta_em_prime(s, acc);
    // zeta' = chi' zeta(1-s) - chi zeta'(1-s)
    const cplx chi = std::exp(log_chi(s));
    return chi * (chi_log_deriv(s) * zeta_em(1.0 - s, acc) - zeta_em_prime(1.0 - s, acc));
}

cplx inv_zeta(cplx s, const EvalAccuracy& acc) {
    const cplx w = s - 1.0;
    const double aw = std::abs(w);
    if (aw < 0.01) {
        // 1/zeta = w - g0 w^2 + (g0^2+g1) w^3 - (g0^3 + 2 g0 g1 + g2/2) w^4 + O(w^5)
        const double c2 = -kStieltjes0;
        const double c3 = kStieltjes0 * kStieltjes0 + kStieltjes1;
        const double c4 = -(kStieltjes0 * kStieltjes0 * kStieltjes0 +
                            2.0 * kStieltjes0 * kStieltjes1 + 0.5 * kStieltjes2);
        return w * (1.0 + w * (c2 + w * (c3 + w * c4)));
    }
    const cplx z = zeta_eval(s, acc);
    if (std::abs(z) < 1e-12)
        throw numeric_error("inv_zeta: evaluation too close to a zero of zeta");
    return 1.0 / z;
}

namespace {

double zeta_odd_direct(int k) {
    const double s = static_cast<double>(2 * k + 1);
    const long long cutoff = 10000;
    KahanSum sum;
    sum.add(1.0);
    for (long long j = 2; j < cutoff; ++j) {
        const double term = std::pow(static_cast<double>(j), -s);
        if (term < 1e-18) break;
        sum.add(term);
    }
    // integral tail plus midpoint half-term: error ~ s/12 * J^{-s-1}
    const double jj = static_cast<double>(cutoff);
    sum.add(std::pow(jj, 1.0 - s) / (s - 1.0));
    sum.add(0.5 * std::pow(jj, -s));
    return sum.value();
}

} // namespace

double zeta_odd(int k) {
    if (k < 1) throw std::invalid_argument("zeta_odd: k must be >= 1");
    constexpr int kCached = 64; // the explicit-formula series hit small k repeatedly
    static const std::vector<double> cache = [] {
        std::vector<double> v(kCached);
        for (int i = 0; i < kCached; ++i) v[static_cast<std::size_t>(i)] = zeta_odd_direct(i + 1);
        return v;
    }();
    if (k <= kCached) return cache[static_cast<std::size_t>(k - 1)];
    return zeta_odd_direct(k);
}

double zeta_int(int m) {
    if (m < 2) throw std::invalid_argument("zeta_int: m must be >= 2");
    if (m % 2 == 1) return zeta_odd((m - 1) / 2);
    return zeta_em(cplx{static_cast<double>(m), 0.0}).real();
}

double rs_theta(double t) {
    return std::imag(log_gamma(cplx{0.25, 0.5 * t})) - 0.5 * t * std::log(kPi);
}

double hardy_z(double t, const EvalAccuracy& acc) {
    return std::real(std::exp(kI * rs_theta(t)) * zeta_eval(cplx{0.5, t}, acc));
}

double refine_zero(double gamma0, const EvalAccuracy& acc, double tol, int max_iter) {
    double t = gamma0;
    for (int iter = 0; iter < max_iter; ++iter) {
        const cplx z = zeta_eval(cplx{0.5, t}, acc);
        if (std::abs(z) < tol) return t;
        const cplx zp = zeta_prime(cplx{0.5, t}, acc);
        if (std::abs(zp) == 0.0) throw numeric_error("refine_zero: vanishing derivative");
        const double step = std::real(z / (kI * zp)); // d/dt zeta(1/2+it) = i zeta'
        if (!std::isfinite(step) || std::abs(step) > 1.0)
            throw numeric_error("refine_zero: diverging Newton step near t = " +
                                std::to_string(gamma0));
        t -= step;
        if (t <= 0.0) throw numeric_error("refine_zero: iterate left the half-line");
    }
    throw numeric_error("refine_zero: no convergence from seed " + std::to_string(gamma0));
}

// ---------------------------------------------------------------------------
// Zero table
// ---------------------------------------------------------------------------

table_error::table_error(const std::string& msg, long line)
    : std::runtime_error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
      line_number(line) {}

ZeroTable::ZeroTable(std::vector<double> ordinates, std::vector<cplx> zeta_prime_at,
                     std::string source)
    : ordinates_(std::move(ordinates)), zeta_prime_(std::move(zeta_prime_at)),
      source_(std::move(source)) {
    if (ordinates_.empty()) throw table_error("zero table: empty");
    if (ordinates_.size() != zeta_prime_.size())
        throw table_error("zero table: misaligned zeta' column");
    for (std::size_t k = 0; k < ordinates_.size(); ++k) {
        if (!(ordinates_[k] > 0.0)) throw table_error("zero table: nonpositive ordinate");
        if (k > 0 && !(ordinates_[k] > ordinates_[k - 1]))
            throw table_error("zero table: ordinates not strictly ascending");
        if (std::abs(zeta_prime_[k]) == 0.0)
            throw table_error("zero table: vanishing zeta' (multiple zero?)");
    }
}

double ZeroTable::implied_height(std::size_t pairs) const {
    if (pairs == 0) return 0.0;
    if (pairs > size()) throw std::out_of_range("implied_height: pairs exceeds table size");
    if (pairs < size()) return 0.5 * (ordinates_[pairs - 1] + ordinates_[pairs]);
    const double mean_gap =
        size() > 1 ? (ordinates_.back() - ordinates_.front()) / static_cast<double>(size() - 1)
                   : 1.0;
    return ordinates_.back() + 0.5 * mean_gap;
}

ZeroTable make_zero_table(const std::vector<double>& seed_ordinates, std::string source,
                          const EvalAccuracy& acc, double verify_tol) {
    if (seed_ordinates.empty()) throw table_error("zero table: no ordinates provided");
    std::vector<double> refined;
    std::vector<cplx> primes;
    refined.reserve(seed_ordinates.size());
    primes.reserve(seed_ordinates.size());
    const double refine_tol = std::min(1e-10, verify_tol);
    for (std::size_t k = 0; k < seed_ordinates.size(); ++k) {
        double g;
        try {
            g = refine_zero(seed_ordinates[k], acc, refine_tol);
        } catch (const numeric_error& e) {
            throw table_error("zero table: ordinate " + std::to_string(k + 1) +
                              " failed refinement: " + e.what());
        }
        const double residual = std::abs(zeta_eval(cplx{0.5, g}, acc));
        if (!(residual < verify_tol))
            throw table_error("zero table: ordinate " + std::to_string(k + 1) +
                              " fails |zeta| < tol after refinement");
        refined.push_back(g);
        primes.push_back(zeta_prime(cplx{0.5, g}, acc));
    }
    return ZeroTable(std::move(refined), std::move(primes), std::move(source));
}

ZeroTable load_zero_table(const std::string& path, const EvalAccuracy& acc,
                          double verify_tol) {
    std::ifstream in(path);
    if (!in) throw table_error("zero table: cannot open " + path);
    std::vector<double> seeds;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        const auto last = line.find_last_not_of(" \t\r");
        const std::string token = line.substr(first, last - first + 1);
        std::size_t consumed = 0;
        double value = 0.0;
        try {
            value = std::stod(token, &consumed);
        } catch (const std::exception&) {
            throw table_error("zero table: unparsable ordinate '" + token + "'", line_no);
        }
        if (consumed != token.size())
            throw table_error("zero table: trailing characters after ordinate", line_no);
        if (!seeds.empty() && !(value > seeds.back()))
            throw table_error("zero table: ordinates must be strictly ascending", line_no);
        seeds.push_back(value);
    }
    if (seeds.empty()) throw table_error("zero table: no ordinates in " + path);
    return make_zero_table(seeds, path, acc, verify_tol);
}

void dump_zero_table(const ZeroTable& table, std::ostream& out) {
    char buf[40];
    for (std::size_t k = 0; k < table.size(); ++k) {
        std::snprintf(buf, sizeof(buf), "%.17g", table.ordinate(k));
        out << buf << '\n';
    }
}

const ZeroTable& bundled_zero_table() {
    static const ZeroTable table = make_zero_table(bundled_zero_seeds(), "bundled");
    return table;
}

} // namespace ramsum

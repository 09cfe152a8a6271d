// Complex Riemann-zeta engine.
//
// zeta(s) and zeta'(s) come from Euler-Maclaurin summation
//
//   zeta(s) = sum_{j<N} j^{-s} + N^{1-s}/(s-1) + N^{-s}/2
//           + sum_{r=1}^{M} B_{2r}/(2r)! (s)(s+1)...(s+2r-2) N^{-s-2r+1},
//
// with N scaled to |Im s| and the functional equation
// zeta(s) = chi(s) zeta(1-s) used left of Re s = -1/2. On top of the
// evaluator sit zeta(2k+1) by direct Dirichlet series with an integral
// tail correction, a pole-aware 1/zeta, Newton refinement of zero
// ordinates, and the zero-table plumbing (load, verify, dump) feeding
// the explicit-formula and Bartz modules.

#pragma once

#include <complex>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramsum/numeric.hpp"

namespace ramsum {

// Euler-Maclaurin effort knobs. The evaluator uses
// N = max(em_terms, ceil(2 |Im s|)) direct terms and bernoulli_terms
// correction terms; defaults hold target_abs_err over
// -2 <= Re s <= 4, |Im s| <= 240.
struct EvalAccuracy {
    int em_terms = 20;
    int bernoulli_terms = 12;
    double target_abs_err = 1e-12;

    void validate() const; // em_terms >= 10, bernoulli_terms in [2, 30]
};

// zeta(s); throws numeric_error at the pole (|s-1| < 1e-12).
cplx zeta_eval(cplx s, const EvalAccuracy& acc = {});

// zeta'(s), term-wise differentiated Euler-Maclaurin (chi'/chi left of
// the reflection line).
cplx zeta_prime(cplx s, const EvalAccuracy& acc = {});

// Direct Euler-Maclaurin path without reflection (exposed so the
// reflection-consistency property can compare both routes).
cplx zeta_em(cplx s, const EvalAccuracy& acc = {});
cplx zeta_em_prime(cplx s, const EvalAccuracy& acc = {});

// chi(s) zeta(1-s) with chi(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1-s).
cplx zeta_reflected(cplx s, const EvalAccuracy& acc = {});

// 1/zeta(s) with the Laurent expansion taking over near s = 1, where
// zeta's pole makes the reciprocal vanish.
cplx inv_zeta(cplx s, const EvalAccuracy& acc = {});

// zeta(2k+1), k >= 1: direct Dirichlet series plus integral tail
// correction, absolute error <= 1e-12.
double zeta_odd(int k);

// zeta(m) for integer m >= 2 (even through Euler-Maclaurin, odd through
// zeta_odd).
double zeta_int(int m);

// Riemann-Siegel theta and the rotated-real Hardy Z(t); Z changes sign
// across each simple zero on the critical line.
double rs_theta(double t);
double hardy_z(double t, const EvalAccuracy& acc = {});

// Newton refinement of a zero ordinate from a seed within ~0.05 of the
// truth; iterates t -> t - Re[zeta/( i zeta')] until |zeta(1/2+it)| < tol.
// Throws numeric_error on non-convergence.
double refine_zero(double gamma0, const EvalAccuracy& acc = {}, double tol = 1e-10,
                   int max_iter = 30);

// Ordered table of positive zero ordinates with zeta'(1/2 + i gamma)
// precomputed for each entry.
class ZeroTable {
  public:
    ZeroTable(std::vector<double> ordinates, std::vector<cplx> zeta_prime_at,
              std::string source);

    std::size_t size() const { return ordinates_.size(); }
    double ordinate(std::size_t k) const { return ordinates_.at(k); }
    cplx zeta_prime_at(std::size_t k) const { return zeta_prime_.at(k); }
    const std::vector<double>& ordinates() const { return ordinates_; }
    const std::string& source() const { return source_; }

    // Truncation height implied by keeping `pairs` zeros: the midpoint
    // between the last kept ordinate and the next one (half a mean gap
    // past the end when the whole table is kept).
    double implied_height(std::size_t pairs) const;

  private:
    std::vector<double> ordinates_;
    std::vector<cplx> zeta_prime_;
    std::string source_;
};

// Parse failure carries the 1-based line number.
struct table_error : std::runtime_error {
    explicit table_error(const std::string& msg, long line = 0);
    long line_number = 0;
};

// Load a zero table: plain text, one ordinate per line, ascending; blank
// lines and lines starting with '#' ignored. Every ordinate is refined
// by Newton iteration and verified to |zeta(1/2 + i gamma)| < verify_tol;
// zeta' at each refined zero is computed and cached.
ZeroTable load_zero_table(const std::string& path, const EvalAccuracy& acc = {},
                          double verify_tol = 1e-8);

// Same pipeline over in-memory seed ordinates.
ZeroTable make_zero_table(const std::vector<double>& seed_ordinates, std::string source,
                          const EvalAccuracy& acc = {}, double verify_tol = 1e-8);

// The compiled-in table of the first 100 ordinates (refined and verified
// on first use, then shared).
const ZeroTable& bundled_zero_table();

// Raw seed strings of the bundled table, in file format.
std::vector<double> bundled_zero_seeds();

// Write ordinates in the table file format with round-trip precision
// (loading the dump reproduces the same doubles bit-exactly).
void dump_zero_table(const ZeroTable& table, std::ostream& out);

} // namespace ramsum

// Truncation knobs shared by the Bartz evaluators and the CLI: how many
// zeros enter a zero sum, where Dirichlet tails are cut, and how contour
// quadratures are stepped and truncated.

#pragma once

#include <cstddef>

namespace ramsum {

struct TruncationConfig {
    std::size_t zero_pairs = 100; // zeros kept in zero sums (<= table size)
    double series_tol = 1e-10;    // running-tolerance stop for series
    long long q_cutoff = 10000;   // Dirichlet / c_q series cutoff
    double quad_step = 0.25;      // initial Simpson panel width
    double t_cut = 60.0;          // vertical-contour truncation height

    void validate() const; // all positive
};

} // namespace ramsum

// Complex log-gamma (Lanczos, g = 7), digamma, and a log-sin that stays
// finite for large |Im|. Used by the zeta reflection formula, the
// Riemann-Siegel theta function, and the Gamma/zeta contour integrands.

#pragma once

#include <complex>

namespace ramsum {

using cplx = std::complex<double>;

// log Gamma(z); principal-ish branch, intended to be exponentiated or to
// have Re/Im taken, not to be continuous across sheets.
cplx log_gamma(cplx z);

// Gamma(z) = exp(log_gamma(z)).
cplx gamma_fn(cplx z);

// digamma psi0(z), via shifted asymptotic series and reflection.
cplx digamma(cplx z);

// log(sin(w)) computed through the dominant exponential so it does not
// overflow for large |Im w|; branch only stable up to multiples of 2 pi i.
cplx log_sin(cplx w);

} // namespace ramsum

#include "ramsum/gamma.hpp"

#include <cmath>
#include <numbers>

namespace ramsum {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfLog2Pi = 0.91893853320467274178; // log(2 pi)/2

// Lanczos coefficients, g = 7, 9 terms (~15 significant digits).
constexpr double kLanczos[9] = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7,
};

// B_{2j}/(2j) for the digamma asymptotic tail.
constexpr double kDigammaTail[6] = {
    1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0, 1.0 / 132.0, -691.0 / 32760.0,
};

cplx log_gamma_core(cplx z) {
    // valid for Re z > 0.5
    z -= 1.0;
    cplx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    const cplx t = z + 7.5;
    return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

} // namespace

cplx log_sin(cplx w) {
    // sin w = e^{iw}(1 - e^{-2iw})/(2i) when Im w <= 0, mirrored otherwise.
    const cplx i{0.0, 1.0};
    if (w.imag() <= 0.0)
        return i * w + std::log(1.0 - std::exp(-2.0 * i * w)) - std::log(2.0 * i);
    return -i * w + std::log(1.0 - std::exp(2.0 * i * w)) - std::log(-2.0 * i);
}

cplx log_gamma(cplx z) {
    if (z.real() > 0.5) return log_gamma_core(z);
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::log(kPi) - log_sin(kPi * z) - log_gamma_core(1.0 - z);
}

cplx gamma_fn(cplx z) { return std::exp(log_gamma(z)); }

cplx digamma(cplx z) {
    if (z.real() < 0.5) {
        // psi(z) = psi(1-z) - pi cot(pi z)
        const cplx i{0.0, 1.0};
        const cplx w = kPi * z;
        cplx cot;
        if (w.imag() > 0.0)
            cot = i * (std::exp(2.0 * i * w) + 1.0) / (std::exp(2.0 * i * w) - 1.0);
        else
            cot = i * (1.0 + std::exp(-2.0 * i * w)) / (1.0 - std::exp(-2.0 * i * w));
        return digamma(1.0 - z) - kPi * cot;
    }
    cplx shift{0.0, 0.0};
    while (z.real() < 10.0) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    const cplx inv = 1.0 / z;
    const cplx inv2 = inv * inv;
    cplx series{0.0, 0.0};
    cplx p = inv2;
    for (double coeff : kDigammaTail) {
        series -= coeff * p;
        p *= inv2;
    }
    return shift + std::log(z) - 0.5 * inv + series;
}

} // namespace ramsum

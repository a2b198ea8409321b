#pragma once

#include <cmath>
#include <complex>

#include "spsim/units.hpp"

namespace spsim {

// Faddeeva function w(z) = exp(-z^2) erfc(-iz) for Im(z) >= 0.
// Modified midpoint rule with pole correction (Matta-Reichel / Hunter-Regan
// family). N=16 gives < 5e-10 relative error over the relevant domain.
inline std::complex<double> faddeeva_w(std::complex<double> z) {
    constexpr int N = 16;
    const double h = std::sqrt(kPi / (2.0 * N));
    // midpoint nodes tau_m = (m+1/2)h and weights exp(-tau^2), symmetric
    static const struct Nodes {
        double tau[N];
        double w[N];
        Nodes() {
            const double hh = std::sqrt(3.14159265358979323846 / (2.0 * N));
            for (int m = 0; m < N; ++m) {
                tau[m] = (m + 0.5) * hh;
                w[m] = std::exp(-tau[m] * tau[m]);
            }
        }
    } nodes;

    std::complex<double> s{0.0, 0.0};
    for (int m = 0; m < N; ++m) {
        // pair (tau, -tau): 1/(z-t) + 1/(z+t) = 2z/(z^2-t^2)
        s += nodes.w[m] * (2.0 * z / (z * z - nodes.tau[m] * nodes.tau[m]));
    }
    std::complex<double> val = std::complex<double>(0.0, h / kPi) * s;
    if (z.imag() * kTwoPi / h < 25.0) {
        // correction cancels the quadrature poles on the real axis
        val += 2.0 * std::exp(-z * z) /
               (1.0 + std::exp(std::complex<double>(0.0, -kTwoPi / h) * z));
    }
    return val;
}

// Normalized Voigt density: Gaussian sigma convolved with Lorentzian HWHM gamma.
inline double voigt_profile(double x, double sigma, double gamma) {
    if (sigma < 1e-12) {
        if (gamma < 1e-12) return 0.0; // degenerate; callers avoid this
        return (gamma / kPi) / (x * x + gamma * gamma);
    }
    std::complex<double> z(x / (sigma * std::sqrt(2.0)), gamma / (sigma * std::sqrt(2.0)));
    return faddeeva_w(z).real() / (sigma * std::sqrt(2.0 * kPi));
}

// Density parameterized by FWHMs (handy for fit models)
inline double voigt_profile_fwhm(double x, double gauss_fwhm, double lorentz_fwhm) {
    return voigt_profile(x, gauss_fwhm > 0 ? fwhm_to_sigma(gauss_fwhm) : 0.0, lorentz_fwhm / 2.0);
}

// FWHM of the Voigt profile by bisection on the half-maximum crossing.
inline double voigt_fwhm(double gauss_fwhm, double lorentz_fwhm) {
    double p0 = voigt_profile_fwhm(0.0, gauss_fwhm, lorentz_fwhm);
    double lo = 0.0, hi = gauss_fwhm + lorentz_fwhm + 1e-9;
    while (voigt_profile_fwhm(hi, gauss_fwhm, lorentz_fwhm) > 0.5 * p0) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (voigt_profile_fwhm(mid, gauss_fwhm, lorentz_fwhm) > 0.5 * p0)
            lo = mid;
        else
            hi = mid;
    }
    return lo + hi; // 2 * half-width
}

} // namespace spsim

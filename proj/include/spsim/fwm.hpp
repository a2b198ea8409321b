#pragma once

#include <cmath>
#include <stdexcept>

#include "spsim/units.hpp"

namespace spsim {

// Degenerate four-wave-mixing pulse-overlap proxy for Gaussian intensity
// envelopes: K*(int I1^2 I2 + int I1 I2^2) with I_j peak-normalized to P_j.
// Maximal at zero delay, cubic in total power.
inline double fwm_overlap_proxy(double p1_nw, double p2_nw, double delay_ps,
                                double duration1_fwhm_ps, double duration2_fwhm_ps,
                                double scale = 1.0) {
    if (p1_nw < 0.0 || p2_nw < 0.0) throw std::domain_error("fwm_overlap_proxy: negative power");
    if (duration1_fwhm_ps <= 0.0 || duration2_fwhm_ps <= 0.0)
        throw std::domain_error("fwm_overlap_proxy: durations must be > 0");
    const double s1 = fwhm_to_sigma(duration1_fwhm_ps);
    const double s2 = fwhm_to_sigma(duration2_fwhm_ps);
    const double d2 = delay_ps * delay_ps;
    // int exp(-a t^2) exp(-b (t-d)^2) dt = sqrt(pi/(a+b)) exp(-a b d^2/(a+b))
    auto gauss_prod = [&](double a, double b) {
        return std::sqrt(kPi / (a + b)) * std::exp(-a * b * d2 / (a + b));
    };
    double t1 = p1_nw * p1_nw * p2_nw * gauss_prod(1.0 / (s1 * s1), 0.5 / (s2 * s2));
    double t2 = p1_nw * p2_nw * p2_nw * gauss_prod(0.5 / (s1 * s1), 1.0 / (s2 * s2));
    return scale * (t1 + t2);
}

} // namespace spsim

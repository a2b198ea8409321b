#pragma once

#include <cmath>
#include <stdexcept>

namespace spsim {

// Working units: time ps, length nm, frequency GHz (ordinary) or rad/ps (angular),
// power nW, rates MHz where noted by a _mhz suffix.

inline constexpr double kSpeedOfLightNmPerPs = 299792.458;
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Gaussian FWHM <-> sigma
inline double fwhm_to_sigma(double fwhm) { return fwhm / (2.0 * std::sqrt(2.0 * std::log(2.0))); }
inline double sigma_to_fwhm(double sigma) { return sigma * 2.0 * std::sqrt(2.0 * std::log(2.0)); }

// Detuning unit bridge: wavelength offset (nm) at a carrier (nm) -> angular frequency (rad/ps).
// Sign is preserved; the red/blue sign convention is applied by the caller.
inline double detuning_nm_to_angular_frequency(double dl_nm, double carrier_nm) {
    if (carrier_nm <= 0.0)
        throw std::domain_error("detuning_nm_to_angular_frequency: carrier must be > 0");
    return kTwoPi * kSpeedOfLightNmPerPs * dl_nm / (carrier_nm * carrier_nm);
}

// Same bridge in ordinary frequency (GHz): c*dl/lambda^2, with c in nm/ps = 1e3 * nm*GHz.
inline double detuning_nm_to_ghz(double dl_nm, double carrier_nm) {
    return detuning_nm_to_angular_frequency(dl_nm, carrier_nm) / kTwoPi * 1.0e3;
}

// Radiative (Fourier-limit) linewidth in GHz from a lifetime in ps.
inline double fourier_linewidth_ghz(double t1_ps) {
    if (t1_ps <= 0.0) throw std::domain_error("fourier_linewidth_ghz: T1 must be > 0");
    return 1.0e3 / (kTwoPi * t1_ps);
}

inline double repetition_period_ps(double rep_rate_mhz) {
    if (rep_rate_mhz <= 0.0) throw std::domain_error("repetition_period_ps: rate must be > 0");
    return 1.0e6 / rep_rate_mhz;
}

} // namespace spsim

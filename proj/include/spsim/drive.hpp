#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "spsim/emitter.hpp"
#include "spsim/units.hpp"

namespace spsim {

enum class PulseEnvelope { gaussian, sech };

// Calibration constant kappa in area = kappa*sqrt(P_nW/f_rep_MHz).
// Chosen so 350 nW at 76 MHz gives a 5.6*pi pulse area, which places the
// two-color resonance ridge in the 2.5-3.0*|Delta1| band.
inline constexpr double kDefaultPowerAreaKappa = 8.19803;

struct PulseSpec {
    double detuning_nm = 0.0;      // positive = red-detuned (paper convention)
    double power_nw = 0.0;         // average power; ignored if area_rad > 0
    double area_rad = 0.0;         // pulse area; overrides power when > 0
    double duration_fwhm_ps = 4.2; // intensity-envelope FWHM
    PulseEnvelope envelope = PulseEnvelope::gaussian;
    double center_ps = 0.0;        // envelope center
    double phase_rad = 0.0;        // carrier phase at the envelope center

    void validate() const {
        if (duration_fwhm_ps <= 0.0)
            throw std::domain_error("PulseSpec: duration_fwhm_ps must be > 0");
        if (power_nw < 0.0) throw std::domain_error("PulseSpec: power_nw must be >= 0");
    }

    // Detuning in the Hamiltonian convention: red (positive nm) -> negative rad/ps.
    double detuning_rad_per_ps(const EmitterParams& em) const {
        return -detuning_nm_to_angular_frequency(detuning_nm, em.transition_wavelength_nm);
    }

    double area(double rep_rate_mhz, double kappa = kDefaultPowerAreaKappa) const {
        if (area_rad > 0.0) return area_rad;
        return kappa * std::sqrt(power_nw / rep_rate_mhz);
    }

    // Peak Rabi frequency (rad/ps) for the given area
    double peak_rabi(double area_value) const {
        if (envelope == PulseEnvelope::gaussian) {
            double sigma = fwhm_to_sigma(duration_fwhm_ps);
            return area_value / (sigma * std::sqrt(2.0 * kPi));
        }
        // sech(t/tau): area = pi * Omega0 * tau, field FWHM = 2*acosh(2)*tau
        double tau = duration_fwhm_ps / (2.0 * std::acosh(2.0));
        return area_value / (kPi * tau);
    }

    double envelope_value(double t, double peak) const {
        double x = t - center_ps;
        if (envelope == PulseEnvelope::gaussian) {
            double sigma = fwhm_to_sigma(duration_fwhm_ps);
            return peak * std::exp(-x * x / (2.0 * sigma * sigma));
        }
        double tau = duration_fwhm_ps / (2.0 * std::acosh(2.0));
        return peak / std::cosh(x / tau);
    }
};

// Phenomenological phonon-assisted preparation probability: zero at zero
// power, saturating. Used as a scan background, not a coherent term.
struct PhononProxy {
    double p_max = 0.05;
    double p_sat_nw = 400.0;

    double operator()(double power_nw) const {
        if (power_nw <= 0.0) return 0.0;
        return p_max * (1.0 - std::exp(-power_nw / p_sat_nw));
    }
};

struct DriveConfig {
    std::vector<PulseSpec> pulses;
    double inter_pulse_delay_ps = 0.0; // added to pulse[1] center when two pulses
    double repetition_rate_mhz = 76.0;
    double power_area_kappa = kDefaultPowerAreaKappa;
    PhononProxy phonon;
    double phonon_pump_rate = 0.0; // direct per-trigger incoherent preparation probability

    void validate() const {
        if (repetition_rate_mhz <= 0.0)
            throw std::domain_error("DriveConfig: repetition_rate_mhz must be > 0");
        if (pulses.empty() || pulses.size() > 2)
            throw std::domain_error("DriveConfig: need 1 or 2 pulses");
        if (pulses.size() < 2 && inter_pulse_delay_ps != 0.0)
            throw std::domain_error("DriveConfig: inter_pulse_delay needs two pulses");
        for (const auto& p : pulses) p.validate();
    }
};

} // namespace spsim

#pragma once

#include <cmath>
#include <stdexcept>

#include "spsim/units.hpp"

namespace spsim {

struct EmitterParams {
    double transition_wavelength_nm = 1551.0;
    double lifetime_t1_ps = 500.0;
    double fourier_linewidth_ghz = 0.3183; // 1/(2*pi*T1) at 500 ps
    double purcell_factor = 4.3;
    double polarization_degree = 0.95;

    double decay_rate_per_ps() const { return 1.0 / lifetime_t1_ps; }

    void validate() const {
        if (lifetime_t1_ps <= 0.0)
            throw std::domain_error("EmitterParams: lifetime_t1_ps must be > 0");
        if (transition_wavelength_nm <= 0.0)
            throw std::domain_error("EmitterParams: transition_wavelength_nm must be > 0");
        if (polarization_degree < 0.0 || polarization_degree > 1.0)
            throw std::domain_error("EmitterParams: polarization_degree must be in [0,1]");
        // Fourier limit and T1 must agree to 5% when both set
        double fl = spsim::fourier_linewidth_ghz(lifetime_t1_ps);
        if (fourier_linewidth_ghz > 0.0 && std::abs(fourier_linewidth_ghz - fl) > 0.05 * fl)
            throw std::domain_error(
                "EmitterParams: fourier_linewidth_ghz inconsistent with 1/(2*pi*T1)");
    }
};

} // namespace spsim

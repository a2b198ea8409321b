#pragma once

#include <cmath>
#include <stdexcept>

namespace spsim {

struct EfficiencyBudget {
    double cr_raw_mhz = 0.0;
    double eta_detection = 1.0;
    double g2_zero = 0.0;
    double rep_rate_mhz = 152.0;
    double cr_end_mhz = 0.0;  // cr_raw/eta_detection * sqrt(1 - g2)
    double eta_end = 0.0;     // cr_end/rep_rate
};

// Application-ready rate bookkeeping: detected counts corrected for the
// detection path and for the multiphoton contribution.
inline EfficiencyBudget efficiency_budget(double cr_raw_mhz, double eta_detection, double g2_zero,
                                          double rep_rate_mhz) {
    if (cr_raw_mhz < 0.0) throw std::domain_error("efficiency_budget: cr_raw must be >= 0");
    if (eta_detection <= 0.0 || eta_detection > 1.0)
        throw std::domain_error("efficiency_budget: eta_detection must be in (0,1]");
    if (g2_zero < 0.0 || g2_zero >= 1.0)
        throw std::domain_error("efficiency_budget: g2_zero must be in [0,1)");
    if (rep_rate_mhz <= 0.0) throw std::domain_error("efficiency_budget: rep_rate must be > 0");
    EfficiencyBudget b;
    b.cr_raw_mhz = cr_raw_mhz;
    b.eta_detection = eta_detection;
    b.g2_zero = g2_zero;
    b.rep_rate_mhz = rep_rate_mhz;
    b.cr_end_mhz = cr_raw_mhz / eta_detection * std::sqrt(1.0 - g2_zero);
    b.eta_end = b.cr_end_mhz / rep_rate_mhz;
    return b;
}

} // namespace spsim

#pragma once

#include <vector>

#include "spsim/histogram.hpp"

namespace spsim {

struct CorrelationResult {
    double g2_zero = 0.0;
    double g2_err = 0.0;
    std::vector<double> peak_areas; // dark-corrected, by peak index offset from side_lo
    double side_level = 0.0;        // mean far-side-peak area
    bool dark_correction_applied = false;
};

struct G2Options {
    double dark_rate_hz[2] = {0.0, 0.0};
    int side_lo = 10; // far side peaks used as the Poissonian reference
    int side_hi = 20;
};

// g2(0) = central-window coincidences over the mean far-side-peak area, each
// integrated over one full repetition period and corrected for the analytic
// dark-count pedestal. Errors by Poisson propagation.
CorrelationResult g2_from_histogram(const Histogram& h, double rep_period_ps,
                                    const G2Options& opts = {});

struct VisibilityResult {
    double visibility = 0.0;
    double error = 0.0;
    double central_parallel = 0.0;
    double central_orthogonal = 0.0;
    double side_ratio = 1.0; // parallel/orthogonal far-side ratio, should be ~1
    bool side_ratio_warning = false;
};

// V = 1 - A_par(0)/A_orth(0): central areas integrated over one full
// repetition period. The far-side-peak ratio between the two measurements is
// cross-checked against 1.
VisibilityResult tpi_visibility(const Histogram& h_parallel, const Histogram& h_orthogonal,
                                double rep_period_ps);

// window sum of one full period centered at k*T, with linear pedestal subtraction
double window_area(const Histogram& h, double rep_period_ps, int k, double pedestal_per_bin = 0.0);

} // namespace spsim

#include "spsim/correlation.hpp"

#include <cmath>
#include <stdexcept>

namespace spsim {

double window_area(const Histogram& h, double rep_period_ps, int k, double pedestal_per_bin) {
    double lo = k * rep_period_ps - rep_period_ps / 2.0;
    double hi = k * rep_period_ps + rep_period_ps / 2.0;
    double area = 0.0;
    for (size_t i = 0; i < h.counts.size(); ++i) {
        double c = h.bin_center(i);
        if (c >= lo && c < hi) area += static_cast<double>(h.counts[i]) - pedestal_per_bin;
    }
    return area;
}

namespace {

double raw_window(const Histogram& h, double rep_period_ps, int k) {
    return window_area(h, rep_period_ps, k, 0.0);
}

} // namespace

CorrelationResult g2_from_histogram(const Histogram& h, double rep_period_ps,
                                    const G2Options& opts) {
    if (rep_period_ps <= 0.0) throw std::domain_error("g2_from_histogram: bad period");
    double span = -h.bin_edges_ps.front();
    if (span < (opts.side_hi + 0.5) * rep_period_ps)
        throw std::runtime_error("g2_from_histogram: span does not cover the side-peak window");

    // analytic dark pedestal per bin
    double dur = h.total_duration_ps;
    double d0 = opts.dark_rate_hz[0] * 1e-12, d1 = opts.dark_rate_hz[1] * 1e-12;
    double pedestal = 0.0;
    bool dark_corrected = false;
    if (dur > 0.0 && (d0 > 0.0 || d1 > 0.0)) {
        double ra = static_cast<double>(h.n_tags_a) / dur - d0;
        double rb = static_cast<double>(h.n_tags_b) / dur - d1;
        ra = std::max(ra, 0.0);
        rb = std::max(rb, 0.0);
        pedestal = (ra * d1 + rb * d0 + d0 * d1) * h.bin_width_ps() * dur;
        dark_corrected = true;
    }
    double bins_per_window = rep_period_ps / h.bin_width_ps();

    double a0_raw = raw_window(h, rep_period_ps, 0);
    double a0 = a0_raw - pedestal * bins_per_window;

    CorrelationResult out;
    out.dark_correction_applied = dark_corrected;
    double side_sum = 0.0, side_raw_sum = 0.0;
    int n_side = 0;
    for (int k = opts.side_lo; k <= opts.side_hi; ++k) {
        for (int s : {-k, k}) {
            double raw = raw_window(h, rep_period_ps, s);
            double corrected = raw - pedestal * bins_per_window;
            out.peak_areas.push_back(corrected);
            side_sum += corrected;
            side_raw_sum += raw;
            ++n_side;
        }
    }
    if (n_side == 0 || side_sum <= 0.0)
        throw std::runtime_error("g2_from_histogram: no side-peak statistics");

    double side_mean = side_sum / n_side;
    out.side_level = side_mean;
    out.g2_zero = a0 / side_mean;
    // Poisson errors on the raw sums
    double var_a0 = std::max(a0_raw, 1.0);
    double var_side_mean = std::max(side_raw_sum, 1.0) / (static_cast<double>(n_side) * n_side);
    out.g2_err = std::sqrt(var_a0 / (side_mean * side_mean) +
                           var_side_mean * a0 * a0 / std::pow(side_mean, 4));
    return out;
}

VisibilityResult tpi_visibility(const Histogram& h_parallel, const Histogram& h_orthogonal,
                                double rep_period_ps) {
    if (rep_period_ps <= 0.0) throw std::domain_error("tpi_visibility: bad period");
    VisibilityResult out;
    out.central_parallel = raw_window(h_parallel, rep_period_ps, 0);
    out.central_orthogonal = raw_window(h_orthogonal, rep_period_ps, 0);
    if (out.central_orthogonal <= 0.0)
        throw std::runtime_error("tpi_visibility: zero orthogonal central area");
    double ratio = out.central_parallel / out.central_orthogonal;
    out.visibility = 1.0 - ratio;
    out.error = ratio * std::sqrt(1.0 / std::max(out.central_parallel, 1.0) +
                                  1.0 / out.central_orthogonal);

    // normalization cross-check on far side peaks
    double sp = 0.0, so = 0.0;
    int n = 0;
    double span = std::min(-h_parallel.bin_edges_ps.front(), -h_orthogonal.bin_edges_ps.front());
    int kmax = static_cast<int>(span / rep_period_ps - 0.5);
    for (int k = 10; k <= std::min(20, kmax); ++k) {
        for (int s : {-k, k}) {
            sp += raw_window(h_parallel, rep_period_ps, s);
            so += raw_window(h_orthogonal, rep_period_ps, s);
            ++n;
        }
    }
    if (n > 0 && so > 0.0) {
        out.side_ratio = sp / so;
        double err = out.side_ratio * std::sqrt(1.0 / std::max(sp, 1.0) + 1.0 / so);
        out.side_ratio_warning = std::abs(out.side_ratio - 1.0) > 4.0 * err + 0.02;
    }
    return out;
}

} // namespace spsim

#include "spsim/histogram.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

namespace spsim {

Histogram build_correlation(std::vector<TimeTag> tags_a, std::vector<TimeTag> tags_b,
                            double bin_width_ps, double span_ps, double total_duration_ps) {
    if (bin_width_ps <= 0.0) throw std::domain_error("build_correlation: bin_width must be > 0");
    if (span_ps <= 0.0) throw std::domain_error("build_correlation: span must be > 0");

    Histogram h;
    auto by_time = [](const TimeTag& x, const TimeTag& y) { return x.timestamp_ps < y.timestamp_ps; };
    if (!std::is_sorted(tags_a.begin(), tags_a.end(), by_time)) {
        std::sort(tags_a.begin(), tags_a.end(), by_time);
        h.sorted_warning = true;
    }
    if (!std::is_sorted(tags_b.begin(), tags_b.end(), by_time)) {
        std::sort(tags_b.begin(), tags_b.end(), by_time);
        h.sorted_warning = true;
    }

    // bins centered on multiples of the bin width: k in [-K, K]; the mirrored
    // histogram is then bin-exact under stream swap (llround is odd-symmetric)
    const long K = static_cast<long>(std::floor(span_ps / bin_width_ps));
    const int n_bins = static_cast<int>(2 * K + 1);
    h.bin_edges_ps.resize(n_bins + 1);
    for (int i = 0; i <= n_bins; ++i)
        h.bin_edges_ps[i] = (i - static_cast<double>(K) - 0.5) * bin_width_ps;
    h.counts.assign(n_bins, 0);
    h.n_tags_a = static_cast<int64_t>(tags_a.size());
    h.n_tags_b = static_cast<int64_t>(tags_b.size());
    h.total_duration_ps = total_duration_ps;
    if (total_duration_ps <= 0.0 && !tags_a.empty() && !tags_b.empty())
        h.total_duration_ps = static_cast<double>(
            std::max(tags_a.back().timestamp_ps, tags_b.back().timestamp_ps));

    const double tau_max = (static_cast<double>(K) + 0.5) * bin_width_ps;
    size_t lo = 0;
    for (const auto& a : tags_a) {
        while (lo < tags_b.size() &&
               static_cast<double>(tags_b[lo].timestamp_ps - a.timestamp_ps) < -tau_max)
            ++lo;
        for (size_t j = lo; j < tags_b.size(); ++j) {
            double tau = static_cast<double>(tags_b[j].timestamp_ps - a.timestamp_ps);
            if (tau >= tau_max) break;
            long k = std::lround(tau / bin_width_ps);
            if (k >= -K && k <= K) ++h.counts[static_cast<size_t>(k + K)];
        }
    }
    return h;
}

void write_histogram_csv(const Histogram& h, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("write_histogram_csv: cannot open " + path);
    f << "tau_ps,counts\n";
    char buf[96];
    for (size_t i = 0; i < h.counts.size(); ++i) {
        int n = std::snprintf(buf, sizeof buf, "%.9g,%llu\n", h.bin_center(i),
                              static_cast<unsigned long long>(h.counts[i]));
        f.write(buf, n);
    }
}

} // namespace spsim

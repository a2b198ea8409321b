#pragma once

#include <cstdint>
#include <vector>

#include "spsim/detector.hpp"

namespace spsim {

struct Histogram {
    std::vector<double> bin_edges_ps; // n_bins + 1 edges
    std::vector<uint64_t> counts;
    std::pair<int, int> channel_pair{0, 1};
    double total_duration_ps = 0.0;
    int64_t n_tags_a = 0;
    int64_t n_tags_b = 0;
    bool sorted_warning = false; // inputs had to be sorted first

    double bin_width_ps() const { return bin_edges_ps.size() > 1 ? bin_edges_ps[1] - bin_edges_ps[0] : 0.0; }
    double bin_center(size_t i) const { return 0.5 * (bin_edges_ps[i] + bin_edges_ps[i + 1]); }
};

// Cross-correlation histogram of tag time differences t_b - t_a over
// [-span, +span], linear-time two-pointer over sorted streams. Unsorted
// inputs are sorted with a warning flag.
Histogram build_correlation(std::vector<TimeTag> tags_a, std::vector<TimeTag> tags_b,
                            double bin_width_ps, double span_ps, double total_duration_ps = 0.0);

void write_histogram_csv(const Histogram& h, const std::string& path);

} // namespace spsim

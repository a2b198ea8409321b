#include "spsim/detector.hpp"

#include <algorithm>
#include <cmath>

#include "spsim/rng.hpp"
#include "spsim/units.hpp"

namespace spsim {

std::vector<std::vector<TimeTag>> detect(const std::vector<DetectionEvent>& events,
                                         const DetectorSpec detectors[2], double duration_ps,
                                         uint64_t seed, DetectStats* stats) {
    detectors[0].validate();
    detectors[1].validate();

    DetectStats local;
    local.n_events = static_cast<int64_t>(events.size());

    // (time, is_dark) per channel
    std::vector<std::pair<double, bool>> ch[2];
    for (size_t i = 0; i < events.size(); ++i) {
        const auto& ev = events[i];
        const DetectorSpec& det = detectors[ev.channel];
        CounterRng rng(seed, ev.channel == 0 ? RngKind::detect0 : RngKind::detect1, i);
        if (!rng.bernoulli(det.efficiency)) continue;
        ++local.n_detected;
        double t = ev.time_ps;
        if (det.timing_jitter_fwhm_ps > 0.0)
            t += fwhm_to_sigma(det.timing_jitter_fwhm_ps) * rng.normal();
        ch[ev.channel].push_back({t, false});
    }

    // dark counts: homogeneous Poisson process over the acquisition
    for (int c = 0; c < 2; ++c) {
        double rate_per_ps = detectors[c].dark_count_rate_hz * 1e-12;
        if (rate_per_ps <= 0.0) continue;
        CounterRng rng(seed, c == 0 ? RngKind::dark0 : RngKind::dark1, 0);
        double t = rng.exponential(1.0 / rate_per_ps);
        while (t < duration_ps) {
            ch[c].push_back({t, true});
            ++local.n_darks;
            t += rng.exponential(1.0 / rate_per_ps);
        }
    }

    std::vector<std::vector<TimeTag>> tags(2);
    for (int c = 0; c < 2; ++c) {
        std::sort(ch[c].begin(), ch[c].end());
        double blocked_until = -1.0;
        for (const auto& [t, is_dark] : ch[c]) {
            if (t < blocked_until) {
                ++local.n_dead_dropped;
                continue;
            }
            blocked_until = t + detectors[c].dead_time_ps;
            tags[c].push_back({static_cast<int64_t>(std::llround(t)), static_cast<uint8_t>(c)});
        }
        local.tags_per_channel[c] = static_cast<int64_t>(tags[c].size());
    }
    if (stats) *stats = local;
    return tags;
}

} // namespace spsim

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace spsim {

struct DetectorSpec {
    double efficiency = 0.768;
    double dark_count_rate_hz = 100.0;
    double timing_jitter_fwhm_ps = 50.0;
    double dead_time_ps = 20'000.0;

    void validate() const {
        if (efficiency < 0.0 || efficiency > 1.0)
            throw std::domain_error("DetectorSpec: efficiency must be in [0,1]");
        if (dark_count_rate_hz < 0.0 || timing_jitter_fwhm_ps < 0.0 || dead_time_ps < 0.0)
            throw std::domain_error("DetectorSpec: rates/times must be >= 0");
    }
};

struct TimeTag {
    int64_t timestamp_ps = 0;
    uint8_t channel = 0;

    friend bool operator==(const TimeTag&, const TimeTag&) = default;
};

// a photon arrival assigned to a detector input, before detection effects
struct DetectionEvent {
    double time_ps;
    uint8_t channel;
};

struct DetectStats {
    int64_t n_events = 0;      // photon arrivals offered to the detectors
    int64_t n_detected = 0;    // survived efficiency thinning
    int64_t n_dead_dropped = 0;
    int64_t n_darks = 0;
    int64_t tags_per_channel[2] = {0, 0};
};

// Efficiency thinning, Gaussian timing jitter, Poisson dark counts, then a
// per-channel dead-time sweep. Tags come back time-sorted per channel.
// Tags excluding darks = detected photons minus dead-time losses, exactly.
std::vector<std::vector<TimeTag>> detect(const std::vector<DetectionEvent>& events,
                                         const DetectorSpec detectors[2], double duration_ps,
                                         uint64_t seed, DetectStats* stats = nullptr);

} // namespace spsim

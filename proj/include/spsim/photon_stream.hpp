#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spsim/emitter.hpp"
#include "spsim/noise.hpp"

namespace spsim {

enum class PhotonKind : uint8_t { signal = 0, background = 1 };

struct PhotonRecord {
    int64_t trigger = 0;
    float emission_ps = 0.0f;      // time since trigger
    float freq_ghz = 0.0f;         // center frequency offset from the nominal transition
    float homog_fwhm_ghz = 0.32f;  // homogeneous (Lorentzian) linewidth of this photon
    float effective_fwhm_ghz = 0.32f; // post-filter overlap width proxy: min(homog, filter)
    PhotonKind kind = PhotonKind::signal;
    bool passes_polarizer = true;
    bool filtered = false;
};

struct FilterSpec; // filter.hpp

struct StreamConfig {
    int64_t n_triggers = 2'000'000;
    double repetition_rate_mhz = 152.0;
    double preparation_probability = 1.0;
    uint64_t rng_seed = 1;

    void validate() const {
        if (n_triggers <= 0) throw std::domain_error("StreamConfig: n_triggers must be > 0");
        if (repetition_rate_mhz <= 0.0)
            throw std::domain_error("StreamConfig: repetition_rate_mhz must be > 0");
        if (preparation_probability < 0.0 || preparation_probability > 1.0)
            throw std::domain_error("StreamConfig: preparation_probability must be in [0,1]");
    }
};

struct PhotonStream {
    std::vector<PhotonRecord> records;
    int64_t n_triggers = 0;
    double repetition_period_ps = 0.0;
    double duration_ps = 0.0;
    EmitterParams emitter;
    std::vector<FilterSpec> applied_filters; // chain history, in order

    int64_t count(PhotonKind k) const;
};

// Monte Carlo photon stream: per trigger, an "on" emitter fires with the
// preparation probability; signal photons carry the frequency-noise state at
// their trigger; an independent background photon appears with
// multiphoton_prob. Deterministic given the seed; noise processes advance
// trigger-sequentially on per-trigger counter substreams.
PhotonStream generate_stream(const EmitterParams& emitter, const NoiseModel& noise,
                             const StreamConfig& cfg);

// CSV: "trigger,emission_ps,freq_offset_ghz,kind"
void write_stream_csv(const PhotonStream& stream, const std::string& path);
PhotonStream read_stream_csv(const std::string& path);

} // namespace spsim

#include "spsim/photon_stream.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "spsim/filter.hpp"
#include "spsim/units.hpp"

namespace spsim {

int64_t PhotonStream::count(PhotonKind k) const {
    int64_t n = 0;
    for (const auto& r : records)
        if (r.kind == k) ++n;
    return n;
}

PhotonStream generate_stream(const EmitterParams& emitter, const NoiseModel& noise,
                             const StreamConfig& cfg) {
    emitter.validate();
    noise.validate();
    cfg.validate();

    const double period_ps = repetition_period_ps(cfg.repetition_rate_mhz);
    const double dt_ns = period_ps * 1e-3;
    const uint64_t seed = cfg.rng_seed;

    PhotonStream out;
    out.n_triggers = cfg.n_triggers;
    out.repetition_period_ps = period_ps;
    out.duration_ps = period_ps * static_cast<double>(cfg.n_triggers);
    out.emitter = emitter;
    out.records.reserve(static_cast<size_t>(
        cfg.n_triggers * std::min(1.0, cfg.preparation_probability + noise.multiphoton_prob) + 16));

    TwoStateProcess blink(noise.blink_on_fraction, 1.0 / noise.blink_corr_time_ns);
    auto fluct_specs = noise.all_fluctuators();
    std::vector<TwoStateProcess> fluct;
    for (const auto& f : fluct_specs) fluct.emplace_back(f.occupancy, f.rate_per_ns);

    // event 0 initializes the stateful processes from their stationary laws
    {
        CounterRng r0(seed, RngKind::blink, 0);
        blink.init_stationary(r0);
        for (size_t k = 0; k < fluct.size(); ++k) {
            CounterRng rk(seed, static_cast<RngKind>(static_cast<uint32_t>(RngKind::telegraph0) + k), 0);
            fluct[k].init_stationary(rk);
        }
    }
    double ou = 0.0;
    {
        CounterRng r0(seed, RngKind::ou, 0);
        ou = noise.sd_sigma_ghz * r0.normal();
    }

    const float sig_homog = static_cast<float>(emitter.fourier_linewidth_ghz);
    const float bg_homog = static_cast<float>(noise.background_homog_fwhm_ghz);
    const double bg_center_sigma = fwhm_to_sigma(noise.background_linewidth_ghz);

    for (int64_t i = 0; i < cfg.n_triggers; ++i) {
        const uint64_t ev = static_cast<uint64_t>(i) + 1;

        CounterRng r_blink(seed, RngKind::blink, ev);
        blink.step(dt_ns, r_blink);

        CounterRng r_ou(seed, RngKind::ou, ev);
        if (noise.sd_sigma_ghz > 0.0)
            ou = ou_step(ou, dt_ns, noise.sd_sigma_ghz, noise.sd_corr_time_ns, r_ou);

        double tele_offset = 0.0;
        for (size_t k = 0; k < fluct.size(); ++k) {
            CounterRng rk(seed, static_cast<RngKind>(static_cast<uint32_t>(RngKind::telegraph0) + k), ev);
            fluct[k].step(dt_ns, rk);
            if (fluct[k].state()) tele_offset += fluct_specs[k].splitting_ghz;
        }

        CounterRng r_emit(seed, RngKind::emit, ev);
        if (blink.state() && r_emit.bernoulli(cfg.preparation_probability)) {
            PhotonRecord rec;
            rec.trigger = i;
            rec.emission_ps = static_cast<float>(r_emit.exponential(emitter.lifetime_t1_ps));
            rec.freq_ghz = static_cast<float>(ou + tele_offset);
            rec.homog_fwhm_ghz = sig_homog;
            rec.effective_fwhm_ghz = sig_homog;
            rec.kind = PhotonKind::signal;
            rec.passes_polarizer = r_emit.bernoulli(emitter.polarization_degree);
            out.records.push_back(rec);
        }

        if (noise.multiphoton_prob > 0.0) {
            CounterRng r_bg(seed, RngKind::background, ev);
            if (r_bg.bernoulli(noise.multiphoton_prob)) {
                PhotonRecord rec;
                rec.trigger = i;
                rec.emission_ps = static_cast<float>(r_bg.exponential(emitter.lifetime_t1_ps));
                rec.freq_ghz = static_cast<float>(bg_center_sigma * r_bg.normal());
                rec.homog_fwhm_ghz = bg_homog;
                rec.effective_fwhm_ghz = bg_homog;
                rec.kind = PhotonKind::background;
                rec.passes_polarizer = r_bg.bernoulli(emitter.polarization_degree);
                out.records.push_back(rec);
            }
        }
    }
    return out;
}

void write_stream_csv(const PhotonStream& stream, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("write_stream_csv: cannot open " + path);
    f << "trigger,emission_ps,freq_offset_ghz,kind\n";
    char buf[160];
    for (const auto& r : stream.records) {
        int n = std::snprintf(buf, sizeof buf, "%lld,%.6g,%.6g,%s\n",
                              static_cast<long long>(r.trigger), static_cast<double>(r.emission_ps),
                              static_cast<double>(r.freq_ghz),
                              r.kind == PhotonKind::signal ? "signal" : "background");
        f.write(buf, n);
    }
}

PhotonStream read_stream_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("read_stream_csv: cannot open " + path);
    std::string line;
    if (!std::getline(f, line) || line.rfind("trigger,", 0) != 0)
        throw std::runtime_error("read_stream_csv: missing header in " + path);
    PhotonStream out;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        PhotonRecord r;
        long long trig = 0;
        double em = 0, fr = 0;
        char kindbuf[16] = {0};
        if (std::sscanf(line.c_str(), "%lld,%lf,%lf,%15s", &trig, &em, &fr, kindbuf) != 4)
            throw std::runtime_error("read_stream_csv: malformed row: " + line);
        r.trigger = trig;
        r.emission_ps = static_cast<float>(em);
        r.freq_ghz = static_cast<float>(fr);
        r.kind = (kindbuf[0] == 's') ? PhotonKind::signal : PhotonKind::background;
        out.records.push_back(r);
        out.n_triggers = std::max(out.n_triggers, static_cast<int64_t>(trig) + 1);
    }
    return out;
}

} // namespace spsim

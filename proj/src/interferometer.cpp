#include "spsim/interferometer.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "spsim/rng.hpp"

namespace spsim {

namespace {

using cplx = std::complex<double>;

// N12 = int a1*(nu) a2(nu) |t(nu)|^2 dnu for Lorentzian lines and etalon,
// by residues (poles u2+i*g2 and filter center + i*gf in the upper half-plane)
cplx etalon_cross_integral(double u1, double u2, double g1, double g2, double nuf, double gf) {
    double delta = u2 - u1;
    cplx p(u2 - nuf, g2);
    cplx term1 = gf * gf / (cplx(g1 + g2, -delta) * (p * p + gf * gf));
    cplx term2 = gf / (2.0 * cplx(gf + g1, -(nuf - u1)) * cplx(g2 - gf, nuf - u2));
    return 2.0 * kPi * (term1 + term2);
}

} // namespace

double etalon_pair_overlap(double u1, double u2, double homog1_fwhm, double homog2_fwhm,
                           double filter_center, double filter_fwhm) {
    double g1 = homog1_fwhm / 2.0, g2 = homog2_fwhm / 2.0, gf = filter_fwhm / 2.0;
    // nudge away from coincident poles (photon line degenerate with the filter)
    if (std::abs(g2 - gf) + std::abs(filter_center - u2) < 1e-9) g2 += 1e-7;
    if (std::abs(g1 - gf) + std::abs(filter_center - u1) < 1e-9) g1 += 1e-7;
    cplx n12 = etalon_cross_integral(u1, u2, g1, g2, filter_center, gf);
    double n11 = etalon_cross_integral(u1, u1, g1, g1, filter_center, gf).real();
    double n22 = etalon_cross_integral(u2, u2, g2, g2, filter_center, gf).real();
    return std::norm(n12) / (n11 * n22);
}

double mode_overlap(const PhotonRecord& p1, const PhotonRecord& p2,
                    const std::vector<FilterSpec>& chain, double eta_deph) {
    const FilterSpec* etalon = nullptr;
    for (const auto& f : chain)
        if (f.kind == FilterKind::lorentzian_etalon) etalon = &f;
    if (etalon && p1.filtered && p2.filtered)
        return eta_deph * etalon_pair_overlap(p1.freq_ghz, p2.freq_ghz, p1.homog_fwhm_ghz,
                                              p2.homog_fwhm_ghz, etalon->center_ghz,
                                              etalon->fwhm_ghz);
    double f1 = p1.effective_fwhm_ghz, f2 = p2.effective_fwhm_ghz;
    double dnu = static_cast<double>(p1.freq_ghz) - static_cast<double>(p2.freq_ghz);
    double mean = 0.5 * (f1 + f2);
    return eta_deph * f1 * f2 / (mean * mean + dnu * dnu);
}

HbtResult hbt(const PhotonStream& stream, const DetectorSpec detectors[2], uint64_t seed) {
    std::vector<DetectionEvent> events;
    events.reserve(stream.records.size());
    for (size_t i = 0; i < stream.records.size(); ++i) {
        const auto& r = stream.records[i];
        if (!r.passes_polarizer) continue;
        CounterRng rng(seed, RngKind::route, i);
        uint8_t ch = rng.bernoulli(0.5) ? 0 : 1;
        double t = static_cast<double>(r.trigger) * stream.repetition_period_ps + r.emission_ps;
        events.push_back({t, ch});
    }
    HbtResult out;
    out.duration_ps = stream.duration_ps;
    out.tags = detect(events, detectors, out.duration_ps, seed, &out.stats);
    return out;
}

HomResult hom(const PhotonStream& stream, const HomConfig& cfg, const DetectorSpec detectors[2],
              uint64_t seed) {
    cfg.validate();
    const double period = stream.repetition_period_ps;
    const double delay = cfg.path_delay_ps > 0.0 ? cfg.path_delay_ps : period;
    if (std::abs(delay - period) > 0.02 * period)
        throw std::invalid_argument("hom: path_delay must match the repetition period (2%)");

    const double R = cfg.splitter_ratio; // short-arm input: P(ch0)=R; long-arm input: P(ch0)=1-R
    const double T = 1.0 - R;
    HomResult out;
    std::vector<DetectionEvent> events;
    events.reserve(stream.records.size() + 16);

    struct SlotPhoton {
        size_t idx;
        double time;
        bool long_arm;
    };
    std::vector<SlotPhoton> longs_prev, shorts_cur, longs_cur;

    auto process_slot = [&](int64_t slot_index) {
        size_t n = longs_prev.size() + shorts_cur.size();
        if (n == 0) return;
        auto member = [&](size_t k) -> const SlotPhoton& {
            return k < longs_prev.size() ? longs_prev[k] : shorts_cur[k - longs_prev.size()];
        };
        CounterRng rng(seed, RngKind::interfere, static_cast<uint64_t>(slot_index));
        if (n == 2) {
            const SlotPhoton& a = member(0);
            const SlotPhoton& b = member(1);
            double I = 0.0;
            if (cfg.mode == HomMode::parallel)
                I = mode_overlap(stream.records[a.idx], stream.records[b.idx],
                                 stream.applied_filters, cfg.eta_deph);
            ++out.n_meetings;
            double p_coinc = R * R + T * T - 2.0 * R * T * I;
            if (rng.bernoulli(p_coinc)) {
                bool swap = rng.bernoulli(0.5);
                events.push_back({a.time, static_cast<uint8_t>(swap ? 1 : 0)});
                events.push_back({b.time, static_cast<uint8_t>(swap ? 0 : 1)});
            } else {
                ++out.n_coalesced;
                uint8_t c = rng.bernoulli(0.5) ? 0 : 1;
                events.push_back({a.time, c});
                events.push_back({b.time, c});
            }
        } else {
            for (size_t k = 0; k < n; ++k) {
                const SlotPhoton& p = member(k);
                double p0 = p.long_arm ? T : R;
                events.push_back({p.time, rng.bernoulli(p0) ? uint8_t{0} : uint8_t{1}});
            }
        }
    };

    int64_t cur = 0;
    auto advance_to = [&](int64_t trigger) {
        while (cur < trigger) {
            process_slot(cur);
            longs_prev = std::move(longs_cur);
            longs_cur.clear();
            shorts_cur.clear();
            ++cur;
        }
    };

    for (size_t i = 0; i < stream.records.size(); ++i) {
        const auto& r = stream.records[i];
        if (!r.passes_polarizer) continue;
        advance_to(r.trigger);
        CounterRng rng(seed, RngKind::route, i);
        bool long_arm = rng.bernoulli(0.5);
        double t = static_cast<double>(r.trigger) * period + r.emission_ps + (long_arm ? delay : 0.0);
        if (long_arm)
            longs_cur.push_back({i, t, true});
        else
            shorts_cur.push_back({i, t, false});
    }
    advance_to(stream.n_triggers); // last trigger's slot
    process_slot(cur);             // trailing long-arm slot

    out.duration_ps = stream.duration_ps + delay;
    out.tags = detect(events, detectors, out.duration_ps, seed, &out.stats);
    return out;
}

} // namespace spsim

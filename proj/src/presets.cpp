#include "spsim/presets.hpp"

#include <stdexcept>

namespace spsim {

NoiseModel noise_preset_super() {
    NoiseModel n;
    n.sd_sigma_ghz = 0.9509;
    n.sd_corr_time_ns = 350.0;
    n.jump_splitting_ghz = 6.19;
    n.jump_area_ratio = 0.39 / 1.39;
    n.jump_rate_per_ns = 1.0;
    n.charge_fluctuators = {{1.6, 0.5, 1.0}, {2.6, 0.5, 1.0}};
    n.blink_on_fraction = 0.67;
    n.blink_corr_time_ns = 15.0;
    n.multiphoton_prob = 0.0337;
    n.background_linewidth_ghz = 31.8;
    n.background_homog_fwhm_ghz = 2.0;
    return n;
}

NoiseModel noise_preset_la() {
    NoiseModel n;
    n.sd_sigma_ghz = 1.6506;
    n.sd_corr_time_ns = 470.0;
    n.jump_rate_per_ns = 0.0; // stable defect: no line jumps, single FPI peak
    n.charge_fluctuators = {{2.5, 0.25, 0.9}};
    n.blink_on_fraction = 0.94;
    n.blink_corr_time_ns = 15.0;
    n.multiphoton_prob = 0.0644;
    n.background_linewidth_ghz = 24.8;
    n.background_homog_fwhm_ghz = 2.0;
    return n;
}

FilterSpec etalon_preset() {
    FilterSpec f;
    f.kind = FilterKind::lorentzian_etalon;
    f.center_ghz = 0.0;
    f.fwhm_ghz = 0.8542;
    f.peak_transmission = 1.0;
    return f;
}

DriveConfig super_drive_at_operation_point() {
    DriveConfig d;
    PulseSpec p1;
    p1.detuning_nm = 4.0;
    p1.power_nw = 700.0; // 350 nW at 76 MHz, doubled with the repetition rate
    PulseSpec p2;
    p2.detuning_nm = 10.8; // 2.7 * Delta1
    p2.power_nw = 1400.0;
    d.pulses = {p1, p2};
    d.repetition_rate_mhz = 152.0;
    return d;
}

const std::vector<PaperPreset>& paper_presets() {
    static const std::vector<PaperPreset> presets = [] {
        std::vector<PaperPreset> v;
        {
            PaperPreset p;
            p.id = "super_unfiltered";
            p.is_super = true;
            p.n_triggers = 2'000'000;
            p.expected = {{"g2_zero", {0.076, 0.010}},
                          {"v_tpi", {0.104, 0.030}},
                          {"splitting_ghz", {6.19, 0.20}},
                          {"area_ratio", {0.39, 0.05}},
                          {"fwhm_ghz", {4.94, 0.20}}};
            v.push_back(p);
        }
        {
            PaperPreset p;
            p.id = "la_unfiltered";
            p.n_triggers = 2'000'000;
            p.expected = {{"g2_zero", {0.069, 0.010}},
                          {"v_tpi", {0.349, 0.030}},
                          {"fwhm_ghz", {4.83, 0.20}}};
            v.push_back(p);
        }
        {
            PaperPreset p;
            p.id = "super_filtered";
            p.is_super = true;
            p.filtered = true;
            p.n_triggers = 8'000'000;
            p.expected = {{"g2_zero", {0.026, 0.010}},
                          {"v_tpi", {0.508, 0.040}},
                          {"fwhm_ghz", {0.79, 0.05}}};
            v.push_back(p);
        }
        {
            PaperPreset p;
            p.id = "la_filtered";
            p.filtered = true;
            p.n_triggers = 8'000'000;
            p.expected = {{"g2_zero", {0.014, 0.008}},
                          {"v_tpi", {0.664, 0.030}},
                          {"fwhm_ghz", {0.80, 0.05}}};
            v.push_back(p);
        }
        return v;
    }();
    return presets;
}

const PaperPreset& paper_preset(const std::string& id) {
    for (const auto& p : paper_presets())
        if (p.id == id) return p;
    throw std::invalid_argument("unknown paper preset: " + id);
}

} // namespace spsim

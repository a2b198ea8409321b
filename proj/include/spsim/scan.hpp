#pragma once

#include <vector>

#include "spsim/dynamics.hpp"

namespace spsim {

struct ScanConfig {
    PulseSpec pulse1;          // fixed first laser
    PulseSpec pulse2_template; // duration/envelope for the scanned laser
    std::vector<double> detuning2_nm;
    std::vector<double> power2_nw;
    double repetition_rate_mhz = 76.0;
    double power_area_kappa = kDefaultPowerAreaKappa;
    PhononProxy phonon;
    SolveOptions solve;
    int threads = 0; // 0: SPSIM_THREADS env or hardware concurrency
};

struct ScanGrid {
    std::vector<double> detuning_axis_nm;
    std::vector<double> power_axis_nw;
    std::vector<double> occupation; // corrected, row-major [i_det*npow + i_pow], clamped to [0,1]
    std::vector<double> raw_both;   // uncorrected two-pulse occupation
    std::vector<uint8_t> valid;
    double single1 = 0.0;           // laser-1-only signal (coherent + phonon proxy)

    size_t index(size_t i_det, size_t i_pow) const { return i_det * power_axis_nw.size() + i_pow; }
    double at(size_t i_det, size_t i_pow) const { return occupation[index(i_det, i_pow)]; }
};

struct RidgeSummary {
    std::vector<double> ridge_detuning_nm; // per power row: argmax over detuning
    std::vector<double> ridge_occupation;
    double best_detuning_nm = 0.0;
    double best_power_nw = 0.0;
    double best_occupation = 0.0;
    int rows_in_band = 0; // rows whose ridge falls in [2.5, 3.0]*|Delta1|
};

// Two-color parameter scan over (Delta2, P2); each cell holds the two-pulse
// occupation minus both single-laser contributions (coherent leftover plus
// phonon proxy), clamped to [0,1]. Cells are independent; evaluation is
// cell-parallel with a deterministic merge by index.
ScanGrid scan_super(const EmitterParams& emitter, const ScanConfig& cfg);

RidgeSummary locate_ridge(const ScanGrid& grid, double delta1_nm);

struct DelayScanPoint {
    double delay_ps;
    double occupation;
};

// Occupation vs inter-pulse delay, averaged over the lasers' relative carrier
// phase (free-running sources).
std::vector<DelayScanPoint> delay_scan(const EmitterParams& emitter, const DriveConfig& drive,
                                       const std::vector<double>& delays_ps, int n_phases = 8,
                                       const SolveOptions& opts = {}, int threads = 0);

int resolve_thread_count(int requested);

} // namespace spsim

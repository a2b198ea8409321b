#include "spsim/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <thread>

namespace spsim {

int resolve_thread_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SPSIM_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace {

// run fn(i) for i in [0,n) on a small pool; results must be written by index
void parallel_for(size_t n, int threads, const std::function<void(size_t)>& fn) {
    threads = std::min<int>(threads, static_cast<int>(n));
    if (threads <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    for (auto& th : pool) th.join();
}

} // namespace

ScanGrid scan_super(const EmitterParams& emitter, const ScanConfig& cfg) {
    if (cfg.detuning2_nm.empty() || cfg.power2_nw.empty())
        throw std::domain_error("scan_super: axes must be nonempty");
    for (double d : cfg.detuning2_nm)
        if (d <= 0.0) throw std::domain_error("scan_super: Delta2 axis must be red-detuned (> 0 nm)");

    ScanGrid grid;
    grid.detuning_axis_nm = cfg.detuning2_nm;
    grid.power_axis_nw = cfg.power2_nw;
    const size_t nd = cfg.detuning2_nm.size(), np = cfg.power2_nw.size();
    grid.occupation.assign(nd * np, 0.0);
    grid.raw_both.assign(nd * np, 0.0);
    grid.valid.assign(nd * np, 0);

    // laser-1-only baseline (shared by every cell)
    DriveConfig d1;
    d1.pulses = {cfg.pulse1};
    d1.repetition_rate_mhz = cfg.repetition_rate_mhz;
    d1.power_area_kappa = cfg.power_area_kappa;
    double occ1 = solve_dynamics(emitter, d1, cfg.solve).final_occupation;
    grid.single1 = occ1 + cfg.phonon(cfg.pulse1.power_nw);

    int threads = resolve_thread_count(cfg.threads);
    parallel_for(nd * np, threads, [&](size_t idx) {
        size_t i = idx / np, j = idx % np;
        PulseSpec p2 = cfg.pulse2_template;
        p2.detuning_nm = cfg.detuning2_nm[i];
        p2.power_nw = cfg.power2_nw[j];
        p2.area_rad = 0.0;
        try {
            DriveConfig both;
            both.pulses = {cfg.pulse1, p2};
            both.repetition_rate_mhz = cfg.repetition_rate_mhz;
            both.power_area_kappa = cfg.power_area_kappa;
            double occ_both = solve_dynamics(emitter, both, cfg.solve).final_occupation;

            DriveConfig d2;
            d2.pulses = {p2};
            d2.repetition_rate_mhz = cfg.repetition_rate_mhz;
            d2.power_area_kappa = cfg.power_area_kappa;
            double occ2 = solve_dynamics(emitter, d2, cfg.solve).final_occupation;

            double single2 = occ2 + cfg.phonon(p2.power_nw);
            double corrected = occ_both - grid.single1 - single2;
            grid.raw_both[idx] = occ_both;
            grid.occupation[idx] = std::clamp(corrected, 0.0, 1.0);
            grid.valid[idx] = 1;
        } catch (const ConvergenceError&) {
            grid.valid[idx] = 0; // cell marked invalid, scan continues
        }
    });
    return grid;
}

RidgeSummary locate_ridge(const ScanGrid& grid, double delta1_nm) {
    RidgeSummary s;
    const size_t nd = grid.detuning_axis_nm.size(), np = grid.power_axis_nw.size();
    for (size_t j = 0; j < np; ++j) {
        size_t best = 0;
        double best_occ = -1.0;
        for (size_t i = 0; i < nd; ++i) {
            if (!grid.valid[grid.index(i, j)]) continue;
            double v = grid.at(i, j);
            if (v > best_occ) {
                best_occ = v;
                best = i;
            }
        }
        double rd = grid.detuning_axis_nm[best];
        s.ridge_detuning_nm.push_back(rd);
        s.ridge_occupation.push_back(best_occ);
        double ratio = rd / std::abs(delta1_nm);
        if (ratio >= 2.5 && ratio <= 3.0) ++s.rows_in_band;
        if (best_occ > s.best_occupation) {
            s.best_occupation = best_occ;
            s.best_detuning_nm = rd;
            s.best_power_nw = grid.power_axis_nw[j];
        }
    }
    return s;
}

std::vector<DelayScanPoint> delay_scan(const EmitterParams& emitter, const DriveConfig& drive,
                                       const std::vector<double>& delays_ps, int n_phases,
                                       const SolveOptions& opts, int threads) {
    if (drive.pulses.size() != 2) throw std::domain_error("delay_scan: two-pulse drive required");
    if (n_phases < 1) n_phases = 1;
    std::vector<DelayScanPoint> out(delays_ps.size());
    parallel_for(delays_ps.size(), resolve_thread_count(threads), [&](size_t i) {
        double acc = 0.0;
        for (int k = 0; k < n_phases; ++k) {
            DriveConfig d = drive;
            d.inter_pulse_delay_ps = delays_ps[i];
            d.pulses[1].phase_rad = kTwoPi * k / n_phases;
            acc += solve_dynamics(emitter, d, opts).final_occupation;
        }
        out[i] = {delays_ps[i], acc / n_phases};
    });
    return out;
}

} // namespace spsim

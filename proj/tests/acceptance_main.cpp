// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "spsim/budget.hpp"
#include "spsim/correlation.hpp"
#include "spsim/dynamics.hpp"
#include "spsim/histogram.hpp"
#include "spsim/interferometer.hpp"
#include "spsim/noise.hpp"
#include "spsim/photon_stream.hpp"
#include "spsim/presets.hpp"
#include "spsim/scenario.hpp"
#include "spsim/tags_io.hpp"

using namespace spsim;

namespace {

struct Checker {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << "[" << what << "] ";
        }
    }
    void near(double got, double expected, double tol, const std::string& what) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s=%.4g (expect %.4g +- %.3g)", what.c_str(), got,
                      expected, tol);
        detail << buf << "; ";
        if (!(std::abs(got - expected) <= tol)) {
            ok = false;
            detail << "FAIL<-; ";
        }
    }
};

DetectorSpec ideal_detector() {
    DetectorSpec d;
    d.efficiency = 1.0;
    d.dark_count_rate_hz = 0.0;
    d.timing_jitter_fwhm_ps = 0.0;
    d.dead_time_ps = 0.0;
    return d;
}

// ---- criterion 1: budget identities ----
Checker budget_identities() {
    Checker c;
    struct Point {
        double cr_raw, eta, g2, rep, cr_end, eta_end;
    };
    const Point pts[] = {
        {6.50, 0.768, 0.076, 152.0, 8.14, 0.0536},
        {7.36, 0.768, 0.069, 152.0, 9.25, 0.0609},
        {0.58, 0.768, 0.026, 152.0, 0.75, 0.0049},
        {1.12, 0.768, 0.014, 152.0, 1.45, 0.0095},
    };
    for (const auto& p : pts) {
        EfficiencyBudget b = efficiency_budget(p.cr_raw, p.eta, p.g2, p.rep);
        c.near(b.cr_end_mhz, p.cr_end, 0.01 * p.cr_end, "cr_end");
        c.near(b.eta_end, p.eta_end, 0.01 * p.eta_end, "eta_end");
    }
    return c;
}

// ---- criterion 2: SUPER resonance band ----
Checker resonance_band() {
    Checker c;
    json cfg; // defaults: Delta2 in [5,14] x P2 in [100,1400]
    json summary = run_scan(cfg, "");
    c.expect(summary["ridge_in_band"].get<bool>(), "ridge in 2.5-3.0 band");
    c.detail << "rows_in_band=" << summary["rows_with_ridge_in_band"] << "; ";

    EmitterParams em;
    DriveConfig op = super_drive_at_operation_point();
    double occ_op = solve_dynamics(em, op).final_occupation;
    DriveConfig d1 = op, d2 = op;
    d1.pulses = {op.pulses[0]};
    d2.pulses = {op.pulses[1]};
    PhononProxy phonon;
    double single1 = solve_dynamics(em, d1).final_occupation + phonon(op.pulses[0].power_nw);
    double single2 = solve_dynamics(em, d2).final_occupation + phonon(op.pulses[1].power_nw);
    char buf[128];
    std::snprintf(buf, sizeof buf, "occ_op=%.3f singles=(%.4f,%.4f); ", occ_op, single1, single2);
    c.detail << buf;
    c.expect(occ_op > 0.5, "occupation at op point > 0.5");
    c.expect(occ_op > 10.0 * single1, "op > 10x laser 1");
    c.expect(occ_op > 10.0 * single2, "op > 10x laser 2");
    return c;
}

// ---- criterion 3: dynamics oracles ----
Checker dynamics_oracles() {
    Checker c;
    EmitterParams em;
    DriveConfig d;
    PulseSpec p;
    p.area_rad = kPi;
    d.pulses = {p};
    auto pi_pulse = solve_dynamics(em, d);
    c.near(pi_pulse.final_occupation, 1.0, 1e-6, "pi-pulse occupation");

    auto strong = solve_dynamics(em, super_drive_at_operation_point());
    c.expect(strong.max_norm_residual < 1e-9, "norm residual < 1e-9");
    c.detail << "norm_res=" << strong.max_norm_residual << "; ";

    SolveOptions opts;
    opts.verify_convergence = true;
    auto conv = solve_dynamics(em, super_drive_at_operation_point(), opts);
    c.expect(conv.convergence_residual < 1e-4, "step-halving residual < 1e-4");
    c.detail << "halving_res=" << conv.convergence_residual << "; ";
    return c;
}

// ---- criterion 4: line-shape pipeline ----
Checker line_shapes() {
    Checker c;
    {
        Scenario s = scenario_from_preset("super_unfiltered", Instrument::fpi, 11, 2'500'000);
        json r = run_scenario(s, "").report;
        c.near(r["splitting_ghz"].get<double>(), 6.19, 0.20, "super splitting");
        c.near(r["area_ratio"].get<double>(), 0.39, 0.05, "super area ratio");
        c.near(r["fwhm_ghz"].get<double>(), 4.94, 0.20, "super fwhm");
    }
    {
        Scenario s = scenario_from_preset("la_unfiltered", Instrument::fpi, 12, 2'500'000);
        json r = run_scenario(s, "").report;
        c.near(r["fwhm_ghz"].get<double>(), 4.83, 0.20, "la fwhm");
    }
    {
        Scenario s = scenario_from_preset("super_filtered", Instrument::fpi, 13, 3'000'000);
        json r = run_scenario(s, "").report;
        c.near(r["fwhm_ghz"].get<double>(), 0.79, 0.05, "super filtered fwhm");
    }
    {
        Scenario s = scenario_from_preset("la_filtered", Instrument::fpi, 14, 3'000'000);
        json r = run_scenario(s, "").report;
        c.near(r["fwhm_ghz"].get<double>(), 0.80, 0.05, "la filtered fwhm");
    }
    return c;
}

// ---- criterion 5: correlation estimators ----
Checker correlations() {
    Checker c;
    struct Row {
        const char* preset;
        double expect, tol;
    };
    const Row rows[] = {{"super_unfiltered", 0.076, 0.010},
                        {"la_unfiltered", 0.069, 0.010},
                        {"super_filtered", 0.026, 0.010},
                        {"la_filtered", 0.014, 0.008}};
    for (const auto& row : rows) {
        Scenario s = scenario_from_preset(row.preset, Instrument::hbt, 21);
        json r = run_scenario(s, "").report;
        c.near(r["g2_zero"].get<double>(), row.expect, row.tol, std::string("g2 ") + row.preset);
    }
    // Poisson-source control vs the enumeration oracle (= exactly 1)
    {
        const double mu = 0.6;
        PhotonStream s;
        s.n_triggers = 600'000;
        s.repetition_period_ps = repetition_period_ps(152.0);
        s.duration_ps = s.n_triggers * s.repetition_period_ps;
        for (int64_t i = 0; i < s.n_triggers; ++i) {
            CounterRng rng(5, RngKind::emit, static_cast<uint64_t>(i) + 1);
            int n = 0;
            double l = std::exp(-mu), p = rng.uniform();
            while (p > l) {
                ++n;
                p *= rng.uniform();
            }
            for (int k = 0; k < n; ++k) {
                PhotonRecord rec;
                rec.trigger = i;
                rec.emission_ps = static_cast<float>(rng.exponential(500.0));
                s.records.push_back(rec);
            }
        }
        double en = 0.0, enn1 = 0.0, pk = std::exp(-mu);
        for (int k = 0; k <= 40; ++k) {
            en += k * pk;
            enn1 += k * (k - 1.0) * pk;
            pk *= mu / (k + 1);
        }
        double oracle = enn1 / (en * en);
        DetectorSpec det[2] = {ideal_detector(), ideal_detector()};
        HbtResult r = hbt(s, det, 6);
        Histogram h = build_correlation(r.tags[0], r.tags[1], 100.0,
                                        25 * s.repetition_period_ps, r.duration_ps);
        CorrelationResult g2 = g2_from_histogram(h, s.repetition_period_ps);
        c.near(g2.g2_zero, oracle, 0.02, "poisson control g2");
    }
    // ideal source: zero within the dark-count floor
    {
        EmitterParams em;
        em.polarization_degree = 1.0;
        NoiseModel noise;
        StreamConfig cfg;
        cfg.n_triggers = 1'000'000;
        cfg.preparation_probability = 1.0;
        cfg.rng_seed = 7;
        PhotonStream s = generate_stream(em, noise, cfg);
        DetectorSpec det[2]; // defaults: darks 100 Hz, jitter, dead time
        HbtResult r = hbt(s, det, 8);
        Histogram h = build_correlation(r.tags[0], r.tags[1], 100.0,
                                        25 * s.repetition_period_ps, r.duration_ps);
        G2Options opts;
        opts.dark_rate_hz[0] = det[0].dark_count_rate_hz;
        opts.dark_rate_hz[1] = det[1].dark_count_rate_hz;
        CorrelationResult g2 = g2_from_histogram(h, s.repetition_period_ps, opts);
        c.near(g2.g2_zero, 0.0, 0.003, "ideal source g2");
    }
    return c;
}

// ---- criterion 6: HOM suite ----
Checker hom_suite() {
    Checker c;
    // identical-photon control
    {
        PhotonStream s;
        s.n_triggers = 250'000;
        s.repetition_period_ps = repetition_period_ps(152.0);
        s.duration_ps = s.n_triggers * s.repetition_period_ps;
        for (int64_t i = 0; i < s.n_triggers; ++i) {
            CounterRng rng(31, RngKind::emit, static_cast<uint64_t>(i) + 1);
            PhotonRecord r;
            r.trigger = i;
            r.emission_ps = static_cast<float>(rng.exponential(500.0));
            s.records.push_back(r);
        }
        DetectorSpec det[2] = {ideal_detector(), ideal_detector()};
        HomConfig cfg;
        HomResult rp = hom(s, cfg, det, 32);
        cfg.mode = HomMode::orthogonal;
        HomResult ro = hom(s, cfg, det, 33);
        double T = s.repetition_period_ps;
        Histogram hp = build_correlation(rp.tags[0], rp.tags[1], 100.0, 25 * T, rp.duration_ps);
        Histogram ho = build_correlation(ro.tags[0], ro.tags[1], 100.0, 25 * T, ro.duration_ps);
        VisibilityResult v = tpi_visibility(hp, ho, T);
        c.near(v.visibility, 1.0, 0.01, "identical-photon V");
        // distinguishable central area vs brute-force enumeration: 1/8 per trigger
        double a0 = window_area(ho, T, 0);
        c.near(a0 / static_cast<double>(s.n_triggers), 0.125, 0.125 * 0.01,
               "distinguishable central area");
    }
    struct Row {
        const char* preset;
        double expect, tol;
    };
    const Row rows[] = {{"super_unfiltered", 0.104, 0.030},
                        {"la_unfiltered", 0.349, 0.030},
                        {"super_filtered", 0.508, 0.040},
                        {"la_filtered", 0.664, 0.030}};
    for (const auto& row : rows) {
        Scenario s = scenario_from_preset(row.preset, Instrument::hom, 41);
        json r = run_scenario(s, "").report;
        c.near(r["v_tpi"].get<double>(), row.expect, row.tol, std::string("V ") + row.preset);
    }
    return c;
}

// ---- criterion 7: noise-process statistics ----
Checker noise_statistics() {
    Checker c;
    {
        const double sigma = 2.0, tau = 10.0;
        double x = 0.0, s2 = 0.0;
        const int n = 1'000'000;
        for (int i = 0; i < n; ++i) {
            CounterRng rng(51, RngKind::ou, static_cast<uint64_t>(i) + 1);
            x = ou_step(x, 1.0, sigma, tau, rng);
            s2 += x * x;
        }
        c.near(std::sqrt(s2 / n), sigma, 0.01 * sigma, "OU stationary std");
    }
    {
        const double occ = 0.39 / 1.39;
        TwoStateProcess p(occ, 1.0);
        CounterRng init(52, RngKind::telegraph0, 0);
        p.init_stationary(init);
        int64_t minority = 0;
        const int n = 1'000'000;
        for (int i = 0; i < n; ++i) {
            CounterRng rng(52, RngKind::telegraph0, static_cast<uint64_t>(i) + 1);
            p.step(6.5789, rng);
            minority += p.state();
        }
        c.near(static_cast<double>(minority) / n, occ, 0.003, "telegraph minority fraction");
    }
    {
        // blinking bunching envelope: fit exp decay over side peaks 1..8
        EmitterParams em;
        em.polarization_degree = 1.0;
        NoiseModel noise;
        noise.blink_on_fraction = 0.5;
        noise.blink_corr_time_ns = 50.0;
        StreamConfig cfg;
        cfg.n_triggers = 3'000'000;
        cfg.preparation_probability = 0.9;
        cfg.rng_seed = 53;
        PhotonStream s = generate_stream(em, noise, cfg);
        DetectorSpec det[2] = {ideal_detector(), ideal_detector()};
        HbtResult r = hbt(s, det, 54);
        double T = s.repetition_period_ps;
        Histogram h = build_correlation(r.tags[0], r.tags[1], 200.0, 42 * T, r.duration_ps);
        // far level from peaks 30..40
        double far = 0.0;
        int nfar = 0;
        for (int k = 30; k <= 40; ++k) {
            far += window_area(h, T, k) + window_area(h, T, -k);
            nfar += 2;
        }
        far /= nfar;
        // linear regression of ln(area/far - 1) vs peak index
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int m = 0;
        for (int k = 1; k <= 8; ++k) {
            double a = 0.5 * (window_area(h, T, k) + window_area(h, T, -k));
            double y = a / far - 1.0;
            if (y <= 0.0) continue;
            sx += k;
            sy += std::log(y);
            sxx += k * k;
            sxy += k * std::log(y);
            ++m;
        }
        double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
        double tau_fit_ns = -T * 1e-3 / slope;
        c.near(tau_fit_ns, noise.blink_corr_time_ns, 0.10 * noise.blink_corr_time_ns,
               "blink envelope decay");
    }
    return c;
}

// ---- criterion 8: round trips and determinism ----
Checker determinism() {
    Checker c;
    {
        CounterRng rng(61, RngKind::emit, 0);
        std::vector<std::vector<TimeTag>> tags(2);
        int64_t t = 0;
        for (int i = 0; i < 20000; ++i) {
            t += static_cast<int64_t>(rng.exponential(3000.0)) + 1;
            tags[rng.bernoulli(0.5) ? 0 : 1].push_back(
                {t, static_cast<uint8_t>(rng.bernoulli(0.5))});
        }
        write_tags(tags, "acc_tags.bin", TagFormat::binary9);
        IngestResult in = ingest_tags("acc_tags.bin", TagFormat::binary9);
        write_tags(in.channels, "acc_tags2.bin", TagFormat::binary9);
        std::ifstream f1("acc_tags.bin", std::ios::binary), f2("acc_tags2.bin", std::ios::binary);
        std::string s1((std::istreambuf_iterator<char>(f1)), std::istreambuf_iterator<char>());
        std::string s2((std::istreambuf_iterator<char>(f2)), std::istreambuf_iterator<char>());
        c.expect(!s1.empty() && s1 == s2, "binary9 round trip bit-exact");
        std::remove("acc_tags.bin");
        std::remove("acc_tags2.bin");
    }
    {
        VerifyReport a = verify_paper(1, "", 0.0, 200'000);
        VerifyReport b = verify_paper(1, "", 0.0, 200'000);
        c.expect(a.markdown == b.markdown, "verify-paper byte-identical");
        c.expect(a.as_json.dump() == b.as_json.dump(), "verify-paper json identical");
    }
    return c;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Checker()> run;
    };
    const std::vector<Criterion> criteria = {
        {"1. efficiency-budget identities", budget_identities},
        {"2. two-color resonance band", resonance_band},
        {"3. dynamics oracles", dynamics_oracles},
        {"4. line-shape pipeline", line_shapes},
        {"5. correlation estimators", correlations},
        {"6. HOM suite", hom_suite},
        {"7. noise-process statistics", noise_statistics},
        {"8. round-trip and determinism", determinism},
    };
    int failures = 0;
    for (const auto& crit : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Checker c;
        try {
            c = crit.run();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail << "exception: " << e.what();
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] %s (%.1f s)\n    %s\n", c.ok ? "PASS" : "FAIL", crit.name, dt,
                    c.detail.str().c_str());
        std::fflush(stdout);
        if (!c.ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all criteria passed\n");
    return failures == 0 ? 0 : 1;
}

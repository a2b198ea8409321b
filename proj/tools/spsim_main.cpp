#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "spsim/budget.hpp"
#include "spsim/scenario.hpp"
#include "spsim/tags_io.hpp"
#include "spsim/version.hpp"

using namespace spsim;

namespace {

json load_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return json::parse(f);
}

Scenario scenario_from_options(const std::string& config, const std::string& preset,
                               Instrument instrument, uint64_t seed, int64_t triggers) {
    if (!config.empty()) {
        Scenario s = load_scenario(config);
        s.instrument = instrument;
        if (seed) s.seed = seed;
        if (triggers > 0) s.n_triggers = triggers;
        return s;
    }
    if (!preset.empty()) return scenario_from_preset(preset, instrument, seed ? seed : 1, triggers);
    throw CLI::ValidationError("need --config or --preset");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spsim: triggered single-photon source simulator and analysis toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string config, preset, out_dir = "out", format = "csv", in_file, in_format = "binary9";
    uint64_t seed = 0;
    int64_t triggers = 0;
    double cr_raw = 0.0, eta_det = 0.768, g2v = 0.0, rep = 152.0;
    double etalon_override = 0.0;

    auto add_common = [&](CLI::App* cmd, bool needs_source) {
        cmd->add_option("--config", config, "scenario JSON file");
        if (needs_source) cmd->add_option("--preset", preset,
                                          "paper preset id (super_unfiltered, la_unfiltered, "
                                          "super_filtered, la_filtered)");
        cmd->add_option("--seed", seed, "RNG seed");
        cmd->add_option("--out", out_dir, "output directory");
        cmd->add_option("--format", format, "tag output format: csv or binary")
            ->check(CLI::IsMember({"csv", "binary", "json"}));
        cmd->add_option("--triggers", triggers, "override trigger count");
    };

    auto* c_scan = app.add_subcommand("scan", "two-color excitation parameter scan");
    c_scan->add_option("--config", config, "scan JSON config");
    c_scan->add_option("--out", out_dir, "output directory");

    auto* c_sim = app.add_subcommand("simulate", "generate a photon stream and write it to CSV");
    add_common(c_sim, true);

    auto* c_hbt = app.add_subcommand("hbt", "autocorrelation measurement -> g2(0)");
    add_common(c_hbt, true);
    auto* c_hom = app.add_subcommand("hom", "two-photon interference -> V_TPI");
    add_common(c_hom, true);
    auto* c_fpi = app.add_subcommand("fpi", "scanning FPI spectrum -> line fit");
    add_common(c_fpi, true);

    auto* c_fit = app.add_subcommand("fit", "fit a spectrum CSV");
    std::string spectrum_file;
    int fit_peaks = 1;
    double lorentz_fixed = 0.32;
    c_fit->add_option("spectrum", spectrum_file, "spectrum CSV (freq_ghz,counts)")->required();
    c_fit->add_option("--peaks", fit_peaks, "number of Voigt peaks (1 or 2)");
    c_fit->add_option("--lorentz-ghz", lorentz_fixed, "fixed Lorentzian width; <=0 frees it");

    auto* c_budget = app.add_subcommand("budget", "application-ready rate bookkeeping");
    c_budget->add_option("--cr-raw-mhz", cr_raw, "detected count rate (MHz)")->required();
    c_budget->add_option("--eta-detection", eta_det, "detection efficiency");
    c_budget->add_option("--g2", g2v, "g2(0)")->required();
    c_budget->add_option("--rep-rate-mhz", rep, "repetition rate (MHz)");

    auto* c_verify = app.add_subcommand("verify-paper", "run all paper presets against expectations");
    c_verify->add_option("--seed", seed, "RNG seed");
    c_verify->add_option("--out", out_dir, "output directory");
    c_verify->add_option("--etalon-fwhm-ghz", etalon_override,
                         "override the etalon width (negative control)");

    auto* c_ingest = app.add_subcommand("ingest", "read and validate a time-tag file");
    c_ingest->add_option("file", in_file, "tag file")->required();
    c_ingest->add_option("--format", in_format, "binary9 or csv")
        ->check(CLI::IsMember({"binary9", "csv"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_scan) {
            json cfg = config.empty() ? json::object() : load_json_file(config);
            json summary = run_scan(cfg, out_dir);
            std::cout << summary.dump(2) << "\n";
            return 0;
        }
        if (*c_sim) {
            Scenario s = scenario_from_options(config, preset, Instrument::hbt, seed, triggers);
            StreamConfig sc;
            sc.n_triggers = s.n_triggers;
            sc.repetition_rate_mhz = s.repetition_rate_mhz;
            sc.preparation_probability =
                s.drive ? solve_dynamics(s.emitter, *s.drive).final_occupation
                        : s.preparation_probability;
            sc.rng_seed = s.seed;
            PhotonStream stream = generate_stream(s.emitter, s.noise, sc);
            for (size_t i = 0; i < s.chain.size(); ++i)
                apply_filter(stream, s.chain[i], s.seed + 11 + i);
            std::filesystem::create_directories(out_dir);
            std::string file = out_dir + "/" + s.name + "_stream.csv";
            write_stream_csv(stream, file);
            std::cout << "wrote " << stream.records.size() << " photons to " << file << "\n";
            return 0;
        }
        if (*c_hbt || *c_hom || *c_fpi) {
            Instrument inst = *c_hbt ? Instrument::hbt : (*c_hom ? Instrument::hom : Instrument::fpi);
            Scenario s = scenario_from_options(config, preset, inst, seed, triggers);
            ScenarioReport r = run_scenario(s, out_dir, format);
            std::cout << r.report.dump(2) << "\n";
            return 0;
        }
        if (*c_fit) {
            Spectrum spec = read_spectrum_csv(spectrum_file);
            VoigtFitOptions fo;
            fo.lorentz_fixed_ghz = lorentz_fixed;
            VoigtFitResult fit = fit_voigt(spec, fit_peaks, fo);
            json rep = {{"fwhm_ghz", fit.common_fwhm_ghz},
                        {"fwhm_err_ghz", fit.common_fwhm_err_ghz},
                        {"gaussian_fwhm_ghz", fit.gaussian_fwhm_ghz},
                        {"lorentz_component_ghz", fit.lorentz_component_ghz},
                        {"center_ghz", fit.center_ghz},
                        {"splitting_ghz", fit.splitting_ghz},
                        {"area_ratio", fit.area_ratio},
                        {"residual_chi2", fit.residual_chi2}};
            std::cout << rep.dump(2) << "\n";
            return 0;
        }
        if (*c_budget) {
            EfficiencyBudget b = efficiency_budget(cr_raw, eta_det, g2v, rep);
            json rep = {{"cr_raw_mhz", b.cr_raw_mhz},
                        {"eta_detection", b.eta_detection},
                        {"g2_zero", b.g2_zero},
                        {"rep_rate_mhz", b.rep_rate_mhz},
                        {"cr_end_mhz", b.cr_end_mhz},
                        {"eta_end", b.eta_end}};
            std::cout << rep.dump(2) << "\n";
            return 0;
        }
        if (*c_verify) {
            VerifyReport vr = verify_paper(seed ? seed : 1, out_dir, etalon_override);
            std::cout << vr.markdown;
            std::cout << (vr.all_pass ? "all rows pass\n" : "FAILING ROWS PRESENT\n");
            return vr.all_pass ? 0 : 1;
        }
        if (*c_ingest) {
            IngestResult r =
                ingest_tags(in_file, in_format == "csv" ? TagFormat::csv : TagFormat::binary9);
            json rep = {{"n_tags", r.n_tags},
                        {"malformed_count", r.malformed_count},
                        {"sorted_warning", r.sorted_warning},
                        {"channels", r.channels.size()}};
            json per_ch = json::array();
            for (const auto& c : r.channels) per_ch.push_back(c.size());
            rep["tags_per_channel"] = per_ch;
            std::cout << rep.dump(2) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

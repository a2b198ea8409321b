#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spsim/correlation.hpp"
#include "spsim/detector.hpp"
#include "spsim/drive.hpp"
#include "spsim/emitter.hpp"
#include "spsim/filter.hpp"
#include "spsim/interferometer.hpp"
#include "spsim/noise.hpp"
#include "spsim/presets.hpp"
#include "spsim/scan.hpp"
#include "spsim/voigt_fit.hpp"

namespace spsim {

using json = nlohmann::ordered_json;

enum class Instrument { hbt, hom, fpi };

struct FpiConfig {
    double f_min_ghz = -12.0;
    double f_max_ghz = 16.0;
    int n_bins = 560;
    double instrument_fwhm_ghz = kFpiInstrumentFwhmGhz;
};

struct AnalysisConfig {
    double bin_width_ps = 50.0;
    int span_periods = 25;
    int side_lo = 10;
    int side_hi = 20;
    int fit_n_peaks = 1;
    double lorentz_fixed_ghz = 0.32; // <=0: free
    bool fit_baseline = true;
};

struct Scenario {
    std::string name = "scenario";
    EmitterParams emitter;
    std::optional<DriveConfig> drive;       // excitation via the solver...
    double preparation_probability = -1.0;  // ...or set directly (>= 0)
    NoiseModel noise;
    std::vector<FilterSpec> chain;
    Instrument instrument = Instrument::hbt;
    HomConfig hom;
    FpiConfig fpi;
    DetectorSpec detectors[2];
    AnalysisConfig analysis;
    int64_t n_triggers = 2'000'000;
    double repetition_rate_mhz = 152.0;
    uint64_t seed = 1;

    void validate() const;
};

Scenario scenario_from_json(const json& j);
Scenario load_scenario(const std::string& path);

// Paper-preset scenario for one instrument; n_triggers <= 0 keeps the preset default.
Scenario scenario_from_preset(const std::string& preset_id, Instrument instrument,
                              uint64_t seed = 1, int64_t n_triggers = 0);

struct ScenarioReport {
    json report;                       // CLI-facing JSON
    std::vector<std::string> artifacts; // files written
};

// Run one scenario end to end and write the report plus intermediate
// CSV artifacts into out_dir ("" disables file output).
ScenarioReport run_scenario(const Scenario& s, const std::string& out_dir,
                            const std::string& format = "csv");

// Fig.-2b style scan driven by a JSON config (or defaults); writes the scan
// CSV and emits a summary locating the ridge.
json run_scan(const json& config, const std::string& out_dir);

struct VerifyRow {
    std::string preset;
    std::string metric;
    double expected;
    double tolerance;
    double got;
    bool pass;
};

struct VerifyReport {
    std::vector<VerifyRow> rows;
    bool all_pass = true;
    std::string markdown;
    json as_json;
};

// Regression harness over the paper operating points (fixed seeds).
// n_triggers_override > 0 shrinks every run (determinism/negative controls).
VerifyReport verify_paper(uint64_t seed = 1, const std::string& out_dir = "",
                          double etalon_fwhm_override_ghz = 0.0,
                          int64_t n_triggers_override = 0);

} // namespace spsim

#include <doctest.h>

#include <cmath>

#include "spsim/filter.hpp"
#include "spsim/photon_stream.hpp"

using namespace spsim;

TEST_CASE("noiseless unit-efficiency stream: one photon per trigger at zero offset") {
    EmitterParams em;
    em.polarization_degree = 1.0;
    NoiseModel noise; // all off
    StreamConfig cfg;
    cfg.n_triggers = 1000;
    cfg.preparation_probability = 1.0;
    cfg.rng_seed = 5;
    PhotonStream s = generate_stream(em, noise, cfg);
    CHECK(s.records.size() == 1000);
    for (const auto& r : s.records) {
        CHECK(r.freq_ghz == 0.0f);
        CHECK(r.kind == PhotonKind::signal);
        CHECK(r.passes_polarizer);
        CHECK(r.emission_ps >= 0.0f);
    }
}

TEST_CASE("blinking halves the photon count") {
    EmitterParams em;
    em.polarization_degree = 1.0;
    NoiseModel noise;
    noise.blink_on_fraction = 0.5;
    noise.blink_corr_time_ns = 658.0; // 100 periods: long, still mixes over the run
    StreamConfig cfg;
    cfg.n_triggers = 1'000'000;
    cfg.preparation_probability = 1.0;
    cfg.rng_seed = 6;
    PhotonStream s = generate_stream(em, noise, cfg);
    double frac = static_cast<double>(s.records.size()) / cfg.n_triggers;
    CHECK(frac == doctest::Approx(0.5).epsilon(0.03));
}

TEST_CASE("mean emission time equals T1 within 1% on 1e6 samples") {
    EmitterParams em;
    em.polarization_degree = 1.0;
    NoiseModel noise;
    StreamConfig cfg;
    cfg.n_triggers = 1'000'000;
    cfg.preparation_probability = 1.0;
    cfg.rng_seed = 7;
    PhotonStream s = generate_stream(em, noise, cfg);
    double sum = 0.0;
    for (const auto& r : s.records) sum += r.emission_ps;
    CHECK(sum / s.records.size() == doctest::Approx(em.lifetime_t1_ps).epsilon(0.01));
}

TEST_CASE("identical seeds give identical streams") {
    EmitterParams em;
    NoiseModel noise;
    noise.sd_sigma_ghz = 1.5;
    noise.sd_corr_time_ns = 100.0;
    noise.jump_rate_per_ns = 0.5;
    noise.multiphoton_prob = 0.05;
    StreamConfig cfg;
    cfg.n_triggers = 20000;
    cfg.preparation_probability = 0.8;
    cfg.rng_seed = 1234;
    PhotonStream a = generate_stream(em, noise, cfg);
    PhotonStream b = generate_stream(em, noise, cfg);
    REQUIRE(a.records.size() == b.records.size());
    for (size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].trigger == b.records[i].trigger);
        CHECK(a.records[i].emission_ps == b.records[i].emission_ps);
        CHECK(a.records[i].freq_ghz == b.records[i].freq_ghz);
    }
    cfg.rng_seed = 1235;
    PhotonStream c = generate_stream(em, noise, cfg);
    bool any_diff = c.records.size() != a.records.size();
    for (size_t i = 0; !any_diff && i < std::min(a.records.size(), c.records.size()); ++i)
        any_diff = a.records[i].emission_ps != c.records[i].emission_ps;
    CHECK(any_diff);
}

TEST_CASE("multiphoton adds independent background photons") {
    EmitterParams em;
    em.polarization_degree = 1.0;
    NoiseModel noise;
    noise.multiphoton_prob = 0.07;
    noise.background_linewidth_ghz = 30.0;
    StreamConfig cfg;
    cfg.n_triggers = 500'000;
    cfg.preparation_probability = 1.0;
    cfg.rng_seed = 9;
    PhotonStream s = generate_stream(em, noise, cfg);
    int64_t bg = s.count(PhotonKind::background);
    CHECK(static_cast<double>(bg) / cfg.n_triggers == doctest::Approx(0.07).epsilon(0.05));
    // background is spectrally broad
    double s2 = 0.0;
    for (const auto& r : s.records)
        if (r.kind == PhotonKind::background) s2 += r.freq_ghz * r.freq_ghz;
    double std_bg = std::sqrt(s2 / bg);
    CHECK(std_bg == doctest::Approx(fwhm_to_sigma(30.0)).epsilon(0.05));
}

TEST_CASE("stream csv round trip") {
    EmitterParams em;
    NoiseModel noise;
    noise.sd_sigma_ghz = 1.0;
    StreamConfig cfg;
    cfg.n_triggers = 500;
    cfg.preparation_probability = 0.9;
    cfg.rng_seed = 3;
    PhotonStream s = generate_stream(em, noise, cfg);
    std::string path = "stream_roundtrip_test.csv";
    write_stream_csv(s, path);
    PhotonStream r = read_stream_csv(path);
    REQUIRE(r.records.size() == s.records.size());
    for (size_t i = 0; i < s.records.size(); ++i) {
        CHECK(r.records[i].trigger == s.records[i].trigger);
        CHECK(r.records[i].kind == s.records[i].kind);
        CHECK(r.records[i].freq_ghz ==
              doctest::Approx(s.records[i].freq_ghz).epsilon(1e-5));
    }
    std::remove(path.c_str());
}

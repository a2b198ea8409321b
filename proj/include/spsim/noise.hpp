#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "spsim/rng.hpp"

namespace spsim {

// Exact Ornstein-Uhlenbeck update over a step dt; stationary N(0, sigma^2).
inline double ou_step(double current, double dt, double sigma, double tau, CounterRng& rng) {
    if (tau <= 0.0) throw std::domain_error("ou_step: tau must be > 0");
    if (dt < 0.0) throw std::domain_error("ou_step: dt must be >= 0");
    double rho = std::exp(-dt / tau);
    return current * rho + sigma * std::sqrt(1.0 - rho * rho) * rng.normal();
}

// Two-state Markov process with total relaxation rate `rate` and stationary
// probability `occupancy` of state 1. Stepped by uniformization: a resample
// event happens with prob 1-exp(-rate*dt), the new state is drawn from the
// stationary distribution. Equivalent to the asymmetric telegraph with
// r01 = rate*occupancy, r10 = rate*(1-occupancy).
class TwoStateProcess {
  public:
    TwoStateProcess(double occupancy, double rate_per_ns)
        : occupancy_(occupancy), rate_(rate_per_ns) {
        if (occupancy < 0.0 || occupancy > 1.0)
            throw std::domain_error("TwoStateProcess: occupancy must be in [0,1]");
        if (rate_per_ns < 0.0) throw std::domain_error("TwoStateProcess: rate must be >= 0");
    }

    void init_stationary(CounterRng& rng) { state_ = rng.bernoulli(occupancy_) ? 1 : 0; }

    void step(double dt_ns, CounterRng& rng) {
        if (rate_ <= 0.0) return;
        double p_resample = -std::expm1(-rate_ * dt_ns);
        bool resample = rng.bernoulli(p_resample);
        bool draw = rng.bernoulli(occupancy_); // always drawn: stable draw alignment
        if (resample) state_ = draw ? 1 : 0;
    }

    int state() const { return state_; }
    double occupancy() const { return occupancy_; }

  private:
    double occupancy_;
    double rate_;
    int state_ = 0;
};

// One discrete spectral fluctuator: the line sits at +splitting_ghz while the
// defect is in its minority state.
struct TelegraphSpec {
    double splitting_ghz = 0.0;
    double occupancy = 0.0;   // stationary fraction in the shifted state
    double rate_per_ns = 0.0; // total relaxation rate

    void validate() const {
        if (splitting_ghz < 0.0) throw std::domain_error("TelegraphSpec: splitting must be >= 0");
        if (occupancy < 0.0 || occupancy > 1.0)
            throw std::domain_error("TelegraphSpec: occupancy must be in [0,1]");
    }
};

struct NoiseModel {
    // spectral diffusion (OU)
    double sd_sigma_ghz = 0.0;
    double sd_corr_time_ns = 100.0;
    // primary line-jump process (spectral doublet); rate 0 disables
    double jump_splitting_ghz = 6.19;
    double jump_area_ratio = 0.39 / 1.39; // minority-state occupancy
    double jump_rate_per_ns = 0.0;
    // additional sub-line charge fluctuators
    std::vector<TelegraphSpec> charge_fluctuators;
    // blinking
    double blink_on_fraction = 1.0;
    double blink_corr_time_ns = 15.0;
    // multiphoton background
    double multiphoton_prob = 0.0;
    double background_linewidth_ghz = 25.0;  // ensemble center spread (FWHM)
    double background_homog_fwhm_ghz = 2.0;  // per-photon homogeneous width

    void validate() const {
        if (sd_sigma_ghz < 0.0) throw std::domain_error("NoiseModel: sd_sigma must be >= 0");
        if (sd_corr_time_ns <= 0.0) throw std::domain_error("NoiseModel: sd_corr_time must be > 0");
        if (jump_splitting_ghz < 0.0) throw std::domain_error("NoiseModel: jump_splitting must be >= 0");
        if (jump_area_ratio < 0.0 || jump_area_ratio > 1.0)
            throw std::domain_error("NoiseModel: jump_area_ratio must be in [0,1]");
        if (blink_on_fraction < 0.0 || blink_on_fraction > 1.0)
            throw std::domain_error("NoiseModel: blink_on_fraction must be in [0,1]");
        if (blink_corr_time_ns <= 0.0) throw std::domain_error("NoiseModel: blink_corr_time must be > 0");
        if (multiphoton_prob < 0.0 || multiphoton_prob > 1.0)
            throw std::domain_error("NoiseModel: multiphoton_prob must be in [0,1]");
        for (const auto& f : charge_fluctuators) f.validate();
    }

    // all telegraph processes, primary jumps first
    std::vector<TelegraphSpec> all_fluctuators() const {
        std::vector<TelegraphSpec> v;
        if (jump_rate_per_ns > 0.0)
            v.push_back({jump_splitting_ghz, jump_area_ratio, jump_rate_per_ns});
        for (const auto& f : charge_fluctuators) v.push_back(f);
        return v;
    }
};

} // namespace spsim

#pragma once

#include <vector>

#include "spsim/detector.hpp"
#include "spsim/filter.hpp"
#include "spsim/photon_stream.hpp"

namespace spsim {

// Pairwise indistinguishability of two photons given the filter chain they
// went through. Unfiltered (and for non-Lorentzian filters): overlap of
// Lorentzian wavepackets of their effective widths,
//   I = f1 f2 / (((f1+f2)/2)^2 + dnu^2).
// Both photons through a Lorentzian etalon: exact overlap of the transmitted
// wavepackets a_i(nu) t(nu) (closed form via residues).
double mode_overlap(const PhotonRecord& p1, const PhotonRecord& p2,
                    const std::vector<FilterSpec>& chain, double eta_deph = 1.0);

// exact transmitted-pair overlap through one Lorentzian filter (unit test hook)
double etalon_pair_overlap(double u1, double u2, double homog1_fwhm, double homog2_fwhm,
                           double filter_center, double filter_fwhm);

struct HbtResult {
    std::vector<std::vector<TimeTag>> tags; // [channel]
    DetectStats stats;
    double duration_ps = 0.0;
};

// 50:50 beamsplitter to two detectors.
HbtResult hbt(const PhotonStream& stream, const DetectorSpec detectors[2], uint64_t seed);

enum class HomMode { parallel, orthogonal };

struct HomConfig {
    double path_delay_ps = 0.0; // 0: one repetition period exactly
    double splitter_ratio = 0.5;
    HomMode mode = HomMode::parallel;
    double eta_deph = 1.0;

    void validate() const {
        if (splitter_ratio <= 0.0 || splitter_ratio >= 1.0)
            throw std::domain_error("HomConfig: splitter_ratio must be in (0,1)");
    }
};

struct HomResult {
    std::vector<std::vector<TimeTag>> tags;
    DetectStats stats;
    double duration_ps = 0.0;
    int64_t n_meetings = 0;
    int64_t n_coalesced = 0;
};

// Unbalanced MZI with a one-period delay arm: photons from consecutive
// triggers meet at the output splitter; meeting pairs bunch with probability
// set by their mode overlap. path_delay must match the repetition period to 2%.
HomResult hom(const PhotonStream& stream, const HomConfig& cfg, const DetectorSpec detectors[2],
              uint64_t seed);

} // namespace spsim

#pragma once

#include <string>
#include <vector>

#include "spsim/photon_stream.hpp"

namespace spsim {

struct Spectrum {
    std::vector<double> freq_ghz; // bin centers
    std::vector<double> counts;
    double bin_width_ghz = 0.0;

    double total() const;
};

struct SpectralLine {
    double center_ghz = 0.0;
    double weight = 1.0;
    double lorentz_fwhm_ghz = 0.0; // intrinsic width before the instrument
};

inline constexpr double kFpiInstrumentFwhmGhz = 0.07;

// Scanning Fabry-Perot spectrum of a photon stream: each photon contributes
// one count at a frequency drawn from its (filter-reshaped) spectral density
// convolved with the Lorentzian instrument response.
Spectrum fpi_scan(const PhotonStream& stream, double instrument_fwhm_ghz, double f_min_ghz,
                  double f_max_ghz, int n_bins, uint64_t seed);

// Analytic variant for delta/Lorentzian line lists: per-bin areas are exact
// Lorentzian CDF differences, so the in-range area is conserved.
Spectrum fpi_scan_lines(const std::vector<SpectralLine>& lines, double instrument_fwhm_ghz,
                        double f_min_ghz, double f_max_ghz, int n_bins);

void write_spectrum_csv(const Spectrum& s, const std::string& path);
Spectrum read_spectrum_csv(const std::string& path);

} // namespace spsim

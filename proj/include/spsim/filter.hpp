#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "spsim/photon_stream.hpp"
#include "spsim/voigt.hpp"

namespace spsim {

enum class FilterKind : uint8_t { lorentzian_etalon, gaussian_bandpass, notch };

struct FilterSpec {
    FilterKind kind = FilterKind::lorentzian_etalon;
    double center_ghz = 0.0;
    double fwhm_ghz = 0.8542; // etalon default, reverse-engineered from the
                              // 0.79/0.80 GHz transmitted-line fits
    double peak_transmission = 1.0;

    void validate() const {
        if (fwhm_ghz <= 0.0) throw std::domain_error("FilterSpec: fwhm must be > 0");
        if (peak_transmission <= 0.0 || peak_transmission > 1.0)
            throw std::domain_error("FilterSpec: peak_transmission must be in (0,1]");
    }

    // Power transmission for a monochromatic (delta-line) component.
    double transmission_at(double freq_ghz) const {
        double x = freq_ghz - center_ghz;
        double g = fwhm_ghz / 2.0;
        switch (kind) {
            case FilterKind::lorentzian_etalon:
                return peak_transmission * g * g / (g * g + x * x);
            case FilterKind::gaussian_bandpass: {
                double s = fwhm_to_sigma(fwhm_ghz);
                return peak_transmission * std::exp(-x * x / (2.0 * s * s));
            }
            case FilterKind::notch:
                return peak_transmission * (1.0 - g * g / (g * g + x * x));
        }
        return 0.0;
    }

    // Survival probability of a photon whose own line is a Lorentzian of
    // width homog_fwhm centered at freq: the transmitted fraction of its
    // spectral density. Reduces to transmission_at() for a delta line.
    double survival(double freq_ghz, double homog_fwhm_ghz) const {
        double x = freq_ghz - center_ghz;
        double gh = homog_fwhm_ghz / 2.0;
        double gf = fwhm_ghz / 2.0;
        switch (kind) {
            case FilterKind::lorentzian_etalon: {
                double gs = gh + gf;
                return peak_transmission * gf * gs / (gs * gs + x * x);
            }
            case FilterKind::gaussian_bandpass: {
                double s = fwhm_to_sigma(fwhm_ghz);
                // Voigt( x; s, gh ) normalized to the filter's unit peak
                return peak_transmission * voigt_profile(x, s, gh) * s * std::sqrt(2.0 * kPi);
            }
            case FilterKind::notch: {
                double gs = gh + gf;
                return peak_transmission * (1.0 - gf * gs / (gs * gs + x * x));
            }
        }
        return 0.0;
    }
};

struct FilterStats {
    int64_t n_in = 0;
    int64_t n_out = 0;
};

// Bernoulli thinning with the physical survival probability; survivors are
// tagged filtered and carry effective_fwhm = min(homog, filter fwhm). The
// filter is appended to the stream's chain history (used for spectral
// reshaping in fpi_scan and for transmitted-pair overlaps).
FilterStats apply_filter(PhotonStream& stream, const FilterSpec& filter, uint64_t seed);

} // namespace spsim

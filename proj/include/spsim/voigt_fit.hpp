#pragma once

#include <stdexcept>
#include <string>

#include "spsim/fpi.hpp"

namespace spsim {

class FitError : public std::runtime_error {
  public:
    FitError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const { return residual_; }

  private:
    double residual_;
};

struct VoigtFitResult {
    int n_peaks = 1;
    double common_fwhm_ghz = 0.0;     // FWHM of the fitted single-peak Voigt profile
    double common_fwhm_err_ghz = 0.0;
    double gaussian_fwhm_ghz = 0.0;   // Gaussian component
    double gaussian_fwhm_err_ghz = 0.0;
    double lorentz_component_ghz = 0.0; // fixed input, or fitted when freed
    double lorentz_err_ghz = 0.0;
    double center_ghz = 0.0;
    double splitting_ghz = 0.0;
    double splitting_err_ghz = 0.0;
    double area_ratio = 0.0; // minority/majority
    double area_ratio_err = 0.0;
    double residual_chi2 = 0.0;
    bool degenerate_splitting = false; // splitting consistent with 0
};

struct VoigtFitOptions {
    double lorentz_fixed_ghz = 0.32;      // <= 0: Lorentzian width becomes a free parameter
    double instrument_fwhm_ghz = spsim::kFpiInstrumentFwhmGhz;
    bool fit_baseline = true;
};

// Least-squares fit of one or two Voigt profiles with a common width,
// convolved with the Lorentzian instrument response (Lorentzian widths add).
// Simplex start, Levenberg refinement; errors from the fit covariance.
VoigtFitResult fit_voigt(const Spectrum& spectrum, int n_peaks, const VoigtFitOptions& opts = {});

} // namespace spsim

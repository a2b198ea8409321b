#include "spsim/voigt_fit.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "spsim/fit.hpp"
#include "spsim/voigt.hpp"

namespace spsim {

namespace {

struct ParamLayout {
    int amp0 = 0, amp1 = -1, center = 1, split = -1, gauss = 2, lorentz = -1, base = -1;
    int count = 3;
};

ParamLayout make_layout(int n_peaks, bool lorentz_free, bool baseline) {
    ParamLayout L;
    int i = 0;
    L.amp0 = i++;
    if (n_peaks == 2) L.amp1 = i++;
    L.center = i++;
    if (n_peaks == 2) L.split = i++;
    L.gauss = i++;
    if (lorentz_free) L.lorentz = i++;
    if (baseline) L.base = i++;
    L.count = i;
    return L;
}

double data_fwhm_estimate(const Spectrum& s) {
    auto it = std::max_element(s.counts.begin(), s.counts.end());
    double peak = *it;
    size_t ip = static_cast<size_t>(it - s.counts.begin());
    size_t lo = ip, hi = ip;
    while (lo > 0 && s.counts[lo] > peak / 2.0) --lo;
    while (hi + 1 < s.counts.size() && s.counts[hi] > peak / 2.0) ++hi;
    return std::max(s.freq_ghz[hi] - s.freq_ghz[lo], 2.0 * s.bin_width_ghz);
}

} // namespace

VoigtFitResult fit_voigt(const Spectrum& spectrum, int n_peaks, const VoigtFitOptions& opts) {
    if (n_peaks != 1 && n_peaks != 2)
        throw std::domain_error("fit_voigt: n_peaks must be 1 or 2");
    const size_t n = spectrum.freq_ghz.size();
    if (n < 50) throw std::domain_error("fit_voigt: need at least 50 points");
    double width_est = data_fwhm_estimate(spectrum);
    double span = spectrum.freq_ghz.back() - spectrum.freq_ghz.front();
    if (span < 3.0 * width_est)
        throw std::domain_error("fit_voigt: scan span must cover 3x the line width");

    const bool lorentz_free = opts.lorentz_fixed_ghz <= 0.0;
    const ParamLayout L = make_layout(n_peaks, lorentz_free, opts.fit_baseline);

    auto model_at = [&](const std::vector<double>& p, double nu) {
        double fG = std::abs(p[L.gauss]);
        double fL = (lorentz_free ? std::abs(p[L.lorentz]) : opts.lorentz_fixed_ghz) +
                    opts.instrument_fwhm_ghz;
        double y = L.base >= 0 ? p[L.base] : 0.0;
        double c = p[L.center];
        y += std::abs(p[L.amp0]) * voigt_profile_fwhm(nu - c, fG, fL);
        if (n_peaks == 2)
            y += std::abs(p[L.amp1]) * voigt_profile_fwhm(nu - c - p[L.split], fG, fL);
        return y;
    };
    auto residuals = [&](const std::vector<double>& p) {
        std::vector<double> r(n);
        for (size_t i = 0; i < n; ++i) r[i] = model_at(p, spectrum.freq_ghz[i]) - spectrum.counts[i];
        return r;
    };
    auto chi2_of = [&](const std::vector<double>& p) {
        double s = 0.0;
        for (double v : residuals(p)) s += v * v;
        return s;
    };

    // initial guesses from the data
    auto it = std::max_element(spectrum.counts.begin(), spectrum.counts.end());
    double c0 = spectrum.freq_ghz[static_cast<size_t>(it - spectrum.counts.begin())];
    double area0 = spectrum.total() * spectrum.bin_width_ghz;

    std::vector<double> p0(L.count, 0.0), step(L.count, 0.0);
    p0[L.center] = c0;
    step[L.center] = 0.2 * width_est;
    p0[L.gauss] = lorentz_free ? 0.3 * width_est : std::max(0.5 * width_est, 0.1);
    step[L.gauss] = 0.3 * p0[L.gauss];
    if (lorentz_free) {
        p0[L.lorentz] = 0.7 * width_est;
        step[L.lorentz] = 0.3 * p0[L.lorentz];
    }
    if (L.base >= 0) {
        p0[L.base] = 0.0;
        step[L.base] = 0.05 * (*it);
    }
    if (n_peaks == 1) {
        p0[L.amp0] = area0;
        step[L.amp0] = 0.3 * area0;
    } else {
        p0[L.amp0] = 0.7 * area0;
        p0[L.amp1] = 0.3 * area0;
        step[L.amp0] = 0.2 * area0;
        step[L.amp1] = 0.2 * area0;
        // second peak from the residual against a single-peak rough model
        std::vector<double> p1 = p0;
        double best_off = 3.0, best_res = -1.0;
        for (size_t i = 0; i < n; ++i) {
            double off = spectrum.freq_ghz[i] - c0;
            if (std::abs(off) < 0.75 * width_est) continue;
            double res = spectrum.counts[i] - model_at(p1, spectrum.freq_ghz[i]);
            if (res > best_res) {
                best_res = res;
                best_off = off;
            }
        }
        p0[L.split] = best_off;
        step[L.split] = 0.2 * std::abs(best_off) + 0.1;
    }

    auto simplex = nelder_mead(chi2_of, p0, step, 4000);
    auto lm = levenberg_marquardt(residuals, simplex, 300);
    if (!lm.converged && lm.chi2 > chi2_of(simplex))
        throw FitError("fit_voigt: did not converge", std::sqrt(lm.chi2 / n));
    auto& p = lm.params;

    VoigtFitResult out;
    out.n_peaks = n_peaks;
    out.residual_chi2 = lm.chi2;
    double fG = std::abs(p[L.gauss]);
    double fL = lorentz_free ? std::abs(p[L.lorentz]) : opts.lorentz_fixed_ghz;
    out.gaussian_fwhm_ghz = fG;
    out.lorentz_component_ghz = fL;
    out.center_ghz = p[L.center];
    out.common_fwhm_ghz = voigt_fwhm(fG, fL);

    auto cov = [&](int a, int b) -> double {
        if (a < 0 || b < 0 || lm.covariance.empty()) return 0.0;
        return lm.covariance[a][b];
    };
    out.gaussian_fwhm_err_ghz = std::sqrt(std::max(0.0, cov(L.gauss, L.gauss)));
    if (lorentz_free) out.lorentz_err_ghz = std::sqrt(std::max(0.0, cov(L.lorentz, L.lorentz)));
    {
        // FWHM error by the delta method
        double h = std::max(1e-4, 1e-3 * fG);
        double dG = (voigt_fwhm(fG + h, fL) - voigt_fwhm(fG, fL)) / h;
        double var = dG * dG * cov(L.gauss, L.gauss);
        if (lorentz_free) {
            double dL = (voigt_fwhm(fG, fL + h) - voigt_fwhm(fG, fL)) / h;
            var += dL * dL * cov(L.lorentz, L.lorentz) + 2.0 * dG * dL * cov(L.gauss, L.lorentz);
        }
        out.common_fwhm_err_ghz = std::sqrt(std::max(0.0, var));
    }

    if (n_peaks == 2) {
        double a_major = std::abs(p[L.amp0]);
        double a_minor = std::abs(p[L.amp1]);
        double split = p[L.split];
        double var_split = cov(L.split, L.split);
        bool swapped = a_minor > a_major;
        if (swapped) {
            std::swap(a_major, a_minor);
            out.center_ghz = p[L.center] + split;
            split = -split;
        }
        out.splitting_ghz = std::abs(split);
        out.splitting_err_ghz = std::sqrt(std::max(0.0, var_split));
        out.area_ratio = a_major > 0.0 ? a_minor / a_major : 0.0;
        double va = cov(L.amp1, L.amp1), vb = cov(L.amp0, L.amp0), cab = cov(L.amp1, L.amp0);
        if (swapped) std::swap(va, vb);
        if (a_major > 0.0 && a_minor > 0.0)
            out.area_ratio_err =
                out.area_ratio * std::sqrt(std::max(0.0, va / (a_minor * a_minor) +
                                                             vb / (a_major * a_major) -
                                                             2.0 * cab / (a_minor * a_major)));
        out.degenerate_splitting = out.splitting_ghz < 2.0 * out.splitting_err_ghz;
    }
    return out;
}

} // namespace spsim

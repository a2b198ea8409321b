#include "spsim/fpi.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "spsim/filter.hpp"
#include "spsim/rng.hpp"
#include "spsim/units.hpp"

namespace spsim {

double Spectrum::total() const { return std::accumulate(counts.begin(), counts.end(), 0.0); }

namespace {

// draw from the photon's spectral density: its own Lorentzian line, reshaped
// by the chain's transmission profiles when the photon was filtered
double sample_photon_frequency(const PhotonRecord& rec, const std::vector<FilterSpec>& chain,
                               CounterRng& rng) {
    double gh = rec.homog_fwhm_ghz / 2.0;
    if (!rec.filtered || chain.empty()) return rec.freq_ghz + rng.cauchy(gh);
    for (int it = 0; it < 10000; ++it) {
        double nu = rec.freq_ghz + rng.cauchy(gh);
        double accept = 1.0;
        for (const auto& f : chain) accept *= f.transmission_at(nu) / f.peak_transmission;
        if (rng.bernoulli(accept)) return nu;
    }
    return chain.back().center_ghz; // unreachable in practice
}

} // namespace

Spectrum fpi_scan(const PhotonStream& stream, double instrument_fwhm_ghz, double f_min_ghz,
                  double f_max_ghz, int n_bins, uint64_t seed) {
    if (stream.records.empty()) throw std::runtime_error("fpi_scan: empty input stream");
    if (n_bins < 2 || f_max_ghz <= f_min_ghz) throw std::domain_error("fpi_scan: bad scan axis");
    Spectrum s;
    s.bin_width_ghz = (f_max_ghz - f_min_ghz) / n_bins;
    s.freq_ghz.resize(n_bins);
    for (int i = 0; i < n_bins; ++i) s.freq_ghz[i] = f_min_ghz + (i + 0.5) * s.bin_width_ghz;
    s.counts.assign(n_bins, 0.0);

    const double gi = instrument_fwhm_ghz / 2.0;
    for (size_t i = 0; i < stream.records.size(); ++i) {
        CounterRng rng(seed, RngKind::fpi, i);
        double nu = sample_photon_frequency(stream.records[i], stream.applied_filters, rng);
        if (gi > 0.0) nu += rng.cauchy(gi);
        int b = static_cast<int>(std::floor((nu - f_min_ghz) / s.bin_width_ghz));
        if (b >= 0 && b < n_bins) s.counts[b] += 1.0;
    }
    return s;
}

Spectrum fpi_scan_lines(const std::vector<SpectralLine>& lines, double instrument_fwhm_ghz,
                        double f_min_ghz, double f_max_ghz, int n_bins) {
    if (lines.empty()) throw std::runtime_error("fpi_scan_lines: empty input");
    if (n_bins < 2 || f_max_ghz <= f_min_ghz)
        throw std::domain_error("fpi_scan_lines: bad scan axis");
    Spectrum s;
    s.bin_width_ghz = (f_max_ghz - f_min_ghz) / n_bins;
    s.freq_ghz.resize(n_bins);
    for (int i = 0; i < n_bins; ++i) s.freq_ghz[i] = f_min_ghz + (i + 0.5) * s.bin_width_ghz;
    s.counts.assign(n_bins, 0.0);
    for (const auto& line : lines) {
        double g = (line.lorentz_fwhm_ghz + instrument_fwhm_ghz) / 2.0;
        if (g <= 0.0) { // bare delta line
            int b = static_cast<int>(std::floor((line.center_ghz - f_min_ghz) / s.bin_width_ghz));
            if (b >= 0 && b < n_bins) s.counts[b] += line.weight;
            continue;
        }
        auto cdf = [&](double x) { return std::atan((x - line.center_ghz) / g) / kPi + 0.5; };
        for (int i = 0; i < n_bins; ++i) {
            double lo = f_min_ghz + i * s.bin_width_ghz;
            s.counts[i] += line.weight * (cdf(lo + s.bin_width_ghz) - cdf(lo));
        }
    }
    return s;
}

void write_spectrum_csv(const Spectrum& s, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("write_spectrum_csv: cannot open " + path);
    f << "freq_ghz,counts\n";
    char buf[96];
    for (size_t i = 0; i < s.freq_ghz.size(); ++i) {
        int n = std::snprintf(buf, sizeof buf, "%.9g,%.9g\n", s.freq_ghz[i], s.counts[i]);
        f.write(buf, n);
    }
}

Spectrum read_spectrum_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("read_spectrum_csv: cannot open " + path);
    std::string line;
    if (!std::getline(f, line) || line.rfind("freq_ghz", 0) != 0)
        throw std::runtime_error("read_spectrum_csv: missing header in " + path);
    Spectrum s;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        double x, y;
        if (std::sscanf(line.c_str(), "%lf,%lf", &x, &y) != 2)
            throw std::runtime_error("read_spectrum_csv: malformed row: " + line);
        s.freq_ghz.push_back(x);
        s.counts.push_back(y);
    }
    if (s.freq_ghz.size() >= 2) s.bin_width_ghz = s.freq_ghz[1] - s.freq_ghz[0];
    return s;
}

} // namespace spsim

#include "spsim/filter.hpp"

#include <algorithm>

#include "spsim/rng.hpp"

namespace spsim {

FilterStats apply_filter(PhotonStream& stream, const FilterSpec& filter, uint64_t seed) {
    filter.validate();
    FilterStats stats;
    stats.n_in = static_cast<int64_t>(stream.records.size());
    size_t w = 0;
    for (size_t i = 0; i < stream.records.size(); ++i) {
        PhotonRecord& rec = stream.records[i];
        CounterRng rng(seed, RngKind::filter, i);
        double p = filter.survival(rec.freq_ghz, rec.homog_fwhm_ghz);
        if (!rng.bernoulli(p)) continue;
        rec.filtered = true;
        rec.effective_fwhm_ghz =
            std::min(rec.effective_fwhm_ghz, static_cast<float>(filter.fwhm_ghz));
        stream.records[w++] = rec;
    }
    stream.records.resize(w);
    stats.n_out = static_cast<int64_t>(w);
    stream.applied_filters.push_back(filter);
    return stats;
}

} // namespace spsim

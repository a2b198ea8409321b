#include <doctest.h>

#include <cmath>

#include "spsim/correlation.hpp"
#include "spsim/histogram.hpp"
#include "spsim/rng.hpp"

using namespace spsim;

TEST_CASE("single identical tags produce one count at tau zero") {
    std::vector<TimeTag> a = {{1'000'000, 0}};
    std::vector<TimeTag> b = {{1'000'000, 1}};
    Histogram h = build_correlation(a, b, 100.0, 10'000.0, 2'000'000.0);
    uint64_t total = 0;
    size_t nonzero_bin = 0;
    for (size_t i = 0; i < h.counts.size(); ++i)
        if (h.counts[i]) {
            total += h.counts[i];
            nonzero_bin = i;
        }
    CHECK(total == 1);
    CHECK(std::abs(h.bin_center(nonzero_bin)) < 100.0);
}

TEST_CASE("independent poisson streams give a flat histogram at the analytic level") {
    const double rate = 1e-5; // per ps
    const double duration = 2e9;
    std::vector<TimeTag> a, b;
    CounterRng ra(1, RngKind::dark0, 0), rb(2, RngKind::dark1, 0);
    for (double t = ra.exponential(1 / rate); t < duration; t += ra.exponential(1 / rate))
        a.push_back({static_cast<int64_t>(t), 0});
    for (double t = rb.exponential(1 / rate); t < duration; t += rb.exponential(1 / rate))
        b.push_back({static_cast<int64_t>(t), 1});
    const double binw = 1000.0, span = 100'000.0;
    Histogram h = build_correlation(a, b, binw, span, duration);
    double level = rate * rate * duration * binw;
    double mean = 0.0;
    for (auto c : h.counts) mean += static_cast<double>(c);
    mean /= static_cast<double>(h.counts.size());
    CHECK(mean == doctest::Approx(level).epsilon(0.05));
}

TEST_CASE("histogram mirrors when streams swap") {
    CounterRng r(3, RngKind::emit, 0);
    std::vector<TimeTag> a, b;
    for (int i = 0; i < 20000; ++i) {
        a.push_back({static_cast<int64_t>(r.uniform(0.0, 1e9)), 0});
        b.push_back({static_cast<int64_t>(r.uniform(0.0, 1e9)), 1});
    }
    Histogram hab = build_correlation(a, b, 50.0, 20'000.0, 1e9);
    Histogram hba = build_correlation(b, a, 50.0, 20'000.0, 1e9);
    CHECK(hab.sorted_warning); // generated unsorted on purpose
    size_t n = hab.counts.size();
    for (size_t i = 0; i < n; ++i) CHECK(hab.counts[i] == hba.counts[n - 1 - i]);
}

TEST_CASE("g2 estimator is unbiased against the outcome enumeration") {
    // source with known one- and two-photon probabilities per trigger
    const double p1 = 0.5, p2 = 0.03;
    const double period = 6578.947368;
    // enumeration oracle: g2 = E[n(n-1)]/E[n]^2
    double en = p1 + 2.0 * p2, enn1 = 2.0 * p2;
    double oracle = enn1 / (en * en);

    double sum = 0.0, sum2 = 0.0;
    const int runs = 40;
    for (int run = 0; run < runs; ++run) {
        std::vector<TimeTag> t0, t1;
        const int64_t n = 60000;
        CounterRng rng(1000 + run, RngKind::emit, 0);
        for (int64_t i = 0; i < n; ++i) {
            int k = 0;
            double u = rng.uniform();
            if (u < p2)
                k = 2;
            else if (u < p2 + p1)
                k = 1;
            for (int j = 0; j < k; ++j) {
                double t = i * period + rng.exponential(500.0);
                if (rng.bernoulli(0.5))
                    t0.push_back({static_cast<int64_t>(t), 0});
                else
                    t1.push_back({static_cast<int64_t>(t), 1});
            }
        }
        Histogram h = build_correlation(t0, t1, 100.0, 25 * period, n * period);
        CorrelationResult g = g2_from_histogram(h, period);
        sum += g.g2_zero;
        sum2 += g.g2_zero * g.g2_zero;
    }
    double mean = sum / runs;
    double sem = std::sqrt((sum2 / runs - mean * mean) / (runs - 1));
    CHECK(std::abs(mean - oracle) < std::max(2.0 * sem, 0.01));
}

TEST_CASE("g2 requires enough side peaks") {
    std::vector<TimeTag> a = {{0, 0}, {1000, 0}};
    std::vector<TimeTag> b = {{500, 1}};
    Histogram h = build_correlation(a, b, 100.0, 50'000.0, 1e6);
    CHECK_THROWS_AS(g2_from_histogram(h, 6578.9), std::runtime_error);
}

TEST_CASE("dark pedestal subtraction brings an ideal source to zero") {
    // one photon per trigger + heavy dark counts
    const double period = 6578.947368;
    const int64_t n = 300'000;
    const double duration = n * period;
    std::vector<TimeTag> t0, t1;
    CounterRng rng(77, RngKind::emit, 0);
    for (int64_t i = 0; i < n; ++i) {
        double t = i * period + rng.exponential(500.0);
        if (rng.bernoulli(0.5))
            t0.push_back({static_cast<int64_t>(t), 0});
        else
            t1.push_back({static_cast<int64_t>(t), 1});
    }
    const double dark_hz = 20000.0;
    const double dark_per_ps = dark_hz * 1e-12;
    for (double t = rng.exponential(1 / dark_per_ps); t < duration;
         t += rng.exponential(1 / dark_per_ps))
        t0.push_back({static_cast<int64_t>(t), 0});
    for (double t = rng.exponential(1 / dark_per_ps); t < duration;
         t += rng.exponential(1 / dark_per_ps))
        t1.push_back({static_cast<int64_t>(t), 1});
    std::sort(t0.begin(), t0.end(), [](auto& a, auto& b) { return a.timestamp_ps < b.timestamp_ps; });
    std::sort(t1.begin(), t1.end(), [](auto& a, auto& b) { return a.timestamp_ps < b.timestamp_ps; });

    Histogram h = build_correlation(t0, t1, 100.0, 25 * period, duration);
    G2Options opts;
    opts.dark_rate_hz[0] = opts.dark_rate_hz[1] = dark_hz;
    CorrelationResult g = g2_from_histogram(h, period, opts);
    CHECK(g.dark_correction_applied);
    CHECK(std::abs(g.g2_zero) < 3.0 * g.g2_err + 0.01);
    // without the correction the pedestal shows up
    CorrelationResult raw = g2_from_histogram(h, period);
    CHECK(raw.g2_zero > g.g2_zero);
}

TEST_CASE("visibility is scale invariant and checks side normalization") {
    const double period = 6578.947368;
    auto make_hist = [&](uint64_t central, uint64_t side) {
        Histogram h;
        const double binw = period; // one bin per period window
        const int nbins = 51;
        h.bin_edges_ps.resize(nbins + 1);
        for (int i = 0; i <= nbins; ++i)
            h.bin_edges_ps[i] = (i - nbins / 2.0) * binw - binw / 2.0 + period / 2.0;
        // center bins on k*period
        for (int i = 0; i <= nbins; ++i) h.bin_edges_ps[i] = (i - 25.5) * binw;
        h.counts.assign(nbins, side);
        h.counts[25] = central;
        h.total_duration_ps = 1e12;
        return h;
    };
    Histogram hp = make_hist(300, 1000);
    Histogram ho = make_hist(600, 1000);
    VisibilityResult v = tpi_visibility(hp, ho, period);
    CHECK(v.visibility == doctest::Approx(0.5));
    // rescale both histograms by 7: pure ratio, same result
    Histogram hp7 = hp, ho7 = ho;
    for (auto& c : hp7.counts) c *= 7;
    for (auto& c : ho7.counts) c *= 7;
    VisibilityResult v7 = tpi_visibility(hp7, ho7, period);
    CHECK(v7.visibility == doctest::Approx(v.visibility));
    CHECK_FALSE(v.side_ratio_warning);
    // mismatched side levels trip the warning
    Histogram hbad = make_hist(300, 1500);
    VisibilityResult vb = tpi_visibility(hbad, ho, period);
    CHECK(vb.side_ratio_warning);
    // zero orthogonal central area is an error
    Histogram hzero = make_hist(0, 0);
    CHECK_THROWS_AS(tpi_visibility(hp, hzero, period), std::runtime_error);
}

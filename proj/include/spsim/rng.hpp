#pragma once

#include <cmath>
#include <cstdint>
#include <array>

namespace spsim {

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
// Stateless block function: any (key, counter) -> 4x uint32. Streams are
// addressed by (seed, stream kind, event index), so output never depends on
// evaluation order or thread partitioning.
namespace philox {

inline constexpr uint32_t kW32A = 0x9E3779B9u;
inline constexpr uint32_t kW32B = 0xBB67AE85u;
inline constexpr uint32_t kM4x32A = 0xD2511F53u;
inline constexpr uint32_t kM4x32B = 0xCD9E8D57u;

inline void mul_hi_lo(uint32_t a, uint32_t b, uint32_t& lo, uint32_t& hi) {
    uint64_t p = static_cast<uint64_t>(a) * b;
    lo = static_cast<uint32_t>(p);
    hi = static_cast<uint32_t>(p >> 32);
}

inline std::array<uint32_t, 4> block(std::array<uint32_t, 4> ctr, std::array<uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
        uint32_t lo0, hi0, lo1, hi1;
        mul_hi_lo(kM4x32A, ctr[0], lo0, hi0);
        mul_hi_lo(kM4x32B, ctr[2], lo1, hi1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kW32A;
        key[1] += kW32B;
    }
    return ctr;
}

} // namespace philox

// Stream kinds keep independent draw sequences from one seed.
enum class RngKind : uint32_t {
    blink = 1,
    ou = 2,
    telegraph0 = 3,
    telegraph1 = 4,
    telegraph2 = 5,
    telegraph3 = 6,
    emit = 7,        // preparation / multiphoton / polarizer / emission time
    background = 8,
    route = 9,       // beamsplitter choices
    interfere = 10,  // HOM pair outcomes
    detect0 = 11,
    detect1 = 12,
    dark0 = 13,
    dark1 = 14,
    fpi = 15,
    filter = 16,
    scan = 17,
};

// One logical substream: draws are blocks of the Philox output keyed by
// (seed; kind, event index; block counter). Cheap to construct per event.
class CounterRng {
  public:
    CounterRng(uint64_t seed, RngKind kind, uint64_t event)
        : key_{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)},
          base_{static_cast<uint32_t>(event), static_cast<uint32_t>(event >> 32),
                static_cast<uint32_t>(kind), 0u} {}

    uint32_t next_u32() {
        if (idx_ == 4) refill();
        return buf_[idx_++];
    }

    uint64_t next_u64() {
        uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    // uniform on (0,1): 53-bit mantissa, never exactly 0 or 1
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    bool bernoulli(double p) { return uniform() < p; }

    // Box-Muller; second value cached
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = uniform(), u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = kTwoPiLocal * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

    double normal(double mean, double sigma) { return mean + sigma * normal(); }

    double exponential(double mean) { return -mean * std::log(uniform()); }

    // Cauchy with half-width-at-half-maximum gamma
    double cauchy(double gamma) { return gamma * std::tan(kPiLocal * (uniform() - 0.5)); }

  private:
    static constexpr double kPiLocal = 3.14159265358979323846;
    static constexpr double kTwoPiLocal = 2.0 * kPiLocal;

    void refill() {
        auto ctr = base_;
        ctr[3] = block_;
        buf_ = philox::block(ctr, key_);
        ++block_;
        idx_ = 0;
    }

    std::array<uint32_t, 2> key_;
    std::array<uint32_t, 4> base_;
    std::array<uint32_t, 4> buf_{};
    uint32_t block_ = 0;
    int idx_ = 4;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

} // namespace spsim

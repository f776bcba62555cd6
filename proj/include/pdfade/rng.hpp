#pragma once

#include <cstdint>

namespace pdfade::rng {

// SplitMix64 with independent streams keyed by (seed, stream_id). Streams are
// cheap to construct, so parallel Monte Carlo derives one per trial block and
// the merged result is independent of scheduling order.
class Stream {
  public:
    explicit Stream(std::uint64_t seed, std::uint64_t stream_id = 0)
        : state_(mix(seed + kGamma) ^ mix(stream_id * kGamma + kGamma)) {}

    std::uint64_t next_u64() {
        state_ += kGamma;
        return mix(state_);
    }

    // Uniform on (0, 1]; never 0, so -log(u) is finite. 53-bit resolution.
    double next_u01() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

  private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
};

}  // namespace pdfade::rng

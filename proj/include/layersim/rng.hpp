#pragma once

#include <cstdint>
#include <random>

namespace layersim {

/// Seeded 64-bit generator with platform-independent conversions.
///
/// The standard distributions are implementation-defined, so uniform reals
/// and bounded integers are produced here directly from mt19937_64 output.
/// Same seed, same sequence, on every compiler.
///
/// Not thread-safe; each run owns its streams.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    /// Uniform real in the half-open interval [0, 1) with 53 bits of precision.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). bound must be > 0.
    uint64_t uniform_index(uint64_t bound);

    /// Uniform integer in the closed range [lo, hi].
    int64_t uniform_int(int64_t lo, int64_t hi);

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::mt19937_64 engine_;
};

/// Purpose tags for the independent substreams of one run.
enum class Stream : uint64_t {
    Graph = 1,
    Genes = 2,
    InitialResistors = 3,
    Dynamics = 4,
};

/// SplitMix64 finaliser; used to spread seeds.
uint64_t splitmix64(uint64_t x);

/// Deterministic substream seed derived from the run's master seed.
uint64_t derive_seed(uint64_t master, Stream stream);

inline Rng make_stream(uint64_t master, Stream stream) { return Rng(derive_seed(master, stream)); }

}  // namespace layersim

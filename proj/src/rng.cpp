#include "layersim/rng.hpp"

#include <limits>
#include <stdexcept>

namespace layersim {

uint64_t Rng::uniform_index(uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_index: bound must be > 0");
    // Reject the top partial block so every residue is equally likely.
    const uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % bound;
    uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
}

int64_t Rng::uniform_int(int64_t lo, int64_t hi) {
    if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
    const uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
    if (span == 0) return static_cast<int64_t>(engine_());  // full 64-bit range
    return lo + static_cast<int64_t>(uniform_index(span));
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

uint64_t derive_seed(uint64_t master, Stream stream) {
    return splitmix64(splitmix64(master) ^ (static_cast<uint64_t>(stream) * 0xD1B54A32D192ED03ULL));
}

}  // namespace layersim

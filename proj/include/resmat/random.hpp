#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace resmat {

/// The single source of randomness in the library: a 64-bit Mersenne twister
/// seeded with one integer. Bounded draws use rejection sampling so the
/// sequence does not depend on the standard library's distributions.
class SeededRng {
public:
    static constexpr std::uint64_t default_seed = 20240611;

    explicit SeededRng(std::uint64_t seed = default_seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t r;
        do {
            r = engine_();
        } while (r >= limit);
        return r % bound;
    }

    template <typename T>
    void shuffle(std::vector<T> &items) {
        for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace resmat

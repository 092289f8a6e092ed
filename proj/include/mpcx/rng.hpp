#pragma once

#include <cstdint>

namespace mpcx {

// All randomness in the library is derived from the SplitMix64 finalizer
// below, so results are bit-identical across platforms and independent of
// evaluation order. std:: distributions are avoided on purpose: their
// output is implementation-defined.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t mix(std::uint64_t a, std::uint64_t b) noexcept {
    return splitmix64(splitmix64(a) ^ b);
}

// Upper 53 bits mapped to [0,1).
constexpr double to_unit(std::uint64_t x) noexcept {
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

// Seed of trial `index` under a Monte Carlo base seed. Trials are mutually
// independent and may be evaluated in any order or on any thread.
constexpr std::uint64_t trial_seed_for(std::uint64_t base_seed, std::uint64_t index) noexcept {
    return mix(base_seed, index);
}

// The Bernoulli coin of message channel (sender, receiver, layer) in one
// trial. Counter-based: the value is a pure function of the key, so a
// channel is sampled exactly once per trial no matter how many times or in
// which order the simulation looks at it.
constexpr bool channel_coin(std::uint64_t trial_seed, std::uint64_t sender,
                            std::uint64_t receiver, std::uint64_t layer,
                            double survival) noexcept {
    std::uint64_t h = splitmix64(trial_seed ^ (sender * 0xd1342543de82ef95ULL));
    h = splitmix64(h ^ (receiver * 0xaf251af3b0f025b5ULL));
    h = splitmix64(h ^ layer);
    return to_unit(h) < survival;
}

// Small stateful generator for the graph samplers (Fisher-Yates shuffles,
// bounded integers, pair coins). Counter-mode SplitMix64.
class SplitMix {
public:
    explicit constexpr SplitMix(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    // Uniform in [0, bound) via rejection; bound > 0.
    constexpr std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t threshold = (0ULL - bound) % bound;
        for (;;) {
            const std::uint64_t x = next();
            if (x >= threshold) return x % bound;
        }
    }

    constexpr double unit() noexcept { return to_unit(next()); }

    template <typename T>
    void shuffle(T* data, std::size_t n) noexcept {
        for (std::size_t i = n; i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i));
            T tmp = data[i - 1];
            data[i - 1] = data[j];
            data[j] = tmp;
        }
    }

private:
    std::uint64_t state_;
};

} // namespace mpcx

#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "mpcx/rng.hpp"

namespace mpcx {

struct Hash128 {
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;

    auto operator<=>(const Hash128&) const = default;
};

// Streaming 128-bit non-cryptographic hash used for color refinement and
// graph identity. Two FNV-1a lanes with distinct offsets/multipliers,
// cross-avalanched on digest. Input is absorbed as explicit little-endian
// bytes, so digests are identical across platforms.
class Hasher {
public:
    void update_byte(unsigned char b) noexcept {
        lane1_ = (lane1_ ^ b) * 0x100000001b3ULL;
        lane2_ = (lane2_ ^ b) * 0x00000100000001b5ULL;
    }

    void update_u64(std::uint64_t v) noexcept {
        for (int i = 0; i < 8; ++i) update_byte(static_cast<unsigned char>(v >> (8 * i)));
    }

    void update_i64(std::int64_t v) noexcept { update_u64(static_cast<std::uint64_t>(v)); }

    void update(const Hash128& h) noexcept {
        update_u64(h.hi);
        update_u64(h.lo);
    }

    Hash128 digest() const noexcept {
        Hash128 out;
        out.hi = splitmix64(lane1_ ^ (lane2_ >> 32) ^ (lane2_ << 32));
        out.lo = splitmix64(lane2_ ^ out.hi);
        return out;
    }

private:
    std::uint64_t lane1_ = 0xcbf29ce484222325ULL;
    std::uint64_t lane2_ = 0x9ae16a3b2f90404fULL;
};

std::string to_hex(const Hash128& h);

} // namespace mpcx

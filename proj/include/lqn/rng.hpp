#pragma once

#include <cstdint>

namespace lqn {

// SplitMix64 with explicit stream separation. State evolution and output
// mixing are pure 64-bit integer ops, so sequences are identical on every
// platform. Stream s of seed x starts from x + s * 0xd2b74407b1ce6e93 and
// steps by the usual golden-gamma increment.
class PortableRng {
public:
    explicit PortableRng(std::uint64_t seed, std::uint64_t stream = 0)
        : state_(seed + stream * 0xd2b74407b1ce6e93ULL) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, n) by rejection.
    std::uint64_t next_below(std::uint64_t n) {
        ++draws_;
        if (n <= 1) return 0;
        const std::uint64_t limit = n * ((~std::uint64_t{0}) / n);
        std::uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return r % n;
    }

    double next_unit() {  // uniform in [0, 1)
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Number of next_below() calls made; used by tests to count redraws.
    std::uint64_t draw_count() const { return draws_; }

private:
    std::uint64_t state_;
    std::uint64_t draws_ = 0;
};

}  // namespace lqn

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace lqn {

// Fixed-size bitset with a runtime bit count. Unused high bits of the last
// word are kept at zero.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    // First set bit, or size() if none.
    std::size_t find_first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
        return bits_;
    }

    bool operator==(const Bitset&) const = default;

    friend bool intersects(const Bitset& a, const Bitset& b) {
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            if (a.words_[i] & b.words_[i]) return true;
        return false;
    }

    // First element of a & b, or size() if disjoint.
    friend std::size_t first_common(const Bitset& a, const Bitset& b) {
        for (std::size_t i = 0; i < a.words_.size(); ++i) {
            std::uint64_t w = a.words_[i] & b.words_[i];
            if (w) return i * 64 + static_cast<std::size_t>(std::countr_zero(w));
        }
        return a.bits_;
    }

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace lqn

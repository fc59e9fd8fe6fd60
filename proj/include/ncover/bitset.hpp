#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace ncover {

/// Fixed-size (at construction) bitset over 64-bit words.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const noexcept { return bits_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    std::uint64_t word(std::size_t w) const noexcept { return words_[w]; }
    std::uint64_t& word(std::size_t w) noexcept { return words_[w]; }

    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const noexcept {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }
    bool any() const noexcept { return !none(); }

    bool intersects(const Bitset& o) const noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & o.words_[w])
                return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] & ~o.words_[w])
                return false;
        return true;
    }
    Bitset& operator|=(const Bitset& o) noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] |= o.words_[w];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] &= o.words_[w];
        return *this;
    }
    /// this &= ~o
    Bitset& subtract(const Bitset& o) noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] &= ~o.words_[w];
        return *this;
    }

    /// Index of the lowest set bit at or after `from`, or size() when none.
    std::size_t next(std::size_t from) const noexcept {
        if (from >= bits_)
            return bits_;
        std::size_t w = from >> 6;
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
        for (;;) {
            if (cur)
                return (w << 6) + static_cast<std::size_t>(std::countr_zero(cur));
            if (++w == words_.size())
                return bits_;
            cur = words_[w];
        }
    }
    std::size_t first() const noexcept { return next(0); }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t cur = words_[w];
            while (cur) {
                f((w << 6) + static_cast<std::size_t>(std::countr_zero(cur)));
                cur &= cur - 1;
            }
        }
    }

    bool operator==(const Bitset&) const = default;
    bool operator<(const Bitset& o) const noexcept { return words_ < o.words_; }

    std::size_t hash() const noexcept {
        std::size_t h = bits_;
        for (auto w : words_)
            h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const noexcept { return b.hash(); }
};

} // namespace ncover

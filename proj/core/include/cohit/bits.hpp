#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cohit {

// Fixed-length dense bitset over machine words. Used internally wherever a
// sparse position set has to be densified for elimination.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    std::size_t words() const { return w_.size(); }
    std::uint64_t* data() { return w_.data(); }
    const std::uint64_t* data() const { return w_.data(); }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }

    void xor_with(const Bits& o, std::size_t from_word = 0) {
        const std::size_t m = w_.size();
        std::uint64_t* a = w_.data();
        const std::uint64_t* b = o.w_.data();
        for (std::size_t i = from_word; i < m; ++i) a[i] ^= b[i];
    }

    // XOR of words [0, last_word] only; for vectors known to vanish above.
    void xor_upto(const Bits& o, std::size_t last_word) {
        std::uint64_t* a = w_.data();
        const std::uint64_t* b = o.w_.data();
        for (std::size_t i = 0; i <= last_word; ++i) a[i] ^= b[i];
    }
    bool any() const {
        for (auto x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }

    // Highest set index, or npos.
    std::size_t highest() const {
        for (std::size_t i = w_.size(); i-- > 0;)
            if (w_[i]) return i * 64 + 63 - static_cast<std::size_t>(std::countl_zero(w_[i]));
        return npos;
    }

    // Lowest set index at or after `from`, or npos.
    std::size_t next(std::size_t from) const {
        if (from >= n_) return npos;
        std::size_t wi = from >> 6;
        std::uint64_t x = w_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (x) return wi * 64 + static_cast<std::size_t>(std::countr_zero(x));
            if (++wi >= w_.size()) return npos;
            x = w_[wi];
        }
    }
    std::size_t lowest() const { return next(0); }

    std::vector<std::size_t> positions() const {
        std::vector<std::size_t> out;
        for (std::size_t i = next(0); i != npos; i = next(i + 1)) out.push_back(i);
        return out;
    }

    bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace cohit

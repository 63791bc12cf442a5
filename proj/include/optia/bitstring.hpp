#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/container/small_vector.hpp>

namespace optia {

class Rng;

/// Fixed-length binary genotype packed into 64-bit words.
///
/// Position 0 is the leftmost bit of the textual form, so "1100" has ones at
/// positions 0 and 1. Bits past size() in the last word are always zero.
/// Up to 512 bits are stored inline without heap allocation.
class BitString {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitString() = default;
    explicit BitString(std::size_t n, bool value = false);

    static BitString ones(std::size_t n) { return BitString(n, true); }
    static BitString zeros(std::size_t n) { return BitString(n, false); }
    static BitString random(std::size_t n, Rng& rng);

    /// Parses a string of '0'/'1' characters. Throws std::invalid_argument otherwise.
    static BitString parse(std::string_view text);

    /// 1^ones 0^(n-ones)
    static BitString prefix_ones(std::size_t n, std::size_t ones);

    std::size_t size() const noexcept { return n_; }
    bool empty() const noexcept { return n_ == 0; }

    bool operator[](std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i, bool value) noexcept {
        const Word mask = Word{1} << (i % kWordBits);
        if (value) words_[i / kWordBits] |= mask;
        else words_[i / kWordBits] &= ~mask;
    }
    void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

    std::size_t count_ones() const noexcept;
    std::size_t count_zeros() const noexcept { return n_ - count_ones(); }
    /// Ones in positions [first, last).
    std::size_t count_ones(std::size_t first, std::size_t last) const noexcept;
    /// Number of consecutive ones starting at position 0.
    std::size_t leading_ones() const noexcept;

    bool all_ones() const noexcept { return count_ones() == n_; }
    bool all_zeros() const noexcept;

    std::size_t word_count() const noexcept { return words_.size(); }
    Word word(std::size_t w) const noexcept { return words_[w]; }

    std::string to_string() const;

    friend bool operator==(const BitString& a, const BitString& b) noexcept {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

private:
    void clear_tail() noexcept;

    std::size_t n_ = 0;
    boost::container::small_vector<Word, 8> words_;
};

std::size_t count_ones(const BitString& x) noexcept;
std::size_t count_zeros(const BitString& x) noexcept;

/// Number of mismatching positions. Throws std::invalid_argument on length mismatch.
std::size_t hamming(const BitString& x, const BitString& y);

}  // namespace optia

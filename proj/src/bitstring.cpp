#include "optia/bitstring.hpp"

#include <stdexcept>

#include "optia/rng.hpp"

namespace optia {

namespace {

std::size_t words_for(std::size_t n) { return (n + BitString::kWordBits - 1) / BitString::kWordBits; }

}  // namespace

BitString::BitString(std::size_t n, bool value) : n_(n), words_(words_for(n), value ? ~Word{0} : Word{0}) {
    clear_tail();
}

BitString BitString::random(std::size_t n, Rng& rng) {
    BitString x(n);
    for (auto& w : x.words_) w = rng.next();
    x.clear_tail();
    return x;
}

BitString BitString::parse(std::string_view text) {
    BitString x(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') x.set(i, true);
        else if (text[i] != '0') throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
    return x;
}

BitString BitString::prefix_ones(std::size_t n, std::size_t ones) {
    BitString x(n);
    for (std::size_t i = 0; i < ones && i < n; ++i) x.set(i, true);
    return x;
}

void BitString::clear_tail() noexcept {
    const std::size_t rem = n_ % kWordBits;
    if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
}

std::size_t BitString::count_ones() const noexcept {
    std::size_t total = 0;
    for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::size_t BitString::count_ones(std::size_t first, std::size_t last) const noexcept {
    if (first >= last) return 0;
    std::size_t total = 0;
    std::size_t fw = first / kWordBits;
    const std::size_t lw = (last - 1) / kWordBits;
    for (std::size_t w = fw; w <= lw; ++w) {
        Word mask = ~Word{0};
        if (w == fw) mask &= ~Word{0} << (first % kWordBits);
        if (w == lw && last % kWordBits != 0) mask &= (Word{1} << (last % kWordBits)) - 1;
        total += static_cast<std::size_t>(std::popcount(words_[w] & mask));
    }
    return total;
}

std::size_t BitString::leading_ones() const noexcept {
    std::size_t total = 0;
    for (Word w : words_) {
        const auto run = static_cast<std::size_t>(std::countr_one(w));
        total += run;
        if (run < kWordBits) break;
    }
    return total < n_ ? total : n_;
}

bool BitString::all_zeros() const noexcept {
    for (Word w : words_)
        if (w != 0) return false;
    return true;
}

std::string BitString::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if ((*this)[i]) s[i] = '1';
    return s;
}

std::size_t count_ones(const BitString& x) noexcept { return x.count_ones(); }
std::size_t count_zeros(const BitString& x) noexcept { return x.count_zeros(); }

std::size_t hamming(const BitString& x, const BitString& y) {
    if (x.size() != y.size()) throw std::invalid_argument("hamming: length mismatch");
    std::size_t total = 0;
    for (std::size_t w = 0; w < x.word_count(); ++w)
        total += static_cast<std::size_t>(std::popcount(x.word(w) ^ y.word(w)));
    return total;
}

}  // namespace optia

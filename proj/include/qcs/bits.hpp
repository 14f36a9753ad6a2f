#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcs {

class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Fixed-length packed bit vector. Bit i lives at words()[i / 64], bit (i % 64).
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : len_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool bit(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set_bit(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void flip_bit(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    void assign_bit(std::size_t i, bool v) {
        if (v)
            set_bit(i);
        else
            words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    BitVec& operator^=(const BitVec& o) {
        if (o.len_ != len_) throw error("BitVec xor: length mismatch");
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    int weight() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    /// Index of the highest set bit, or npos when empty of set bits.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t highest_set_bit() const {
        for (std::size_t w = words_.size(); w-- > 0;)
            if (words_[w]) return w * 64 + (63 - std::countl_zero(words_[w]));
        return npos;
    }

    bool operator==(const BitVec&) const = default;

    /// Index order equals string order: character j is bit j.
    std::string to_string01() const {
        std::string s(len_, '0');
        for (std::size_t i = 0; i < len_; ++i)
            if (bit(i)) s[i] = '1';
        return s;
    }
    static BitVec from_string01(std::string_view s) {
        BitVec v(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                v.set_bit(i);
            else if (s[i] != '0')
                throw error("bit string: expected '0' or '1'");
        }
        return v;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

    /// Strict weak order (word-wise); used for sorting/dedup, not numeric meaning.
    friend bool operator<(const BitVec& a, const BitVec& b) {
        if (a.len_ != b.len_) return a.len_ < b.len_;
        return a.words_ < b.words_;
    }

  private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace qcs

#pragma once

#include <algorithm>
#include <optional>
#include <utility>

#include "qcs/bits.hpp"

namespace qcs {

/// Polynomial over GF(2), stored as packed coefficient words (bit e = coefficient
/// of x^e). Normalized: the top word is nonzero; the zero polynomial holds no
/// words and has no degree.
class Gf2Poly {
  public:
    Gf2Poly() = default;

    static Gf2Poly zero() { return {}; }
    static Gf2Poly one() { return monomial(0); }
    static Gf2Poly monomial(std::size_t e) {
        Gf2Poly p;
        p.words_.resize(e / 64 + 1, 0);
        p.words_[e / 64] = std::uint64_t{1} << (e % 64);
        return p;
    }

    bool is_zero() const { return words_.empty(); }

    std::optional<std::size_t> degree() const {
        if (words_.empty()) return std::nullopt;
        return (words_.size() - 1) * 64 + (63 - std::countl_zero(words_.back()));
    }

    bool coeff(std::size_t e) const {
        std::size_t w = e / 64;
        if (w >= words_.size()) return false;
        return (words_[w] >> (e % 64)) & 1u;
    }

    /// Toggles the coefficient of x^e.
    void flip(std::size_t e) {
        std::size_t w = e / 64;
        if (w >= words_.size()) words_.resize(w + 1, 0);
        words_[w] ^= std::uint64_t{1} << (e % 64);
        normalize();
    }

    int weight() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    Gf2Poly& operator^=(const Gf2Poly& o) {
        if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
        for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
        normalize();
        return *this;
    }
    friend Gf2Poly operator^(Gf2Poly a, const Gf2Poly& b) { return a ^= b; }

    /// This polynomial times x^s.
    Gf2Poly shifted(std::size_t s) const {
        if (words_.empty()) return {};
        Gf2Poly r;
        std::size_t wshift = s / 64, bshift = s % 64;
        r.words_.assign(words_.size() + wshift + 1, 0);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            r.words_[i + wshift] |= words_[i] << bshift;
            if (bshift) r.words_[i + wshift + 1] |= words_[i] >> (64 - bshift);
        }
        r.normalize();
        return r;
    }

    bool operator==(const Gf2Poly&) const = default;

    /// Support as exponents, ascending.
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t v = words_[w];
            while (v) {
                out.push_back(w * 64 + std::countr_zero(v));
                v &= v - 1;
            }
        }
        return out;
    }

  private:
    void normalize() {
        while (!words_.empty() && words_.back() == 0) words_.pop_back();
    }

    std::vector<std::uint64_t> words_;
};

/// Octal text convention: each digit expands to 3 coefficient bits, highest
/// exponents on the left; leading zero digits are permitted and ignored.
inline Gf2Poly parse_octal(std::string_view text, std::optional<int> m = std::nullopt) {
    if (text.empty()) throw error("parse_octal: empty string");
    Gf2Poly p;
    std::size_t n = text.size();
    for (std::size_t j = 0; j < n; ++j) {
        char c = text[j];
        if (c < '0' || c > '7') throw error(std::string("parse_octal: invalid octal digit '") + c + "'");
        int v = c - '0';
        std::size_t base = 3 * (n - 1 - j);
        for (int b = 0; b < 3; ++b)
            if (v & (1 << b)) p.flip(base + b);
    }
    if (m) {
        auto d = p.degree();
        if (d && static_cast<int>(*d) >= *m)
            throw error("parse_octal: degree " + std::to_string(*d) + " out of range for m = " + std::to_string(*m));
    }
    return p;
}

inline std::string format_octal(const Gf2Poly& p, std::size_t min_digits = 1) {
    std::size_t ndig = 1;
    if (auto d = p.degree()) ndig = *d / 3 + 1;
    ndig = std::max(ndig, std::max<std::size_t>(min_digits, 1));
    std::string s(ndig, '0');
    for (std::size_t j = 0; j < ndig; ++j) {
        std::size_t base = 3 * (ndig - 1 - j);
        int v = 0;
        for (int b = 0; b < 3; ++b)
            if (p.coeff(base + b)) v |= 1 << b;
        s[j] = static_cast<char>('0' + v);
    }
    return s;
}

/// Carryless (XOR-accumulate) product.
inline Gf2Poly poly_mul(const Gf2Poly& a, const Gf2Poly& b) {
    Gf2Poly r;
    for (std::size_t e : a.support()) r ^= b.shifted(e);
    return r;
}

/// Exact long division: a = q*b + r with deg r < deg b.
inline std::pair<Gf2Poly, Gf2Poly> poly_divmod(const Gf2Poly& a, const Gf2Poly& b) {
    if (b.is_zero()) throw error("poly_divmod: division by zero");
    Gf2Poly q, r = a;
    std::size_t db = *b.degree();
    while (!r.is_zero() && *r.degree() >= db) {
        std::size_t s = *r.degree() - db;
        q.flip(s);
        r ^= b.shifted(s);
    }
    return {q, r};
}

/// Element of GF(2)[x] / (x^m - 1): exactly m coefficient bits, shifts wrap.
class CyclicWord {
  public:
    CyclicWord(int m, BitVec bits) : m_(m), bits_(std::move(bits)) {
        if (static_cast<int>(bits_.size()) != m_) throw error("CyclicWord: bit length != m");
    }
    explicit CyclicWord(int m) : m_(m), bits_(static_cast<std::size_t>(m)) {}

    /// Reduces p mod x^m - 1 (exponents fold mod m).
    static CyclicWord reduce(const Gf2Poly& p, int m) {
        CyclicWord w(m);
        for (std::size_t e : p.support()) w.bits_.flip_bit(e % static_cast<std::size_t>(m));
        return w;
    }

    int m() const { return m_; }
    const BitVec& bits() const { return bits_; }
    bool bit(int e) const { return bits_.bit(static_cast<std::size_t>(e)); }

    CyclicWord& operator^=(const CyclicWord& o) {
        if (o.m_ != m_) throw error("CyclicWord xor: modulus mismatch");
        bits_ ^= o.bits_;
        return *this;
    }
    friend CyclicWord operator^(CyclicWord a, const CyclicWord& b) { return a ^= b; }

    bool operator==(const CyclicWord&) const = default;

    Gf2Poly to_poly() const {
        Gf2Poly p;
        for (int e = 0; e < m_; ++e)
            if (bit(e)) p.flip(static_cast<std::size_t>(e));
        return p;
    }

  private:
    int m_;
    BitVec bits_;

    friend CyclicWord shift_mul(const CyclicWord& w, long long i);
};

/// x^i * w(x) mod x^m - 1; i is taken mod m, negative i allowed.
inline CyclicWord shift_mul(const CyclicWord& w, long long i) {
    int m = w.m();
    int s = static_cast<int>(((i % m) + m) % m);
    if (s == 0) return w;
    CyclicWord r(m);
    for (int e = 0; e < m; ++e)
        if (w.bit(e)) r.bits_.set_bit(static_cast<std::size_t>((e + s) % m));
    return r;
}

inline int weight(const CyclicWord& w) { return w.bits().weight(); }
inline int weight(const BitVec& v) { return v.weight(); }

}  // namespace qcs

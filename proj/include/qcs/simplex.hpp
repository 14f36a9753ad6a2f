#pragma once

#include <algorithm>
#include <vector>

#include "qcs/gf2poly.hpp"

namespace qcs {

/// A validated cyclic simplex [2^k - 1, k, 2^{k-1}] code. Construction checks,
/// by direct enumeration, that the m cyclic shifts of the generator are pairwise
/// distinct and all of weight 2^{k-1}; every downstream distance formula relies
/// on that fact, so it is certified here rather than assumed.
class SimplexCode {
  public:
    static SimplexCode from_generator(const Gf2Poly& g, int k) {
        if (k < 2 || k > 30) throw error("simplex: k out of supported range");
        int m = (1 << k) - 1;
        auto d = g.degree();
        if (!d || static_cast<int>(*d) != m - k)
            throw error("simplex: generator degree must be " + std::to_string(m - k));
        Gf2Poly ring_mod = Gf2Poly::monomial(static_cast<std::size_t>(m)) ^ Gf2Poly::one();
        if (!poly_divmod(ring_mod, g).second.is_zero())
            throw error("simplex: generator does not divide x^m - 1");
        int want = 1 << (k - 1);
        CyclicWord base = CyclicWord::reduce(g, m);
        std::vector<BitVec> shifts;
        shifts.reserve(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            CyclicWord w = shift_mul(base, i);
            if (weight(w) != want)
                throw error("not a simplex generator: shift " + std::to_string(i) + " has weight " +
                            std::to_string(weight(w)) + ", expected " + std::to_string(want));
            shifts.push_back(w.bits());
        }
        std::sort(shifts.begin(), shifts.end());
        if (std::adjacent_find(shifts.begin(), shifts.end()) != shifts.end())
            throw error("not a simplex generator: duplicate cyclic shifts");
        return SimplexCode(g, k, m);
    }

    /// g = (x^m + 1) / h for h of degree k; validation certifies primitivity of h
    /// behaviorally (a non-primitive h fails the shift checks).
    static SimplexCode from_primitive(const Gf2Poly& h) {
        auto dh = h.degree();
        if (!dh || *dh < 2) throw error("simplex: primitive polynomial must have degree >= 2");
        int k = static_cast<int>(*dh);
        int m = (1 << k) - 1;
        Gf2Poly ring_mod = Gf2Poly::monomial(static_cast<std::size_t>(m)) ^ Gf2Poly::one();
        auto [q, r] = poly_divmod(ring_mod, h);
        if (!r.is_zero()) throw error("simplex: h does not divide x^m - 1");
        try {
            return from_generator(q, k);
        } catch (const error&) {
            throw error("simplex: h not primitive");
        }
    }

    int k() const { return k_; }
    int m() const { return m_; }
    int min_distance() const { return 1 << (k_ - 1); }
    const Gf2Poly& generator() const { return g_; }
    CyclicWord generator_word() const { return CyclicWord::reduce(g_, m_); }

    /// The zero word followed by the m distinct shifts x^i g; 2^k words total.
    std::vector<CyclicWord> codewords() const {
        std::vector<CyclicWord> out;
        out.reserve(static_cast<std::size_t>(m_) + 1);
        out.emplace_back(m_);
        CyclicWord base = generator_word();
        for (int i = 0; i < m_; ++i) out.push_back(shift_mul(base, i));
        return out;
    }

    bool operator==(const SimplexCode&) const = default;

  private:
    SimplexCode(Gf2Poly g, int k, int m) : g_(std::move(g)), k_(k), m_(m) {}

    Gf2Poly g_;
    int k_;
    int m_;
};

}  // namespace qcs

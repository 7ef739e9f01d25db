#pragma once

#include "reptiler/quad.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace reptiler {

enum class AngleTag { ALPHA, BETA, GAMMA, DELTA, HALF_PI };

inline const char* angle_tag_name(AngleTag t) {
    switch (t) {
        case AngleTag::ALPHA: return "alpha";
        case AngleTag::BETA: return "beta";
        case AngleTag::GAMMA: return "gamma";
        case AngleTag::DELTA: return "delta";
        default: return "half_pi";
    }
}

/// Rational bracket of angle/pi for a rotor with angle in [0, pi],
/// computed by exact rotor squaring (binary digit extraction). Width is
/// at most 2^-bits; dyadic angles come out exact.
template <class N>
std::pair<Rat, Rat> angle_bracket(const Rotor<N>& rot, int bits) {
    if (rot.s.sign() < 0) throw GeometryError("angle_bracket: angle outside [0, pi]");
    if (rot.s.sign() == 0)
        return rot.c.sign() > 0 ? std::pair<Rat, Rat>{Rat(0), Rat(0)}
                                : std::pair<Rat, Rat>{Rat(1), Rat(1)};
    Rotor<N> r = rot;
    mpz_class p = 0;
    mpz_class one = 1;
    for (int k = 0; k < bits; ++k) {
        bool ident = r.c == r.c.one() && r.s.sign() == 0;
        if (ident) {
            Rat exact(p, one);
            return {exact, exact};
        }
        int bit = r.c.sign() <= 0 ? 1 : 0;
        p = 2 * p + bit;
        r = r * r;
        if (bit) r = Rotor<N>(-r.c, -r.s);
        one *= 2;
    }
    return {Rat(p, one), Rat(p + 1, one)};
}

/// A combinable instance angle: tag, exact rotor, and a rational
/// bracket of its measure as a multiple of pi.
template <class N>
struct AngleToken {
    AngleTag tag;
    Rotor<N> rotor;
    Rat lo, hi;  // measure/pi bracket

    AngleToken(AngleTag t, Rotor<N> r, int bits) : tag(t), rotor(std::move(r)) {
        auto [l, h] = angle_bracket(rotor, bits);
        lo = l;
        hi = h;
    }
};

/// Multiset of angle tags (indexed by the AngleTag order).
struct FillSolution {
    std::array<int, 5> counts{0, 0, 0, 0, 0};

    int& operator[](AngleTag t) { return counts[(size_t)t]; }
    int operator[](AngleTag t) const { return counts[(size_t)t]; }
    int total() const {
        int s = 0;
        for (int c : counts) s += c;
        return s;
    }
    friend bool operator==(const FillSolution&, const FillSolution&) = default;
    friend auto operator<=>(const FillSolution&, const FillSolution&) = default;
};

/// The exact target of a fill: rotor plus a measure/pi bracket (exact
/// for pi and 2 pi).
template <class N>
struct FillTarget {
    Rotor<N> rotor;
    Rat lo, hi;

    static FillTarget pi_like(const N& like) {
        return {Rotor<N>(-like.one(), like.zero()), Rat(1), Rat(1)};
    }
    static FillTarget two_pi_like(const N& like) {
        return {Rotor<N>(like.one(), like.zero()), Rat(2), Rat(2)};
    }
    static FillTarget from_rotor(const Rotor<N>& r, int bits = 12) {
        auto [l, h] = angle_bracket(r, bits);
        return {r, l, h};
    }
};

/// The distinct combinable angles of an instance. When beta = delta =
/// pi/2 the two collapse into a single HALF_PI token.
template <class N>
std::vector<AngleToken<N>> instance_tokens(const QuadSpec<N>& q, int bits = 12) {
    std::vector<AngleToken<N>> out;
    out.emplace_back(AngleTag::ALPHA, q.alpha, bits);
    bool right = q.beta.c.sign() == 0 && q.delta.c.sign() == 0;
    if (right) {
        out.emplace_back(AngleTag::HALF_PI, q.beta, bits);
    } else {
        out.emplace_back(AngleTag::BETA, q.beta, bits);
        out.emplace_back(AngleTag::DELTA, q.delta, bits);
    }
    out.emplace_back(AngleTag::GAMMA, q.gamma, bits);
    return out;
}

namespace detail {

// True sum = target + 2k for the k pinned by the brackets; the fill is
// exact iff k == 0. Bracket widths must leave at most one candidate.
inline bool winding_is_zero(const Rat& sum_lo, const Rat& sum_hi,
                            const Rat& t_lo, const Rat& t_hi) {
    Rat klo2 = sum_lo - t_hi, khi2 = sum_hi - t_lo;
    mpz_class klo = (klo2 / Rat(2)).ceil();
    mpz_class khi = (khi2 / Rat(2)).floor();
    if (klo > khi) throw GeometryError("winding bracket excludes every candidate");
    if (klo != khi) throw GeometryError("winding bracket too wide; raise bits");
    return klo == 0;
}

}  // namespace detail

/// Complete list of angle-tag multisets whose sum is exactly the
/// target. Exactness: rotor product equality plus winding resolution
/// through the rational brackets.
template <class N>
std::vector<FillSolution> enumerate_vertex_fills(const std::vector<AngleToken<N>>& tokens,
                                                 const FillTarget<N>& target) {
    std::vector<FillSolution> out;
    FillSolution cur;
    Rotor<N> ident = Rotor<N>::identity_like(tokens.front().rotor.c);

    auto rec = [&](auto&& self, size_t idx, Rotor<N> prod, Rat lo, Rat hi) -> void {
        if (idx == tokens.size()) {
            if (cur.total() == 0) return;
            if (!(prod == target.rotor)) return;
            if (detail::winding_is_zero(lo, hi, target.lo, target.hi))
                out.push_back(cur);
            return;
        }
        const AngleToken<N>& tk = tokens[idx];
        Rotor<N> p = prod;
        Rat l = lo, h = hi;
        for (int count = 0; count <= 16; ++count) {
            cur[tk.tag] = count;
            self(self, idx + 1, p, l, h);
            p = p * tk.rotor;
            l += tk.lo;
            h += tk.hi;
            if (l > target.hi) break;  // even the lower bound overshoots
        }
        cur[tk.tag] = 0;
    };
    rec(rec, 0, ident, Rat(0), Rat(0));
    std::sort(out.begin(), out.end());
    return out;
}

template <class N>
std::vector<FillSolution> enumerate_vertex_fills(const QuadSpec<N>& q,
                                                 const FillTarget<N>& target) {
    return enumerate_vertex_fills(instance_tokens(q), target);
}

/// Nonnegative integers (p, q, r, s) with p*a + q*b + r*c + s*d = L.
struct EdgeFill {
    int p = 0, q = 0, r = 0, s = 0;
    friend bool operator==(const EdgeFill&, const EdgeFill&) = default;
    friend auto operator<=>(const EdgeFill&, const EdgeFill&) = default;
};

/// Smallest integer k with k >= v, decided exactly.
template <class N>
long upper_int_bound(const N& v) {
    long k = (long)std::ceil(v.to_double()) + 1;
    while ((v.embed_int(k) - v).sign() < 0) ++k;
    while (k > 0 && (v.embed_int(k - 1) - v).sign() >= 0) --k;
    return k;
}

/// The complete set of edge fills of length L, each multiplicity capped
/// by `bound` (default: ceil(L / min side)).
template <class N>
std::vector<EdgeFill> edge_fill_solutions(const QuadSpec<N>& q, const N& L, int bound = -1) {
    if (L.sign() <= 0) throw ParameterOutOfRange("edge fill target must be positive");
    if (bound < 0) {
        N mn = q.a;
        for (const N* side : {&q.b, &q.c, &q.d})
            if ((*side - mn).sign() < 0) mn = *side;
        bound = (int)upper_int_bound(L / mn);
    }
    std::vector<EdgeFill> out;
    const N* sides[4] = {&q.a, &q.b, &q.c, &q.d};
    EdgeFill cur;
    int* slots[4] = {&cur.p, &cur.q, &cur.r, &cur.s};
    auto rec = [&](auto&& self, int idx, const N& acc) -> void {
        if (idx == 4) {
            if (acc == L) out.push_back(cur);
            return;
        }
        N run = acc;
        for (int count = 0; count <= bound; ++count) {
            if (count > 0) {
                run += *sides[idx];
                if ((run - L).sign() > 0) break;
            }
            *slots[idx] = count;
            self(self, idx + 1, run);
        }
        *slots[idx] = 0;
    };
    rec(rec, 0, L.zero());
    std::sort(out.begin(), out.end());
    return out;
}

/// True iff no nonnegative integers p, q satisfy p*alpha + q*pi/2 =
/// gamma. Bounded scan (p*alpha <= 2 pi), exact via rotors + brackets.
template <class N>
bool gamma_not_combination(const QuadSpec<N>& q) {
    AngleToken<N> alpha(AngleTag::ALPHA, q.alpha, 12);
    AngleToken<N> gamma(AngleTag::GAMMA, q.gamma, 12);
    Rotor<N> hpi(q.alpha.c.zero(), q.alpha.c.one());
    Rotor<N> prot = Rotor<N>::identity_like(q.alpha.c);
    for (long p = 0; p <= 8; ++p) {  // alpha > pi/4 bounds p*alpha <= 2 pi
        if (p > 0) prot = prot * q.alpha;
        Rat plo = alpha.lo * Rat(p), phi = alpha.hi * Rat(p);
        if (plo > gamma.hi) break;
        Rotor<N> pq = prot;
        for (long qq = 0; qq <= 2; ++qq) {
            if (qq > 0) pq = pq * hpi;
            Rat lo = plo + Rat(qq, 2), hi = phi + Rat(qq, 2);
            if (lo > gamma.hi) break;
            if (p == 0 && qq == 0) continue;
            if (!(pq == gamma.rotor)) continue;
            if (detail::winding_is_zero(lo, hi, gamma.lo, gamma.hi)) return false;
        }
    }
    return true;
}

}  // namespace reptiler

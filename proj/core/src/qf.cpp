#include "reptiler/qf.hpp"

namespace reptiler {

std::optional<QF> qf_sqrt(const QF& u) {
    if (u.sign() < 0) return std::nullopt;
    const Rat& X = u.x();
    const Rat& Y = u.y();
    unsigned long m = u.radicand();
    if (m == 0 || Y.is_zero()) {
        if (auto r = X.sqrt()) return QF::rational(*r, m);
        if (m != 0) {
            // sqrt(X) = t*sqrt(m) with t = sqrt(X/m)
            if (auto t = (X / Rat((long)m)).sqrt()) return QF(Rat(0), *t, m);
        }
        return std::nullopt;
    }
    // (x + y sqrt m)^2 = X + Y sqrt m  =>  x^2 = (X +- d)/2 with
    // d = sqrt(X^2 - m Y^2), y = Y / (2x).
    Rat disc = X * X - Rat((long)m) * Y * Y;
    auto d = disc.sqrt();
    if (!d) return std::nullopt;
    for (const Rat& x2 : {(X + *d) / Rat(2), (X - *d) / Rat(2)}) {
        if (x2.sign() < 0) continue;
        if (auto x = x2.sqrt()) {
            if (x->is_zero()) continue;
            Rat y = Y / (Rat(2) * *x);
            QF cand(*x, y, m);
            if (cand * cand == u && cand.sign() >= 0) return cand;
            cand = -cand;
            if (cand * cand == u && cand.sign() >= 0) return cand;
        }
    }
    return std::nullopt;
}

std::pair<Rat, Rat> rational_enclosure(const QF& u, const Rat& eps) {
    if (eps.sign() <= 0) throw ParameterOutOfRange("enclosure eps must be positive");
    if (u.radicand() == 0 || u.y().is_zero()) return {u.x(), u.x()};
    // sqrt(m) < isqrt(m) + 1 gives the initial bracket.
    mpz_class bound;
    mpz_class m((unsigned long)u.radicand());
    mpz_sqrt(bound.get_mpz_t(), m.get_mpz_t());
    bound += 1;
    Rat yabs = u.y().abs();
    Rat lo = u.x() - yabs * Rat(bound);
    Rat hi = u.x() + yabs * Rat(bound);
    while (hi - lo > eps) {
        Rat mid = (lo + hi) / Rat(2);
        int c = qf_cmp(u, QF::rational(mid, u.radicand()));
        if (c == 0) return {mid, mid};
        if (c < 0) hi = mid; else lo = mid;
    }
    return {lo, hi};
}

std::pair<Rat, unsigned long> rational_sqrt_normalized(const Rat& v) {
    if (v.sign() < 0) throw ParameterOutOfRange("sqrt of negative rational");
    if (v.is_zero()) return {Rat(0), 0};
    // sqrt(p/q) = sqrt(p*q)/q; p*q = s^2 * m with m square-free.
    mpz_class pq = v.numerator() * v.denominator();
    auto [s, m] = extract_square(pq);
    if (m == 1) return {Rat(s, v.denominator()), 0};
    if (!m.fits_ulong_p()) throw ParameterOutOfRange("radicand too large");
    return {Rat(s, v.denominator()), m.get_ui()};
}

}  // namespace reptiler

#include "reptiler/quad.hpp"

#include <optional>

namespace reptiler {

namespace {

template <class N>
QuadSpec<N> assemble(Point<N> A, Point<N> B, Point<N> C, Point<N> D,
                     N a, N b, N c, N d, Family fam) {
    QuadSpec<N> q{std::move(A), std::move(B), std::move(C), std::move(D),
                  std::move(a), std::move(b), std::move(c), std::move(d),
                  Rotor<N>::identity_like(a), Rotor<N>::identity_like(a),
                  Rotor<N>::identity_like(a), Rotor<N>::identity_like(a), fam};
    q.alpha = angle_at(q, Corner::A);
    q.beta = angle_at(q, Corner::B);
    q.gamma = angle_at(q, Corner::C);
    q.delta = angle_at(q, Corner::D);
    validate_quadspec(q);
    return q;
}

}  // namespace

QuadSpec<QF> build_family1(const Rat& dp) {
    // b = d*sqrt3/2 - 1/2 > 0 needs 3d^2 > 1; a >= d needs d^2 <= 3.
    if (!(Rat(3) * dp * dp > Rat(1)))
        throw ParameterOutOfRange("family (i): need d > 1/sqrt3, got d = " + dp.to_string());
    if (!(dp * dp <= Rat(3)))
        throw ParameterOutOfRange("family (i): need d <= sqrt3, got d = " + dp.to_string());
    Rat half(1, 2);
    QF a(dp * half, half, 3);
    QF b(-half, dp * half, 3);
    QF c = a.one();
    QF d = a.embed(dp);
    QF zero = a.zero();
    Point<QF> A{zero, zero}, B{a, zero}, C{a, b}, D{a.embed(dp * half), QF(Rat(0), dp * half, 3)};
    return assemble(A, B, C, D, a, b, c, d, Family::FAMILY_I);
}

QuadSpec<QF> build_family3(const Rat& bp) {
    if (!(bp > Rat(0) && bp < Rat(1)))
        throw ParameterOutOfRange("family (iii): need 0 < b < 1, got b = " + bp.to_string());
    auto [coef, m] = rational_sqrt_normalized(Rat(2) - bp * bp);
    QF a = m == 0 ? QF::rational(coef, 0) : QF(Rat(0), coef, m);
    return build_family3_ab(a, a.embed(bp));
}

QuadSpec<QF> build_family3_ab(const QF& ap, const QF& bp) {
    QF two = ap.embed_int(2);
    if (ap * ap + bp * bp != two)
        throw ParameterOutOfRange("family (iii): a^2 + b^2 = 2 violated");
    if (!(bp.sign() > 0 && bp < ap.one()))
        throw ParameterOutOfRange("family (iii): need 0 < b < 1");
    QF zero = ap.zero(), one = ap.one();
    // delta = pi/2 and |DA| = |DC| = 1 force D = ((a-b)/2, (a+b)/2).
    Point<QF> A{zero, zero}, B{ap, zero}, C{ap, bp},
        D{(ap - bp) / two, (ap + bp) / two};
    return assemble(A, B, C, D, ap, bp, one, one, Family::FAMILY_III);
}

QuadSpec<QFTower> build_family2(const Rat& ap) {
    // d^2 - a d + (a^2 - 3) = 0, from |BD| = sqrt3 (circumradius 1) and
    // the law of cosines at alpha = pi/3.
    Rat disc = Rat(12) - Rat(3) * ap * ap;
    if (disc.sign() < 0)
        throw NoValidRoot("family (ii): no real root for a = " + ap.to_string());
    auto [coef, m_in] = rational_sqrt_normalized(disc);

    // Tower scalar: Q(sqrt(m_in)) extended by sqrt3. When the root of
    // the discriminant itself involves sqrt3 it folds into the outer
    // extension and the inner field collapses to Q.
    unsigned long inner_m = (m_in == 3) ? 0 : m_in;
    auto inner = [&](const Rat& r) { return QF::rational(r, inner_m); };
    auto lift = [&](const Rat& r) { return QFTower(inner(r), inner(0), 3); };

    QFTower zero = lift(0), one = lift(1), two = lift(2), half = lift(Rat(1, 2));
    QFTower a = lift(ap);
    QFTower sqrt3 = one.root();
    QFTower sqrt_disc =
        m_in == 3   ? QFTower(inner(0), inner(coef), 3)
        : m_in == 0 ? lift(coef)
                    : QFTower(QF(Rat(0), coef, inner_m), inner(0), 3);

    std::optional<QFTower> d;
    for (int s : {+1, -1}) {
        QFTower cand = (s > 0 ? a + sqrt_disc : a - sqrt_disc) * half;
        if ((cand - one).sign() > 0 && (a - cand).sign() >= 0) {
            d = cand;
            break;
        }
    }
    if (!d)
        throw NoValidRoot("family (ii): no root d with 1 < d <= a for a = " + ap.to_string());

    // A at the origin, alpha = pi/3 at A: D = d (1/2, sqrt3/2).
    Point<QFTower> A{zero, zero}, B{a, zero};
    Point<QFTower> D{*d * half, *d * sqrt3 * half};
    // C: apex of the isosceles triangle on B, D with legs 1. |BD| = sqrt3
    // exactly, so C = midpoint(B, D) + rot90(D - B) / (2 sqrt3).
    if (dot(D - B, D - B) != lift(3))
        throw GeometryError("family (ii): |BD| != sqrt3");
    Point<QFTower> M{(B.x + D.x) / two, (B.y + D.y) / two};
    QFTower scale = one / (two * sqrt3);
    Point<QFTower> off{-scale * (D.y - B.y), scale * (D.x - B.x)};
    Point<QFTower> C = M + off;
    if (orientation(B, C, D) <= 0) C = M - off;

    return assemble(A, B, C, D, a, one, one, *d, Family::FAMILY_II);
}

}  // namespace reptiler

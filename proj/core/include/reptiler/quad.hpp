#pragma once

#include "reptiler/geom.hpp"

namespace reptiler {

class NoValidRoot : public Error {
public:
    explicit NoValidRoot(const std::string& what) : Error(what) {}
};

class WrongFamily : public Error {
public:
    explicit WrongFamily(const std::string& what) : Error(what) {}
};

class NormalizationOutOfField : public Error {
public:
    NormalizationOutOfField() : Error("edge length is not field-valued") {}
};

enum class Family { TRAPEZOID, FAMILY_I, FAMILY_II, FAMILY_III, OTHER };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::TRAPEZOID: return "TRAPEZOID";
        case Family::FAMILY_I: return "FAMILY_I";
        case Family::FAMILY_II: return "FAMILY_II";
        case Family::FAMILY_III: return "FAMILY_III";
        default: return "OTHER";
    }
}

enum class Corner { A, B, C, D };

/// A concrete cyclic quadrilateral with the labeling conventions:
/// vertices A,B,C,D counterclockwise carrying angles alpha..delta,
/// sides a=|AB|, b=|BC|, c=|CD|, d=|DA|, alpha a smallest angle, a >= d.
template <class N>
struct QuadSpec {
    Point<N> A, B, C, D;
    N a, b, c, d;
    Rotor<N> alpha, beta, gamma, delta;
    Family family = Family::OTHER;

    Polygon<N> polygon() const { return Polygon<N>{{A, B, C, D}}; }

    const Point<N>& vertex(Corner v) const {
        switch (v) {
            case Corner::A: return A;
            case Corner::B: return B;
            case Corner::C: return C;
            default: return D;
        }
    }
    const Rotor<N>& angle(Corner v) const {
        switch (v) {
            case Corner::A: return alpha;
            case Corner::B: return beta;
            case Corner::C: return gamma;
            default: return delta;
        }
    }
};

/// Exact interior angle rotor at a vertex, from the incident edges and
/// the stored side lengths (which must match the edges exactly).
template <class N>
Rotor<N> angle_at(const QuadSpec<N>& q, Corner v) {
    const Point<N>*prev, *next;
    const N *lp, *ln;
    switch (v) {
        case Corner::A: prev = &q.D; next = &q.B; lp = &q.d; ln = &q.a; break;
        case Corner::B: prev = &q.A; next = &q.C; lp = &q.a; ln = &q.b; break;
        case Corner::C: prev = &q.B; next = &q.D; lp = &q.b; ln = &q.c; break;
        default:        prev = &q.C; next = &q.A; lp = &q.c; ln = &q.d; break;
    }
    const Point<N>& at = q.vertex(v);
    Point<N> n = *next - at, p = *prev - at;
    if (dot(n, n) != *ln * *ln || dot(p, p) != *lp * *lp)
        throw NormalizationOutOfField();
    N len = *ln * *lp;
    return Rotor<N>(dot(n, p) / len, cross(n, p) / len);
}

/// All QuadSpec invariants: a valid CCW quadrilateral, sides matching
/// vertex distances, rotor identities of a cyclic quadrilateral, and
/// the labeling conventions.
template <class N>
void validate_quadspec(const QuadSpec<N>& q) {
    validate_polygon(q.polygon());
    if (dot(q.B - q.A, q.B - q.A) != q.a * q.a) throw GeometryError("side a mismatch");
    if (dot(q.C - q.B, q.C - q.B) != q.b * q.b) throw GeometryError("side b mismatch");
    if (dot(q.D - q.C, q.D - q.C) != q.c * q.c) throw GeometryError("side c mismatch");
    if (dot(q.A - q.D, q.A - q.D) != q.d * q.d) throw GeometryError("side d mismatch");
    for (Corner v : {Corner::A, Corner::B, Corner::C, Corner::D}) {
        Rotor<N> r = angle_at(q, v);
        if (r != q.angle(v)) throw GeometryError("stored angle rotor mismatch");
        if (r.s.sign() <= 0) throw GeometryError("interior angle not in (0, pi)");
    }
    // cyclic: gamma = pi - alpha, delta = pi - beta
    if (q.gamma.c != -q.alpha.c || q.gamma.s != q.alpha.s)
        throw GeometryError("not cyclic: alpha + gamma != pi");
    if (q.delta.c != -q.beta.c || q.delta.s != q.beta.s)
        throw GeometryError("not cyclic: beta + delta != pi");
    // labeling: alpha is a smallest angle (largest cosine), a >= d
    if ((q.alpha.c - q.beta.c).sign() < 0 || (q.alpha.c - q.delta.c).sign() < 0)
        throw GeometryError("labeling: alpha is not a smallest angle");
    if ((q.a - q.d).sign() < 0) throw GeometryError("labeling: a < d");
}

/// Family bucket of the instance. Trapezoids take precedence, then
/// (i), (ii), (iii) in order.
template <class N>
Family classify(const QuadSpec<N>& q) {
    if (cross(q.B - q.A, q.D - q.C).sign() == 0 ||
        cross(q.C - q.B, q.A - q.D).sign() == 0)
        return Family::TRAPEZOID;
    N half = q.a.one() / q.a.embed_int(2);
    bool alpha_third = q.alpha.c == half;          // alpha = pi/3
    bool beta_right = q.beta.c.sign() == 0;        // beta = pi/2
    bool delta_right = q.delta.c.sign() == 0;
    if (alpha_third && beta_right && delta_right) return Family::FAMILY_I;
    if (alpha_third && q.b == q.c) return Family::FAMILY_II;
    if (beta_right && delta_right && q.c == q.d) return Family::FAMILY_III;
    return Family::OTHER;
}

/// Lemma: a >= d > b and a > c.
template <class N>
bool lemma1_holds(const QuadSpec<N>& q) {
    return (q.a - q.d).sign() >= 0 && (q.d - q.b).sign() > 0 && (q.a - q.c).sign() > 0;
}

/// Lemma: c >= d implies beta < 2*alpha. Decided on cosines:
/// beta < 2*alpha iff cos(beta) > cos(2*alpha) = 2*cos^2(alpha) - 1,
/// valid while both angles lie in (0, pi).
template <class N>
bool lemma2_holds(const QuadSpec<N>& q) {
    if ((q.c - q.d).sign() < 0) return true;   // vacuous
    if (q.alpha.c.sign() <= 0) return true;    // alpha >= pi/2, so 2*alpha >= pi > beta
    N cos2a = q.alpha.c * q.alpha.c + q.alpha.c * q.alpha.c - q.a.one();
    return (q.beta.c - cos2a).sign() > 0;
}

/// Family (i): alpha = pi/3, beta = delta = pi/2, c = 1, parameterized
/// by the rational length d in (1/sqrt3, sqrt3]. Lives in Q(sqrt3).
QuadSpec<QF> build_family1(const Rat& d_param);

/// Family (iii): c = d = 1, beta = delta = pi/2, a^2 + b^2 = 2,
/// parameterized by rational b in (0, 1). Field: Q(sqrt(2 - b^2)-part).
QuadSpec<QF> build_family3(const Rat& b_param);

/// Family (iii) from an exact (a, b) pair with a^2 + b^2 = 2.
QuadSpec<QF> build_family3_ab(const QF& a_param, const QF& b_param);

/// Family (ii): b = c = 1, alpha = pi/3, gamma = 2pi/3; d solves
/// a^2 - a d + d^2 = 3 with 1 < d <= a. Coordinates and angle data need
/// sqrt3 on top of the field of d, hence the tower scalar.
QuadSpec<QFTower> build_family2(const Rat& a_param);

}  // namespace reptiler

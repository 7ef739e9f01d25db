#pragma once

#include "reptiler/qf.hpp"

#include <algorithm>
#include <optional>
#include <variant>
#include <vector>

namespace reptiler {

class GeometryError : public Error {
public:
    explicit GeometryError(const std::string& what) : Error(what) {}
};

template <class N>
struct Point {
    N x, y;

    friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
    Point operator-() const { return {-x, -y}; }
    friend Point operator*(const N& s, const Point& p) { return {s * p.x, s * p.y}; }
    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

template <class N>
N dot(const Point<N>& a, const Point<N>& b) { return a.x * b.x + a.y * b.y; }

template <class N>
N cross(const Point<N>& a, const Point<N>& b) { return a.x * b.y - a.y * b.x; }

/// Lexicographic order, x first. The search's canonical-corner rule.
template <class N>
int lex_cmp(const Point<N>& a, const Point<N>& b) {
    int c = (a.x - b.x).sign();
    if (c != 0) return c;
    return (a.y - b.y).sign();
}

/// Exact rotation: (cos, sin) with c^2 + s^2 = 1. Products add angles.
template <class N>
struct Rotor {
    N c, s;

    Rotor(N c_, N s_) : c(std::move(c_)), s(std::move(s_)) {
        if (c.one() != c * c + s * s)
            throw GeometryError("rotor is not unit-norm");
    }

    static Rotor identity_like(const N& like) { return Rotor(like.one(), like.zero()); }

    Point<N> apply(const Point<N>& p) const { return {c * p.x - s * p.y, s * p.x + c * p.y}; }
    Rotor inverse() const { return Rotor(c, -s); }

    friend Rotor operator*(const Rotor& a, const Rotor& b) {
        return Rotor(a.c * b.c - a.s * b.s, a.s * b.c + a.c * b.s);
    }
    friend bool operator==(const Rotor& a, const Rotor& b) { return a.c == b.c && a.s == b.s; }
    friend bool operator!=(const Rotor& a, const Rotor& b) { return !(a == b); }
};

template <class N>
Rotor<N> rotor_compose(const Rotor<N>& r1, const Rotor<N>& r2) { return r1 * r2; }
template <class N>
Rotor<N> rotor_invert(const Rotor<N>& r) { return r.inverse(); }

/// Reflection across the x-axis (optional), then rotation, then translation.
template <class N>
struct Isometry {
    Rotor<N> rot;
    Point<N> translate;
    bool reflect = false;

    Point<N> apply(const Point<N>& p) const {
        Point<N> q = reflect ? Point<N>{p.x, -p.y} : p;
        return rot.apply(q) + translate;
    }

    Isometry inverse() const {
        Rotor<N> r = reflect ? rot : rot.inverse();
        Point<N> mt = reflect ? Point<N>{translate.x, -translate.y} : translate;
        return {r, -r.apply(mt), reflect};
    }

    /// (a.compose(b))(p) == a(b(p)).
    Isometry compose(const Isometry& b) const {
        Rotor<N> rb = reflect ? b.rot.inverse() : b.rot;
        Point<N> tb = reflect ? Point<N>{b.translate.x, -b.translate.y} : b.translate;
        return {rot * rb, rot.apply(tb) + translate, reflect != b.reflect};
    }

    friend bool operator==(const Isometry& a, const Isometry& b) {
        return a.reflect == b.reflect && a.rot == b.rot && a.translate == b.translate;
    }
};

template <class N>
struct Segment {
    Point<N> a, b;
};

/// Sign of the turn a->b->c: +1 left, -1 right, 0 collinear.
template <class N>
int orientation(const Point<N>& a, const Point<N>& b, const Point<N>& c) {
    return cross(b - a, c - a).sign();
}

/// True iff p lies on segment [a, b] (endpoints included).
template <class N>
bool on_segment(const Point<N>& p, const Point<N>& a, const Point<N>& b) {
    if (orientation(a, b, p) != 0) return false;
    return dot(p - a, p - b).sign() <= 0;
}

struct SegDisjoint {};
template <class N> struct SegTouch { Point<N> at; };
template <class N> struct SegOverlap { Segment<N> common; };
template <class N> struct SegCross { Point<N> at; };
template <class N>
using SegmentRelation = std::variant<SegDisjoint, SegTouch<N>, SegOverlap<N>, SegCross<N>>;

/// Intersection point of the (non-parallel) supporting lines.
template <class N>
Point<N> line_intersection(const Segment<N>& s1, const Segment<N>& s2) {
    Point<N> d1 = s1.b - s1.a, d2 = s2.b - s2.a;
    N denom = cross(d1, d2);
    if (denom.sign() == 0) throw GeometryError("parallel lines do not meet");
    N t = cross(s2.a - s1.a, d2) / denom;
    return s1.a + Point<N>{t * d1.x, t * d1.y};
}

template <class N>
SegmentRelation<N> segment_relation(const Segment<N>& s1, const Segment<N>& s2) {
    int d1 = orientation(s2.a, s2.b, s1.a);
    int d2 = orientation(s2.a, s2.b, s1.b);
    int d3 = orientation(s1.a, s1.b, s2.a);
    int d4 = orientation(s1.a, s1.b, s2.b);

    if (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0) {
        // Collinear: compare along the dominant axis.
        auto key = [&](const Point<N>& p) -> const N& {
            return (s1.a.x - s1.b.x).sign() != 0 ? p.x : p.y;
        };
        const Point<N>*lo1 = &s1.a, *hi1 = &s1.b, *lo2 = &s2.a, *hi2 = &s2.b;
        if ((key(*lo1) - key(*hi1)).sign() > 0) std::swap(lo1, hi1);
        if ((key(*lo2) - key(*hi2)).sign() > 0) std::swap(lo2, hi2);
        const Point<N>* lo = (key(*lo1) - key(*lo2)).sign() >= 0 ? lo1 : lo2;
        const Point<N>* hi = (key(*hi1) - key(*hi2)).sign() <= 0 ? hi1 : hi2;
        int c = (key(*lo) - key(*hi)).sign();
        if (c > 0) return SegDisjoint{};
        if (c == 0) return SegTouch<N>{*lo};
        return SegOverlap<N>{Segment<N>{*lo, *hi}};
    }
    if (d1 * d2 < 0 && d3 * d4 < 0)
        return SegCross<N>{line_intersection(s1, s2)};
    if (d1 == 0 && on_segment(s1.a, s2.a, s2.b)) return SegTouch<N>{s1.a};
    if (d2 == 0 && on_segment(s1.b, s2.a, s2.b)) return SegTouch<N>{s1.b};
    if (d3 == 0 && on_segment(s2.a, s1.a, s1.b)) return SegTouch<N>{s2.a};
    if (d4 == 0 && on_segment(s2.b, s1.a, s1.b)) return SegTouch<N>{s2.b};
    return SegDisjoint{};
}

template <class N>
struct Polygon {
    std::vector<Point<N>> vertices;

    size_t size() const { return vertices.size(); }
    const Point<N>& operator[](size_t i) const { return vertices[i % vertices.size()]; }
    Segment<N> edge(size_t i) const { return {(*this)[i], (*this)[i + 1]}; }
};

/// Twice the signed shoelace sum (positive for CCW).
template <class N>
N signed_area_doubled(const Polygon<N>& p) {
    N acc = p.vertices.front().x.zero();
    for (size_t i = 0; i < p.size(); ++i)
        acc += cross(p[i], p[i + 1]);
    return acc;
}

template <class N>
N polygon_area(const Polygon<N>& p) {
    N two = p.vertices.front().x.embed_int(2);
    return signed_area_doubled(p) / two;
}

/// Full validity: >= 3 vertices, CCW, no 3 consecutive collinear, simple.
template <class N>
void validate_polygon(const Polygon<N>& p) {
    size_t n = p.size();
    if (n < 3) throw GeometryError("polygon needs at least 3 vertices");
    for (size_t i = 0; i < n; ++i)
        if (p[i] == p[i + 1]) throw GeometryError("repeated consecutive vertex");
    if (signed_area_doubled(p).sign() <= 0)
        throw GeometryError("polygon is not counterclockwise");
    for (size_t i = 0; i < n; ++i)
        if (orientation(p[i], p[i + 1], p[i + 2]) == 0)
            throw GeometryError("three consecutive collinear vertices");
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            auto rel = segment_relation(p.edge(i), p.edge(j));
            if (adjacent) {
                // Sharing exactly the common endpoint is the only option.
                if (std::holds_alternative<SegOverlap<N>>(rel))
                    throw GeometryError("adjacent edges overlap");
                continue;
            }
            if (!std::holds_alternative<SegDisjoint>(rel))
                throw GeometryError("polygon self-intersects");
        }
    }
}

enum class Location { INSIDE, BOUNDARY, OUTSIDE };

template <class N>
Location point_location(const Point<N>& p, const Polygon<N>& poly) {
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i)
        if (on_segment(p, poly[i], poly[i + 1])) return Location::BOUNDARY;
    // Even-odd ray cast towards +x with half-open vertical rule.
    int crossings = 0;
    for (size_t i = 0; i < n; ++i) {
        const Point<N>&a = poly[i], &b = poly[i + 1];
        bool a_above = (a.y - p.y).sign() > 0;
        bool b_above = (b.y - p.y).sign() > 0;
        if (a_above == b_above) continue;
        // x coordinate where the edge meets the horizontal through p
        N t = (p.y - a.y) / (b.y - a.y);
        N xhit = a.x + t * (b.x - a.x);
        if ((xhit - p.x).sign() > 0) crossings ^= 1;
    }
    return crossings ? Location::INSIDE : Location::OUTSIDE;
}

template <class N>
Point<N> centroid(const Polygon<N>& p) {
    Point<N> acc{p.vertices.front().x.zero(), p.vertices.front().x.zero()};
    for (const auto& v : p.vertices) acc = acc + v;
    N n = acc.x.embed_int((long)p.size());
    return {acc.x / n, acc.y / n};
}

/// Image polygon; a reflection reverses vertex order to keep CCW.
template <class N>
Polygon<N> apply_isometry(const Isometry<N>& g, const Polygon<N>& p) {
    Polygon<N> out;
    out.vertices.reserve(p.size());
    for (const auto& v : p.vertices) out.vertices.push_back(g.apply(v));
    if (g.reflect) std::reverse(out.vertices.begin(), out.vertices.end());
    return out;
}

/// True iff the two polygons are equal as cyclic vertex sequences.
template <class N>
bool cyclic_equal(const Polygon<N>& a, const Polygon<N>& b) {
    if (a.size() != b.size()) return false;
    size_t n = a.size();
    for (size_t off = 0; off < n; ++off) {
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i)
            if (a[i] != b[i + off]) ok = false;
        if (ok) return true;
    }
    return false;
}

/// An isometry g with apply_isometry(g, proto) == p (as cyclic sequences),
/// if one exists. Reflections are tried only when allowed.
template <class N>
std::optional<Isometry<N>> congruence(const Polygon<N>& p, const Polygon<N>& proto,
                                      bool allow_reflection) {
    if (p.size() != proto.size()) return std::nullopt;
    size_t n = p.size();
    for (int refl = 0; refl <= (allow_reflection ? 1 : 0); ++refl) {
        // Source vertices after the optional x-axis reflection (CCW restored).
        std::vector<Point<N>> src;
        src.reserve(n);
        if (refl) {
            for (size_t i = 0; i < n; ++i) {
                const Point<N>& v = proto.vertices[n - 1 - i];
                src.push_back({v.x, -v.y});
            }
        } else {
            src = proto.vertices;
        }
        Point<N> u = src[1] - src[0];
        N ulen2 = dot(u, u);
        for (size_t off = 0; off < n; ++off) {
            Point<N> v = p[off + 1] - p[off];
            if (dot(v, v) != ulen2) continue;
            // Rotor taking direction u to direction v: v/u as complex division.
            N c = dot(u, v) / ulen2;
            N s = cross(u, v) / ulen2;
            Rotor<N> r{c, s};
            Point<N> t = p[off] - r.apply(src[0]);
            bool ok = true;
            for (size_t i = 0; i < n && ok; ++i) {
                Point<N> img = r.apply(src[i]) + t;
                if (img != p[off + i]) ok = false;
            }
            if (ok) {
                Isometry<N> g{r, t, refl != 0};
                if (cyclic_equal(apply_isometry(g, proto), p)) return g;
            }
        }
    }
    return std::nullopt;
}

}  // namespace reptiler

#pragma once

#include "reptiler/geom.hpp"

#include <map>
#include <utility>

namespace reptiler {

class ContainmentViolation : public GeometryError {
public:
    ContainmentViolation() : GeometryError("subtracted polygon exits the region") {}
};

/// One connected piece: outer loop (CCW) plus hole loops (CW).
template <class N>
struct Face {
    Polygon<N> outer;
    std::vector<Polygon<N>> holes;
};

/// Finite union of faces with pairwise disjoint interiors. Holes may
/// touch their outer loop at isolated points (pockets sealed by tiles).
template <class N>
struct Region {
    std::vector<Face<N>> faces;

    bool empty() const { return faces.empty(); }
};

template <class N>
Region<N> region_from_polygon(Polygon<N> poly) {
    Region<N> r;
    r.faces.push_back(Face<N>{std::move(poly), {}});
    return r;
}

template <class N>
N region_area(const Region<N>& r, const N& zero_like) {
    N acc = zero_like.zero();
    N two = zero_like.embed_int(2);
    for (const auto& f : r.faces) {
        acc += signed_area_doubled(f.outer) / two;
        for (const auto& h : f.holes) acc += signed_area_doubled(h) / two;  // CW: negative
    }
    return acc;
}

template <class N>
Location region_point_location(const Point<N>& p, const Region<N>& r) {
    bool boundary = false;
    for (const auto& f : r.faces) {
        Location lo = point_location(p, f.outer);
        if (lo == Location::BOUNDARY) { boundary = true; continue; }
        if (lo == Location::OUTSIDE) continue;
        bool in_hole = false;
        for (const auto& h : f.holes) {
            Location lh = point_location(p, h);
            if (lh == Location::BOUNDARY) { boundary = true; in_hole = true; break; }
            if (lh == Location::INSIDE) { in_hole = true; break; }
        }
        if (!in_hole) return Location::INSIDE;
    }
    return boundary ? Location::BOUNDARY : Location::OUTSIDE;
}

namespace detail {

template <class N>
struct PointLess {
    bool operator()(const Point<N>& a, const Point<N>& b) const { return lex_cmp(a, b) < 0; }
};

template <class N>
struct DirectedFrag {
    Point<N> a, b;
    bool from_region;  // false: reversed edge of the subtracted polygon
};

// All directed boundary edges of the region (interior on the left).
template <class N>
std::vector<Segment<N>> region_edges(const Region<N>& r) {
    std::vector<Segment<N>> out;
    for (const auto& f : r.faces) {
        for (size_t i = 0; i < f.outer.size(); ++i) out.push_back(f.outer.edge(i));
        for (const auto& h : f.holes)
            for (size_t i = 0; i < h.size(); ++i) out.push_back(h.edge(i));
    }
    return out;
}

// Splits each edge at every intersection with edges of the other side.
template <class N>
std::vector<DirectedFrag<N>> split_edges(const std::vector<Segment<N>>& region_side,
                                         const std::vector<Segment<N>>& poly_side) {
    std::vector<DirectedFrag<N>> frags;
    auto emit = [&](const Segment<N>& e, const std::vector<Segment<N>>& others,
                    bool from_region) {
        std::vector<Point<N>> cuts{e.a, e.b};
        for (const auto& o : others) {
            auto rel = segment_relation(e, o);
            if (auto* t = std::get_if<SegTouch<N>>(&rel)) {
                cuts.push_back(t->at);
            } else if (auto* c = std::get_if<SegCross<N>>(&rel)) {
                cuts.push_back(c->at);
            } else if (auto* v = std::get_if<SegOverlap<N>>(&rel)) {
                cuts.push_back(v->common.a);
                cuts.push_back(v->common.b);
            }
        }
        Point<N> d = e.b - e.a;
        std::sort(cuts.begin(), cuts.end(), [&](const Point<N>& p, const Point<N>& q) {
            return (dot(p - e.a, d) - dot(q - e.a, d)).sign() < 0;
        });
        for (size_t i = 0; i + 1 < cuts.size(); ++i) {
            if (cuts[i] == cuts[i + 1]) continue;
            frags.push_back(DirectedFrag<N>{cuts[i], cuts[i + 1], from_region});
        }
    };
    for (const auto& e : region_side) emit(e, poly_side, true);
    for (const auto& e : poly_side) emit(e, region_side, false);
    return frags;
}

// True iff angle(ref -> d1) < angle(ref -> d2), angles measured CCW in (0, 2*pi].
template <class N>
bool ccw_angle_less(const Point<N>& ref, const Point<N>& d1, const Point<N>& d2) {
    auto cls = [&](const Point<N>& d) {
        int cr = cross(ref, d).sign();
        if (cr > 0) return 1;               // (0, pi)
        if (cr == 0) return dot(ref, d).sign() < 0 ? 2 : 4;  // pi, or full turn
        return 3;                           // (pi, 2*pi)
    };
    int c1 = cls(d1), c2 = cls(d2);
    if (c1 != c2) return c1 < c2;
    if (c1 == 2 || c1 == 4) return false;
    return cross(d1, d2).sign() > 0;
}

template <class N>
std::vector<Polygon<N>> walk_loops(std::vector<DirectedFrag<N>> frags) {
    using Pt = Point<N>;
    std::map<Pt, std::vector<size_t>, PointLess<N>> outgoing;
    for (size_t i = 0; i < frags.size(); ++i) outgoing[frags[i].a].push_back(i);
    std::vector<bool> used(frags.size(), false);

    std::vector<Polygon<N>> loops;
    for (size_t start = 0; start < frags.size(); ++start) {
        if (used[start]) continue;
        std::vector<Pt> path;
        size_t cur = start;
        while (!used[cur]) {
            used[cur] = true;
            path.push_back(frags[cur].a);
            const Pt& v = frags[cur].b;
            Pt ref = frags[cur].a - v;  // reverse of incoming direction
            auto it = outgoing.find(v);
            if (it == outgoing.end())
                throw GeometryError("boundary walk dead-ends (inconsistent fragments)");
            size_t best = SIZE_MAX;
            for (size_t cand : it->second) {
                if (used[cand] && cand != start) continue;
                if (best == SIZE_MAX) { best = cand; continue; }
                Pt db = frags[best].b - frags[best].a;
                Pt dc = frags[cand].b - frags[cand].a;
                // Keep the largest CCW angle from ref (tightest turn
                // into the face kept on the left).
                if (ccw_angle_less(ref, db, dc)) best = cand;
            }
            if (best == SIZE_MAX)
                throw GeometryError("boundary walk dead-ends (no outgoing fragment)");
            if (best == start) break;
            cur = best;
        }
        // Merge collinear chains introduced by splitting, but keep any
        // vertex the path visits twice (pinch points split later).
        std::map<Pt, int, PointLess<N>> count;
        for (const auto& v : path) count[v]++;
        std::vector<Pt> clean;
        size_t n = path.size();
        for (size_t i = 0; i < n; ++i) {
            const Pt& prev = path[(i + n - 1) % n];
            const Pt& here = path[i];
            const Pt& next = path[(i + 1) % n];
            if (count[here] > 1 || orientation(prev, here, next) != 0) clean.push_back(here);
        }
        if (clean.size() >= 3) loops.push_back(Polygon<N>{std::move(clean)});
    }
    return loops;
}

// Drops pass-through vertices left over after pinch splitting.
template <class N>
void merge_collinear(Polygon<N>& p) {
    std::vector<Point<N>> clean;
    size_t n = p.size();
    for (size_t i = 0; i < n; ++i) {
        if (orientation(p[i + n - 1], p[i], p[i + 1]) != 0) clean.push_back(p[i]);
    }
    p.vertices = std::move(clean);
}

// Splits weakly simple loops (a vertex visited twice) into simple ones.
template <class N>
void split_repeated_vertices(std::vector<Polygon<N>>& loops) {
    for (size_t li = 0; li < loops.size(); ++li) {
        bool again = true;
        while (again) {
            again = false;
            auto& vs = loops[li].vertices;  // refetch: loops may reallocate
            std::map<Point<N>, size_t, PointLess<N>> seen;
            for (size_t i = 0; i < vs.size(); ++i) {
                auto [it, inserted] = seen.emplace(vs[i], i);
                if (inserted) continue;
                size_t j = it->second;
                std::vector<Point<N>> sub(vs.begin() + j, vs.begin() + i);
                vs.erase(vs.begin() + j, vs.begin() + i);
                if (sub.size() >= 3) loops.push_back(Polygon<N>{std::move(sub)});
                again = true;
                break;
            }
        }
    }
    for (auto& lp : loops) merge_collinear(lp);
    std::erase_if(loops, [](const Polygon<N>& p) {
        return p.size() < 3 || signed_area_doubled(p).sign() == 0;
    });
}

}  // namespace detail

/// True iff poly is contained in the region (boundary contact allowed).
template <class N>
bool region_contains_polygon(const Region<N>& r, const Polygon<N>& poly);

/// Exact set difference r \ poly. Requires poly contained in r
/// (boundary contact allowed); throws ContainmentViolation otherwise.
template <class N>
Region<N> region_difference(const Region<N>& r, const Polygon<N>& poly) {
    using detail::DirectedFrag;
    std::vector<Segment<N>> redges = detail::region_edges(r);
    std::vector<Segment<N>> pedges;
    for (size_t i = 0; i < poly.size(); ++i) {
        auto e = poly.edge(i);
        pedges.push_back(Segment<N>{e.b, e.a});  // reversed: kept side on the left
    }

    std::vector<DirectedFrag<N>> frags = detail::split_edges(redges, pedges);
    N two = poly.vertices.front().x.embed_int(2);

    std::vector<DirectedFrag<N>> kept;
    for (const auto& f : frags) {
        Point<N> mid{(f.a.x + f.b.x) / two, (f.a.y + f.b.y) / two};
        if (f.from_region) {
            Location lo = point_location(mid, poly);
            if (lo == Location::INSIDE) throw ContainmentViolation();
            if (lo == Location::OUTSIDE) kept.push_back(f);
            // on the polygon boundary: cancelled by the reversed edge
        } else {
            Location lo = region_point_location(mid, r);
            if (lo == Location::OUTSIDE) throw ContainmentViolation();
            if (lo == Location::INSIDE) { kept.push_back(f); continue; }
            // Lies along the region boundary: legal only against an
            // opposite-running region edge (polygon inside, touching).
            Point<N> d = f.b - f.a;
            bool matched = false;
            for (const auto& re : redges) {
                if (!on_segment(f.a, re.a, re.b) || !on_segment(f.b, re.a, re.b)) continue;
                if (dot(d, re.b - re.a).sign() > 0) throw ContainmentViolation();
                matched = true;
                break;
            }
            if (!matched) throw GeometryError("boundary fragment not on any region edge");
        }
    }

    std::vector<Polygon<N>> loops = detail::walk_loops(std::move(kept));
    detail::split_repeated_vertices(loops);

    // Outer loops are CCW, holes CW; attach each hole to the smallest
    // containing outer loop.
    Region<N> out;
    std::vector<Polygon<N>> holes;
    std::vector<N> outer_areas;
    for (auto& lp : loops) {
        if (signed_area_doubled(lp).sign() > 0) {
            outer_areas.push_back(signed_area_doubled(lp));
            out.faces.push_back(Face<N>{std::move(lp), {}});
        } else {
            holes.push_back(std::move(lp));
        }
    }
    for (auto& h : holes) {
        size_t best = SIZE_MAX;
        for (size_t i = 0; i < out.faces.size(); ++i) {
            bool inside = true;
            for (const auto& v : h.vertices)
                if (point_location(v, out.faces[i].outer) == Location::OUTSIDE) {
                    inside = false;
                    break;
                }
            if (!inside) continue;
            if (best == SIZE_MAX || (outer_areas[i] - outer_areas[best]).sign() < 0) best = i;
        }
        if (best == SIZE_MAX) throw GeometryError("hole without a containing face");
        out.faces[best].holes.push_back(std::move(h));
    }
    return out;
}

template <class N>
bool region_contains_polygon(const Region<N>& r, const Polygon<N>& poly) {
    try {
        (void)region_difference(r, poly);
        return true;
    } catch (const ContainmentViolation&) {
        return false;
    }
}

}  // namespace reptiler

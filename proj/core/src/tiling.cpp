#include "reptiler/tiling.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace reptiler {

namespace {

// Canonical cyclic form: rotated so the lexicographically smallest
// vertex comes first. Used for dedup and deterministic ordering.
std::vector<PointQ> canonical_cycle(const PolyQ& p) {
    size_t n = p.size(), best = 0;
    for (size_t i = 1; i < n; ++i)
        if (lex_cmp(p.vertices[i], p.vertices[best]) < 0) best = i;
    std::vector<PointQ> out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) out.push_back(p[best + i]);
    return out;
}

int cycle_cmp(const std::vector<PointQ>& a, const std::vector<PointQ>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i) {
        int c = lex_cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

// One interior wedge at a boundary vertex: the region interior spans
// counterclockwise from `start` to `end`. Directions are raw edge
// vectors; every test on them is scale-invariant.
struct Wedge {
    PointQ start;
    PointQ end;
};

struct CornerInfo {
    PointQ vertex;
    std::vector<Wedge> wedges;
    PointQ canonical_ray;  // lex-min canonicalized direction
};

// Scale-invariant canonical form of a ray direction for lexicographic
// comparison: (0,1) for vertical-up rays, else (1, dy/dx) with dx > 0.
// At the lex-min corner every boundary ray has dx >= 0.
std::pair<QF, QF> ray_key(const PointQ& dir) {
    if (dir.x.sign() == 0) return {dir.x.zero(), dir.x.one()};
    return {dir.x.one(), dir.y / dir.x};
}

bool ray_less(const PointQ& a, const PointQ& b) {
    auto ka = ray_key(a), kb = ray_key(b);
    int c = (ka.first - kb.first).sign();
    if (c != 0) return c < 0;
    return (ka.second - kb.second).sign() < 0;
}

CornerInfo canonical_corner(const RegionQ& region) {
    const PointQ* best = nullptr;
    auto consider = [&](const PolyQ& loop) {
        for (const auto& v : loop.vertices)
            if (!best || lex_cmp(v, *best) < 0) best = &v;
    };
    for (const auto& f : region.faces) {
        consider(f.outer);
        for (const auto& h : f.holes) consider(h);
    }
    if (!best) throw GeometryError("canonical corner of an empty region");

    CornerInfo info{*best, {}, *best};
    auto scan = [&](const PolyQ& loop) {
        size_t n = loop.size();
        for (size_t i = 0; i < n; ++i) {
            if (!(loop.vertices[i] == info.vertex)) continue;
            // interior spans CCW from (v -> next) to (v -> prev)
            PointQ dnext = loop[i + 1] - loop[i];
            PointQ dprev = loop[i + n - 1] - loop[i];
            info.wedges.push_back(Wedge{dnext, dprev});
        }
    };
    for (const auto& f : region.faces) {
        scan(f.outer);
        for (const auto& h : f.holes) scan(h);
    }
    if (info.wedges.empty()) throw GeometryError("corner without incident edges");

    bool first = true;
    PointQ ray = info.wedges.front().start;
    for (const auto& w : info.wedges) {
        for (const PointQ* d : {&w.start, &w.end}) {
            if (first || ray_less(*d, ray)) ray = *d;
            first = false;
        }
    }
    info.canonical_ray = ray;
    return info;
}

// angle(ref -> d) <= angle(ref -> limit), all CCW in [0, 2pi).
bool within_ccw(const PointQ& ref, const PointQ& d, const PointQ& limit) {
    if (cross(ref, d).sign() == 0 && dot(ref, d).sign() > 0) return true;  // zero angle
    if (cross(ref, limit).sign() == 0 && dot(ref, limit).sign() > 0) return false;
    return !detail::ccw_angle_less(ref, limit, d);
}

struct ProtoData {
    PolyQ poly;
    std::vector<PointQ> edges;  // raw vector of edge i -> i+1
};

ProtoData proto_data(const PolyQ& p) {
    ProtoData d{p, {}};
    for (size_t i = 0; i < p.size(); ++i) d.edges.push_back(p[i + 1] - p[i]);
    return d;
}

// Rotor aligning direction e onto direction r. The rotor components
// need |e||r| in the field; when they are not, no exact placement with
// this alignment exists and nullopt is returned.
std::optional<Rotor<QF>> alignment_rotor(const PointQ& e, const PointQ& r) {
    auto len = qf_sqrt(dot(e, e) * dot(r, r));
    if (!len || len->sign() == 0) return std::nullopt;
    return Rotor<QF>(dot(e, r) / *len, cross(e, r) / *len);
}

// The cone argument in the placement filter needs angles < pi.
void require_convex(const PolyQ& proto) {
    validate_polygon(proto);
    for (size_t i = 0; i < proto.size(); ++i)
        if (orientation(proto[i], proto[i + 1], proto[i + 2]) <= 0)
            throw GeometryError("corner search requires a convex prototile");
}

std::vector<Placement> corner_placements_raw(const RegionQ& region, const PolyQ& proto,
                                             const SearchConfig& cfg);

}  // namespace

std::vector<Placement> enumerate_corner_placements(const RegionQ& region, const PolyQ& proto,
                                                   const SearchConfig& cfg) {
    std::vector<Placement> out = corner_placements_raw(region, proto, cfg);
    std::erase_if(out, [&](const Placement& pl) {
        return !region_contains_polygon(region, pl.shape);
    });
    return out;
}

namespace {

std::vector<Placement> corner_placements_raw(const RegionQ& region, const PolyQ& proto,
                                             const SearchConfig& cfg) {
    require_convex(proto);
    CornerInfo corner = canonical_corner(region);
    const QF zero = corner.vertex.x.zero();

    std::vector<ProtoData> variants;
    variants.push_back(proto_data(proto));
    if (cfg.allow_reflection) {
        IsometryQ mirror{Rotor<QF>::identity_like(zero), PointQ{zero, zero}, true};
        variants.push_back(proto_data(apply_isometry(mirror, proto)));
    }

    std::vector<Placement> out;
    auto emit = [&](const ProtoData& var, bool reflected, size_t vtx, const PointQ& flush_dir,
                    bool flush_is_next_edge, const Wedge& wedge) {
        size_t n = var.poly.size();
        // Raw directions of the two edges leaving vertex vtx.
        PointQ e_next = var.edges[vtx];
        PointQ e_prev_rev = PointQ{zero, zero} - var.edges[(vtx + n - 1) % n];
        PointQ aligned = flush_is_next_edge ? e_next : e_prev_rev;
        auto rot = alignment_rotor(aligned, flush_dir);
        if (!rot) return;  // not representable in the field
        // Tile cone = CCW from image(e_next) to image(e_prev_rev); for a
        // convex tile (angle < pi) both rays inside the wedge suffice.
        if (!within_ccw(wedge.start, rot->apply(e_next), wedge.end)) return;
        if (!within_ccw(wedge.start, rot->apply(e_prev_rev), wedge.end)) return;
        PointQ tr = corner.vertex - rot->apply(var.poly[vtx]);
        IsometryQ iso{*rot, tr, reflected};
        out.push_back(Placement{iso, apply_isometry(iso, proto)});
    };

    for (const auto& wedge : corner.wedges) {
        bool start_is_canonical = !ray_less(corner.canonical_ray, wedge.start) &&
                                  !ray_less(wedge.start, corner.canonical_ray);
        bool end_is_canonical = !ray_less(corner.canonical_ray, wedge.end) &&
                                !ray_less(wedge.end, corner.canonical_ray);
        if (!start_is_canonical && !end_is_canonical) continue;
        for (size_t vi = 0; vi < variants.size(); ++vi) {
            const ProtoData& var = variants[vi];
            for (size_t vtx = 0; vtx < var.poly.size(); ++vtx) {
                if (start_is_canonical) {
                    emit(var, vi == 1, vtx, wedge.start, true, wedge);
                    emit(var, vi == 1, vtx, wedge.start, false, wedge);
                }
                if (end_is_canonical) {
                    emit(var, vi == 1, vtx, wedge.end, true, wedge);
                    emit(var, vi == 1, vtx, wedge.end, false, wedge);
                }
            }
        }
    }

    // Deduplicate identical images and order deterministically.
    std::sort(out.begin(), out.end(), [](const Placement& a, const Placement& b) {
        return cycle_cmp(canonical_cycle(a.shape), canonical_cycle(b.shape)) < 0;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Placement& a, const Placement& b) {
                              return cycle_cmp(canonical_cycle(a.shape),
                                               canonical_cycle(b.shape)) == 0;
                          }),
              out.end());
    return out;
}

struct SearchDriver {
    const PolyQ& proto;
    SearchConfig cfg;
    SearchResult result;
    std::vector<Placement> stack;
    RegionQ original;

    bool budget_hit = false;

    void record() {
        result.count += 1;
        if (cfg.mode != SearchConfig::Mode::COUNT)
            result.tilings.push_back(Tiling{proto, original, stack});
    }

    bool done() const {
        return budget_hit ||
               (cfg.mode == SearchConfig::Mode::FIRST && result.count > 0);
    }

    void dfs(const RegionQ& region) {
        if (done()) return;
        result.nodes += 1;
        if (result.nodes > cfg.max_nodes) {
            budget_hit = true;
            return;
        }
        if (region.empty()) {
            record();
            return;
        }
        if ((long)stack.size() >= cfg.max_tiles) return;
        std::vector<Placement> places = corner_placements_raw(region, proto, cfg);
        for (auto& pl : places) {
            if (done()) return;
            RegionQ next;
            try {
                next = region_difference(region, pl.shape);
            } catch (const ContainmentViolation&) {
                continue;
            }
            stack.push_back(pl);
            dfs(next);
            stack.pop_back();
        }
    }
};

}  // namespace

SearchResult tile_region(const RegionQ& region, const PolyQ& proto, const SearchConfig& cfg) {
    SearchConfig c = cfg;
    if (const char* env = std::getenv("REPTILER_MAX_NODES")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) c.max_nodes = v;
    }
    SearchDriver driver{proto, c, {}, {}, region};

    // A tiling can exist only if the area quotient is a positive integer.
    QF ratio = region_area(region, proto.vertices.front().x) / polygon_area(proto);
    bool integral = ratio.y().is_zero() && ratio.x().is_integer() && ratio.sign() > 0;
    if (!integral) return driver.result;

    driver.dfs(region);
    driver.result.status = driver.budget_hit ? SearchStatus::BUDGET : SearchStatus::COMPLETE;
    return driver.result;
}

VerifyReport verify_tiling(const Tiling& t, bool allow_reflection) {
    VerifyReport rep;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.failures.push_back(msg);
    };

    try {
        validate_polygon(t.prototile);
        for (const auto& f : t.region.faces) {
            validate_polygon(f.outer);
            for (const auto& h : f.holes) {
                PolyQ rev = h;
                std::reverse(rev.vertices.begin(), rev.vertices.end());
                validate_polygon(rev);  // holes run clockwise
            }
        }
    } catch (const GeometryError& e) {
        fail(std::string("malformed prototile or region: ") + e.what());
        return rep;
    }

    const QF zero = t.prototile.vertices.front().x.zero();
    bool shapes_ok = true;
    for (size_t i = 0; i < t.placements.size(); ++i) {
        const Placement& pl = t.placements[i];
        try {
            validate_polygon(pl.shape);
        } catch (const GeometryError& e) {
            fail("placement " + std::to_string(i) + ": invalid polygon: " + e.what());
            shapes_ok = false;
            continue;
        }
        if (!cyclic_equal(apply_isometry(pl.iso, t.prototile), pl.shape))
            fail("placement " + std::to_string(i) + ": cached shape != iso(prototile)");
        auto g = congruence(pl.shape, t.prototile, allow_reflection);
        if (!g)
            fail("placement " + std::to_string(i) + ": not congruent to the prototile");
        if (!region_contains_polygon(t.region, pl.shape))
            fail("placement " + std::to_string(i) + ": exits the region");
    }

    if (!shapes_ok) return rep;  // remaining checks assume valid polygons

    // Pairwise interior disjointness: proper crossings, mutual edge
    // fragment midpoints, or a centroid inside the other tile.
    for (size_t i = 0; i < t.placements.size(); ++i) {
        for (size_t j = i + 1; j < t.placements.size(); ++j) {
            const PolyQ& P = t.placements[i].shape;
            const PolyQ& Q = t.placements[j].shape;
            bool overlap = false;
            for (size_t ei = 0; ei < P.size() && !overlap; ++ei) {
                for (size_t ej = 0; ej < Q.size() && !overlap; ++ej) {
                    auto rel = segment_relation(P.edge(ei), Q.edge(ej));
                    if (std::holds_alternative<SegCross<QF>>(rel)) overlap = true;
                }
            }
            QF two = zero.embed_int(2);
            auto frag_inside = [&](const PolyQ& edges_of, const PolyQ& other) {
                for (size_t e = 0; e < edges_of.size(); ++e) {
                    Segment<QF> seg = edges_of.edge(e);
                    std::vector<PointQ> cuts{seg.a, seg.b};
                    for (size_t o = 0; o < other.size(); ++o) {
                        auto rel = segment_relation(seg, other.edge(o));
                        if (auto* tc = std::get_if<SegTouch<QF>>(&rel)) cuts.push_back(tc->at);
                        if (auto* ov = std::get_if<SegOverlap<QF>>(&rel)) {
                            cuts.push_back(ov->common.a);
                            cuts.push_back(ov->common.b);
                        }
                        if (auto* cr = std::get_if<SegCross<QF>>(&rel)) cuts.push_back(cr->at);
                    }
                    PointQ dir = seg.b - seg.a;
                    std::sort(cuts.begin(), cuts.end(), [&](const PointQ& x, const PointQ& y) {
                        return (dot(x - seg.a, dir) - dot(y - seg.a, dir)).sign() < 0;
                    });
                    for (size_t k = 0; k + 1 < cuts.size(); ++k) {
                        if (cuts[k] == cuts[k + 1]) continue;
                        PointQ mid{(cuts[k].x + cuts[k + 1].x) / two,
                                   (cuts[k].y + cuts[k + 1].y) / two};
                        if (point_location(mid, other) == Location::INSIDE) return true;
                    }
                }
                return false;
            };
            if (!overlap && frag_inside(P, Q)) overlap = true;
            if (!overlap && frag_inside(Q, P)) overlap = true;
            if (!overlap && point_location(centroid(P), Q) == Location::INSIDE) overlap = true;
            if (!overlap && point_location(centroid(Q), P) == Location::INSIDE) overlap = true;
            if (overlap)
                fail("placements " + std::to_string(i) + " and " + std::to_string(j) +
                     " overlap");
        }
    }

    QF sum = zero;
    for (const auto& pl : t.placements) sum += polygon_area(pl.shape);
    if (sum != region_area(t.region, zero))
        fail("tile areas do not sum to the region area");
    return rep;
}

Tiling f0_square_tiling(const QuadSpec<QF>& q) {
    if (classify(q) != Family::FAMILY_III)
        throw WrongFamily("square pinwheel needs a family (iii) instance");
    QF s = q.a + q.b;
    QF zero = s.zero(), two = s.embed_int(2);
    QF h = s / two;
    PolyQ square{{PointQ{zero, zero}, PointQ{s, zero}, PointQ{s, s}, PointQ{zero, s}}};

    // Base tile: reflected copy with its long side on the bottom wall.
    PolyQ base{{PointQ{h, h}, PointQ{zero, q.b}, PointQ{zero, zero}, PointQ{q.a, zero}}};
    auto g0 = congruence(base, q.polygon(), true);
    if (!g0) throw GeometryError("pinwheel base tile is not congruent to the prototile");

    Tiling t{q.polygon(), region_from_polygon(square), {}};
    Rotor<QF> quarter(zero, s.one());
    Rotor<QF> rot = Rotor<QF>::identity_like(zero);
    PointQ center{h, h};
    for (int k = 0; k < 4; ++k) {
        IsometryQ about_center{rot, center - rot.apply(center), false};
        IsometryQ iso = about_center.compose(*g0);
        t.placements.push_back(Placement{iso, apply_isometry(iso, q.polygon())});
        rot = rot * quarter;
    }
    return t;
}

Tiling trivial_quadrant_tiling(const QuadSpec<QF>& q, int n) {
    if (n < 1) throw ParameterOutOfRange("grid size must be >= 1");
    Tiling cell = f0_square_tiling(q);
    QF s = q.a + q.b;
    QF zero = s.zero();
    QF side = s.embed_int(n) * s;
    PolyQ square{{PointQ{zero, zero}, PointQ{side, zero}, PointQ{side, side},
                  PointQ{zero, side}}};
    Tiling t{q.polygon(), region_from_polygon(square), {}};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            PointQ shift{s.embed_int(i) * s, s.embed_int(j) * s};
            IsometryQ translate{Rotor<QF>::identity_like(zero), shift, false};
            for (const auto& pl : cell.placements) {
                IsometryQ iso = translate.compose(pl.iso);
                t.placements.push_back(Placement{iso, apply_isometry(iso, q.polygon())});
            }
        }
    }
    return t;
}

ReptileResult reptile_search(const PolyQ& proto, long k, const SearchConfig& cfg) {
    if (k < 2) throw ParameterOutOfRange("reptile order k must be >= 2");
    const QF zero = proto.vertices.front().x.zero();
    auto scale = qf_sqrt(zero.embed_int(k));
    if (!scale)
        throw ScaleOutOfField("sqrt(" + std::to_string(k) + ") is not in the field");
    PolyQ big;
    for (const auto& v : proto.vertices)
        big.vertices.push_back(PointQ{*scale * v.x, *scale * v.y});

    SearchConfig c = cfg;
    c.mode = SearchConfig::Mode::FIRST;
    SearchResult res = tile_region(region_from_polygon(big), proto, c);
    ReptileResult out{ReptileOutcome::EXHAUSTED, res.nodes, {}};
    if (res.count > 0) {
        out.outcome = ReptileOutcome::FOUND;
        out.tiling = std::move(res.tilings);
    } else if (res.status == SearchStatus::BUDGET) {
        out.outcome = ReptileOutcome::BUDGET;
    }
    return out;
}

}  // namespace reptiler

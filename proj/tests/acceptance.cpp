// Acceptance suite: one pass/fail line per criterion, nonzero exit on
// any failure. argv[1] points at the golden-file directory;
// REPTILER_FREEZE_GOLDEN=1 rewrites the golden outputs from a verified
// run instead of comparing.

#include "reptiler/io.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace reptiler;

namespace {

int g_failures = 0;
std::string g_golden_dir = "golden";

struct Criterion {
    int number;
    std::string label;
    double limit_seconds;
};

void run(const Criterion& c, const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    if (secs > c.limit_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2fs", secs);
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.number << " (" << buf
              << "): " << c.label;
    if (!ok && !detail.empty()) std::cout << " -- " << detail;
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

QF qf(long xn, long xd, long yn, long yd, unsigned long m) {
    return QF(Rat(xn, xd), Rat(yn, yd), m);
}

PolyQ square_poly(const QF& side) {
    QF z = side.zero();
    return PolyQ{{PointQ{z, z}, PointQ{side, z}, PointQ{side, side}, PointQ{z, side}}};
}

bool same_placement_set(const Tiling& a, const Tiling& b) {
    if (a.placements.size() != b.placements.size()) return false;
    std::vector<bool> used(b.placements.size(), false);
    for (const auto& pa : a.placements) {
        bool matched = false;
        for (size_t j = 0; j < b.placements.size(); ++j) {
            if (used[j]) continue;
            if (cyclic_equal(pa.shape, b.placements[j].shape)) {
                used[j] = true;
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

// ---- criterion bodies ----------------------------------------------------

bool exact_field_suite(std::string& detail) {
    std::mt19937_64 rng(0x5eed2026);
    const unsigned long radicands[] = {0, 2, 3, 6, 7, 13, 41};
    for (int i = 0; i < 10000; ++i) {
        unsigned long m = radicands[i % 7];
        QF u = oracle::random_qf(rng, m);
        QF v = oracle::random_qf(rng, m);
        QF w = oracle::random_qf(rng, m);
        if (!((u + v) + w == u + (v + w))) { detail = "associativity (+)"; return false; }
        if (!((u * v) * w == u * (v * w))) { detail = "associativity (*)"; return false; }
        if (!(u * (v + w) == u * v + u * w)) { detail = "distributivity"; return false; }
        if (!(u + (-u)).is_zero()) { detail = "additive inverse"; return false; }
        if (!v.is_zero() && !((u / v) * v == u)) { detail = "multiplicative inverse"; return false; }
    }
    const unsigned long irr[] = {2, 3, 6, 7, 13, 41};
    for (int i = 0; i < 10000; ++i) {
        QF s = oracle::random_qf(rng, irr[i % 6]);
        if (s.sign() != oracle::decimal_sign(s, 100)) {
            detail = "sign oracle mismatch at " + s.to_string();
            return false;
        }
    }
    return true;
}

bool constructor_suite(std::string& detail) {
    struct Case {
        std::string name;
        std::function<bool()> check;
    };
    auto check_qf = [](const QuadSpec<QF>& s, Family fam) {
        validate_quadspec(s);
        return lemma1_holds(s) && lemma2_holds(s) && classify(s) == fam;
    };
    std::vector<Case> cases = {
        {"f3:1/5", [&] { return check_qf(build_family3(Rat(1, 5)), Family::FAMILY_III); }},
        {"f3:1/2", [&] { return check_qf(build_family3(Rat(1, 2)), Family::FAMILY_III); }},
        {"f3:3/5", [&] { return check_qf(build_family3(Rat(3, 5)), Family::FAMILY_III); }},
        {"f3ab:sqrt6",
         [&] {
             return check_qf(build_family3_ab(qf(2, 5, 2, 5, 6), qf(4, 5, -1, 5, 6)),
                             Family::FAMILY_III);
         }},
        {"f1:1", [&] { return check_qf(build_family1(Rat(1)), Family::FAMILY_I); }},
        {"f1:3/2", [&] { return check_qf(build_family1(Rat(3, 2)), Family::FAMILY_I); }},
        {"f2:19/10",
         [&] {
             auto s = build_family2(Rat(19, 10));
             validate_quadspec(s);
             QFTower three = s.a.embed_int(3);
             bool identity = s.a * s.a - s.a * s.d + s.d * s.d == three;
             return identity && lemma1_holds(s) && lemma2_holds(s) &&
                    classify(s) == Family::FAMILY_II;
         }},
    };
    for (const auto& c : cases) {
        if (!c.check()) {
            detail = c.name;
            return false;
        }
    }
    return true;
}

bool figure1_suite(std::string& detail) {
    std::vector<std::pair<std::string, QuadSpec<QF>>> instances;
    instances.emplace_back("f3:1/5", build_family3(Rat(1, 5)));
    instances.emplace_back("f3:1/2", build_family3(Rat(1, 2)));
    instances.emplace_back("f3:3/5", build_family3(Rat(3, 5)));
    instances.emplace_back("f3ab:sqrt6",
                           build_family3_ab(qf(2, 5, 2, 5, 6), qf(4, 5, -1, 5, 6)));
    for (const auto& [name, q] : instances) {
        Tiling t = f0_square_tiling(q);
        VerifyReport rep = verify_tiling(t);
        if (!rep.ok || t.placements.size() != 4) {
            detail = name + (rep.ok ? " (tile count)" : " (" + rep.failures.front() + ")");
            return false;
        }
    }
    return true;
}

bool single_square_suite(std::string& detail) {
    auto q = build_family3(Rat(1, 5));
    SearchConfig cfg;
    cfg.max_nodes = 10000000;
    SearchResult res = tile_region(region_from_polygon(square_poly(q.a + q.b)),
                                   q.polygon(), cfg);
    if (res.status != SearchStatus::COMPLETE) { detail = "budget exceeded"; return false; }
    if (res.count == 0) { detail = "no tilings found"; return false; }
    Tiling pin = f0_square_tiling(q);
    bool pinwheel_seen = false;
    for (const auto& t : res.tilings) {
        if (!verify_tiling(t).ok) { detail = "unverified output"; return false; }
        if (t.placements.size() != 4) { detail = "tile count != 4"; return false; }
        if (same_placement_set(t, pin)) pinwheel_seen = true;
    }
    if (!pinwheel_seen) { detail = "pinwheel missing"; return false; }

    nlohmann::json all = nlohmann::json::array();
    for (const auto& t : res.tilings) all.push_back(tiling_to_json(t));
    std::string path = g_golden_dir + "/sigma_f3_1_5.json";
    if (std::getenv("REPTILER_FREEZE_GOLDEN")) {
        std::ofstream out(path, std::ios::binary);
        out << all.dump(2) << "\n";
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) { detail = "golden file missing: " + path; return false; }
    nlohmann::json golden;
    in >> golden;
    if (golden != all) { detail = "output differs from the golden file"; return false; }
    return true;
}

bool two_square_suite(std::string& detail) {
    auto q = build_family3(Rat(1, 5));
    QF side = q.a + q.b;
    QF z = side.zero();
    QF twice = side + side;
    PolyQ rect{{PointQ{z, z}, PointQ{twice, z}, PointQ{twice, side}, PointQ{z, side}}};
    SearchConfig cfg;
    SearchResult res = tile_region(region_from_polygon(rect), q.polygon(), cfg);
    if (res.status != SearchStatus::COMPLETE) { detail = "budget exceeded"; return false; }
    if (res.count == 0) { detail = "no tilings"; return false; }
    for (const auto& t : res.tilings) {
        if (!verify_tiling(t).ok) { detail = "unverified output"; return false; }
        if (t.placements.size() != 8) { detail = "tile count != 8"; return false; }
        for (const auto& pl : t.placements) {
            bool left = true, right = true;
            for (const auto& v : pl.shape.vertices) {
                if ((v.x - side).sign() > 0) left = false;
                if ((v.x - side).sign() < 0) right = false;
            }
            if (!left && !right) {
                detail = "a tile straddles the two sigma squares";
                return false;
            }
        }
    }
    return true;
}

bool reptile_negative_suite(std::string& detail) {
    std::vector<std::pair<std::string, PolyQ>> protos;
    protos.emplace_back("f3:1/5", build_family3(Rat(1, 5)).polygon());
    protos.emplace_back("f3:1/2", build_family3(Rat(1, 2)).polygon());
    protos.emplace_back("f1:1", build_family1(Rat(1)).polygon());
    SearchConfig cfg;
    for (const auto& [name, poly] : protos) {
        ReptileResult r = reptile_search(poly, 4, cfg);
        if (r.outcome != ReptileOutcome::EXHAUSTED) {
            detail = name + (r.outcome == ReptileOutcome::FOUND ? " found a tiling!"
                                                                : " hit the budget");
            return false;
        }
    }
    return true;
}

bool reptile_positive_suite(std::string& detail) {
    QF one = QF::rational(Rat(1), 0);
    QF z = one.zero();
    PolyQ sq = square_poly(one);
    PolyQ tri{{PointQ{z, z}, PointQ{one, z}, PointQ{z, one}}};
    SearchConfig cfg;
    auto rs = reptile_search(sq, 4, cfg);
    if (rs.outcome != ReptileOutcome::FOUND) { detail = "unit square k=4"; return false; }
    if (!verify_tiling(rs.tiling[0]).ok) { detail = "square tiling unverified"; return false; }
    auto rt = reptile_search(tri, 4, cfg);
    if (rt.outcome != ReptileOutcome::FOUND) { detail = "right triangle k=4"; return false; }
    if (!verify_tiling(rt.tiling[0]).ok) { detail = "triangle tiling unverified"; return false; }
    return true;
}

bool arithmetic_obstruction_suite(std::string& detail) {
    auto q7 = build_family3(Rat(1, 2));  // a = sqrt7/2
    for (int k = 1; k <= 6; ++k) {
        auto sols = edge_fill_solutions(q7, q7.a.embed_int(k) * q7.a);
        if (sols.size() != 1 || !(sols[0] == EdgeFill{k, 0, 0, 0})) {
            detail = "b=1/2, L=" + std::to_string(k) + "a";
            return false;
        }
    }
    auto q6 = build_family3_ab(qf(2, 5, 2, 5, 6), qf(4, 5, -1, 5, 6));  // a = 2-2b
    for (int k = 1; k <= 6; ++k) {
        auto sols = edge_fill_solutions(q6, q6.b.embed_int(k) * q6.b);
        if (sols.size() != 1 || !(sols[0] == EdgeFill{0, k, 0, 0})) {
            detail = "a=2-2b, L=" + std::to_string(k) + "b";
            return false;
        }
    }
    auto q1 = build_family1(Rat(1));
    for (int k = 1; k <= 6; ++k) {
        auto sols = edge_fill_solutions(q1, q1.b.embed_int(k) * q1.b);
        if (sols.empty()) { detail = "f1 d=1 has no fills at k=" + std::to_string(k); return false; }
        for (const auto& s : sols) {
            if (s.p != 0 || s.s != 0) {
                detail = "f1 d=1, L=" + std::to_string(k) + "b uses side a or d";
                return false;
            }
        }
    }
    return true;
}

bool barrier_suite(std::string& detail) {
    auto q = build_family3(Rat(1, 5));
    auto right = FillTarget<QF>::from_rotor(q.beta);
    auto gam = FillTarget<QF>::from_rotor(q.gamma);

    auto single = enumerate_patches(q, PatchProblem<QF>{q.c.one(), right, gam});
    if (single.size() != 1 || single[0].tiles.size() != 1) { detail = "base 1 pi/2-gamma"; return false; }

    auto none = enumerate_patches(q, PatchProblem<QF>{q.c.one(), right, right});
    if (!none.empty()) { detail = "base 1 right-right should be empty"; return false; }

    auto two = enumerate_patches(q, PatchProblem<QF>{q.a + q.b, right, right});
    if (two.size() != 2) { detail = "base a+b candidate count"; return false; }

    auto alphabet = enumerate_patches(q, PatchProblem<QF>{q.a, right, gam});
    if (alphabet.empty()) { detail = "base a has no candidates"; return false; }
    bool saw_1bb = false;
    for (const auto& c : alphabet) {
        std::vector<QF> lens;
        for (const auto& t : c.tiles)
            lens.push_back(t.side == SideLabel::A   ? q.a
                           : t.side == SideLabel::B ? q.b
                           : t.side == SideLabel::C ? q.c
                                                    : q.d);
        std::vector<QF> like_1bb{q.c, q.b, q.b};
        std::vector<QF> like_b1b{q.b, q.c, q.b};
        bool is_1bb = lens == like_1bb, is_b1b = lens == like_b1b;
        if (!is_1bb && !is_b1b) { detail = "base-a alphabet violated"; return false; }
        saw_1bb = saw_1bb || is_1bb;
    }
    if (!saw_1bb) { detail = "base a: [1,b,b] missing"; return false; }

    auto q41 = build_family3(Rat(3, 5));  // a != 1 + 2b
    auto refuted = enumerate_patches(
        q41, PatchProblem<QF>{q41.a, FillTarget<QF>::from_rotor(q41.beta),
                              FillTarget<QF>::from_rotor(q41.gamma)});
    if (!refuted.empty()) { detail = "base a for b=3/5 should be empty"; return false; }
    return true;
}

bool vertex_fill_suite(std::string& detail) {
    auto q = build_family3(Rat(1, 5));
    auto mk = [](int a, int g, int h) {
        FillSolution f;
        f[AngleTag::ALPHA] = a;
        f[AngleTag::GAMMA] = g;
        f[AngleTag::HALF_PI] = h;
        return f;
    };
    auto pi_fills = enumerate_vertex_fills(q, FillTarget<QF>::pi_like(q.a));
    std::vector<FillSolution> want_pi = {mk(0, 0, 2), mk(1, 1, 0)};
    if (pi_fills != want_pi) { detail = "fills of pi"; return false; }

    auto tau_fills = enumerate_vertex_fills(q, FillTarget<QF>::two_pi_like(q.a));
    std::vector<FillSolution> want_tau = {mk(0, 0, 4), mk(1, 1, 2), mk(2, 2, 0)};
    if (tau_fills != want_tau) { detail = "fills of 2pi"; return false; }

    auto q1 = build_family1(Rat(1));
    auto fills1 = enumerate_vertex_fills(q1, FillTarget<QF>::two_pi_like(q1.a));
    if (std::find(fills1.begin(), fills1.end(), mk(0, 3, 0)) == fills1.end()) {
        detail = "{3 gamma} missing for f1:1";
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_golden_dir = argv[1];

    run({1, "exact-field suite (10^4 identities + decimal sign oracle)", 10.0},
        exact_field_suite);
    run({2, "constructor suite (invariants, lemmas, classification)", 1.0},
        constructor_suite);
    run({3, "square pinwheel construction verifies on four instances", 1.0},
        figure1_suite);
    run({4, "exhaustive single-square search (frozen golden output)", 60.0},
        single_square_suite);
    run({5, "two-square block decomposes into single-square tilings", 600.0},
        two_square_suite);
    run({6, "reptile negatives: k=4 EXHAUSTED for f3:1/5, f3:1/2, f1:1", 1800.0},
        reptile_negative_suite);
    run({7, "reptile positives: unit square and right triangle at k=4", 1.0},
        reptile_positive_suite);
    run({8, "arithmetic obstructions on edge fills", 5.0}, arithmetic_obstruction_suite);
    run({9, "barrier suite (single tile, impossibility, two tilings, alphabet)", 5.0},
        barrier_suite);
    run({10, "vertex-fill suite (pi and 2pi fills, 3-gamma witness)", 1.0},
        vertex_fill_suite);

    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
}

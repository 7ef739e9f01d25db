// reptiler: exact-arithmetic tiling engine for cyclic quadrilaterals.
//
// Exit codes: 0 success/true, 1 falsified/not-found, 2 usage error,
// 3 node budget exceeded.

#include "reptiler/io.hpp"
#include "reptiler/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <variant>

using namespace reptiler;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

using AnyInstance = std::variant<QuadSpec<QF>, QuadSpec<QFTower>>;

AnyInstance build_any_instance(const std::string& text) {
    InstanceSpec spec = parse_instance_string(text);
    if (spec.kind == InstanceSpec::Kind::F2) return build_family2(spec.param);
    return build_qf_instance(spec);
}

// Length expressions for --length/--base: signed sums of terms, where a
// term is a side name with optional rational coefficient ("a+b", "2b",
// "3/2a"), a rational, or an exact radical literal ("1/2r7").
QF parse_length_expr(const std::string& text, const QuadSpec<QF>& q) {
    std::string t;
    for (char ch : text)
        if (!std::isspace((unsigned char)ch)) t += ch;
    if (t.empty()) throw Error("empty length expression");
    QF acc = q.a.zero();
    size_t i = 0;
    while (i < t.size()) {
        int sign = 1;
        if (t[i] == '+' || t[i] == '-') {
            sign = t[i] == '-' ? -1 : 1;
            ++i;
        }
        size_t start = i;
        while (i < t.size() && (std::isdigit((unsigned char)t[i]) || t[i] == '/')) ++i;
        std::string num = t.substr(start, i - start);
        QF term = q.a.zero();
        if (i < t.size() && (t[i] == 'a' || t[i] == 'b' || t[i] == 'c' || t[i] == 'd')) {
            const QF& side = t[i] == 'a' ? q.a : t[i] == 'b' ? q.b : t[i] == 'c' ? q.c : q.d;
            Rat coef = num.empty() ? Rat(1) : Rat::parse(num);
            term = side.embed(coef) * side;
            ++i;
        } else if (i < t.size() && t[i] == 'r') {
            ++i;
            size_t rs = i;
            while (i < t.size() && std::isdigit((unsigned char)t[i])) ++i;
            unsigned long m = std::stoul(t.substr(rs, i - rs));
            if (m != q.a.radicand())
                throw Error("radical r" + std::to_string(m) + " is not in the run field");
            Rat coef = num.empty() ? Rat(1) : Rat::parse(num);
            term = QF(Rat(0), coef, m);
        } else {
            if (num.empty()) throw Error("bad length expression '" + text + "'");
            term = q.a.embed(Rat::parse(num));
        }
        acc = sign < 0 ? acc - term : acc + term;
    }
    return acc;
}

FillTarget<QF> parse_angle_target(const std::string& name, const QuadSpec<QF>& q) {
    if (name == "alpha") return FillTarget<QF>::from_rotor(q.alpha);
    if (name == "beta") return FillTarget<QF>::from_rotor(q.beta);
    if (name == "gamma") return FillTarget<QF>::from_rotor(q.gamma);
    if (name == "delta") return FillTarget<QF>::from_rotor(q.delta);
    if (name == "hpi")
        return FillTarget<QF>{Rotor<QF>(q.a.zero(), q.a.one()), Rat(1, 2), Rat(1, 2)};
    if (name == "pi") return FillTarget<QF>::pi_like(q.a);
    if (name == "2pi") return FillTarget<QF>::two_pi_like(q.a);
    throw Error("unknown angle '" + name + "' (alpha|beta|gamma|delta|hpi|pi|2pi)");
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << content;
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    nlohmann::json j;
    in >> j;
    return j;
}

struct TileArgs {
    std::string proto, region = "sigma", mode = "all", out;
    int grid = 0;
    bool pinwheel = false, no_reflect = false;
    long max_tiles = 100000, max_nodes = 10000000;
    int workers = 1;
};

SearchConfig make_config(const TileArgs& a) {
    SearchConfig cfg;
    cfg.mode = a.mode == "first"   ? SearchConfig::Mode::FIRST
               : a.mode == "count" ? SearchConfig::Mode::COUNT
                                   : SearchConfig::Mode::ALL;
    cfg.max_tiles = a.max_tiles;
    cfg.max_nodes = a.max_nodes;
    cfg.allow_reflection = !a.no_reflect;
    return cfg;
}

RegionQ make_region(const std::string& spec, const QuadSpec<QF>& q) {
    QF side = q.a + q.b;
    QF zero = side.zero();
    if (spec == "sigma") {
        PolyQ sq{{PointQ{zero, zero}, PointQ{side, zero}, PointQ{side, side},
                  PointQ{zero, side}}};
        return region_from_polygon(sq);
    }
    if (spec == "sigma2") {
        QF twice = side + side;
        PolyQ rect{{PointQ{zero, zero}, PointQ{twice, zero}, PointQ{twice, side},
                    PointQ{zero, side}}};
        return region_from_polygon(rect);
    }
    if (spec.rfind("file:", 0) == 0) return region_from_json(read_json_file(spec.substr(5)));
    throw Error("unknown region '" + spec + "' (sigma|sigma2|file:<path>)");
}

int run_tile(const TileArgs& args) {
    InstanceSpec spec = parse_instance_string(args.proto);
    QuadSpec<QF> q = build_qf_instance(spec);

    if (args.pinwheel || args.grid > 0) {
        Tiling t = args.grid > 1 ? trivial_quadrant_tiling(q, args.grid) : f0_square_tiling(q);
        std::cout << "constructed " << t.placements.size() << " placements" << std::endl;
        if (!args.out.empty()) write_file(args.out, tiling_to_json(t).dump(2) + "\n");
        return kExitOk;
    }

    RegionQ region = make_region(args.region, q);
    SearchConfig cfg = make_config(args);
    SearchResult res = tile_region(region, q.polygon(), cfg);
    std::cout << (res.status == SearchStatus::BUDGET ? "BUDGET" : "EXHAUSTED") << " tilings="
              << res.count << " nodes=" << res.nodes << std::endl;
    if (!args.out.empty()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& t : res.tilings) arr.push_back(tiling_to_json(t));
        write_file(args.out, arr.dump(2) + "\n");
    }
    if (res.status == SearchStatus::BUDGET) return kExitBudget;
    return res.count > 0 ? kExitOk : kExitNotFound;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reptiler: exact tiling search for cyclic quadrilateral reptiles"};
    app.require_subcommand(1);

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "family of an instance");
    std::string classify_proto;
    classify_cmd->add_option("--proto", classify_proto, "instance, e.g. f3:1/5")->required();

    // fills
    auto* fills_cmd = app.add_subcommand("fills", "vertex-angle fills of a target");
    std::string fills_proto, fills_target = "2pi";
    fills_cmd->add_option("--proto", fills_proto)->required();
    fills_cmd->add_option("--target", fills_target, "pi|2pi|alpha|beta|gamma|delta|hpi");

    // edgefills
    auto* ef_cmd = app.add_subcommand("edgefills", "integer side partitions of a length");
    std::string ef_proto, ef_len;
    int ef_bound = -1;
    ef_cmd->add_option("--proto", ef_proto)->required();
    ef_cmd->add_option("--length", ef_len, "length expression, e.g. a+b or 4b")->required();
    ef_cmd->add_option("--bound", ef_bound, "cap on each multiplicity");

    // patches
    auto* patch_cmd = app.add_subcommand("patches", "first-layer barrier candidates");
    std::string p_proto, p_base, p_left = "hpi", p_right = "hpi";
    int p_max = -1;
    patch_cmd->add_option("--proto", p_proto)->required();
    patch_cmd->add_option("--base", p_base, "base length expression")->required();
    patch_cmd->add_option("--left", p_left, "left end angle");
    patch_cmd->add_option("--right", p_right, "right end angle");
    patch_cmd->add_option("--max-tiles", p_max);

    // tile
    auto* tile_cmd = app.add_subcommand("tile", "exhaustive region tiling search");
    TileArgs targs;
    tile_cmd->add_option("--proto", targs.proto)->required();
    tile_cmd->add_option("--region", targs.region, "sigma|sigma2|file:<path>");
    tile_cmd->add_option("--mode", targs.mode, "all|first|count");
    tile_cmd->add_option("--out", targs.out, "write tilings as JSON");
    tile_cmd->add_flag("--pinwheel", targs.pinwheel, "emit the four-tile square construction");
    tile_cmd->add_option("--grid", targs.grid, "emit the n x n pinwheel grid");
    tile_cmd->add_option("--max-tiles", targs.max_tiles);
    tile_cmd->add_option("--max-nodes", targs.max_nodes);
    tile_cmd->add_flag("--no-reflect", targs.no_reflect);
    tile_cmd->add_option("--workers", targs.workers, "accepted; results are identical");

    // reptile
    auto* rep_cmd = app.add_subcommand("reptile", "k-reptile search");
    std::string r_proto;
    long r_k = 4;
    std::string r_out;
    TileArgs rargs;
    rep_cmd->add_option("--proto", r_proto)->required();
    rep_cmd->add_option("--k", r_k, "number of pieces")->required();
    rep_cmd->add_option("--out", r_out, "write the found tiling as JSON");
    rep_cmd->add_option("--max-tiles", rargs.max_tiles);
    rep_cmd->add_option("--max-nodes", rargs.max_nodes);
    rep_cmd->add_flag("--no-reflect", rargs.no_reflect);
    rep_cmd->add_option("--workers", rargs.workers, "accepted; results are identical");

    // verify
    auto* ver_cmd = app.add_subcommand("verify", "check a tiling file");
    std::string v_path;
    bool v_no_reflect = false;
    ver_cmd->add_option("--tiling", v_path)->required();
    ver_cmd->add_flag("--no-reflect", v_no_reflect);

    // render
    auto* ren_cmd = app.add_subcommand("render", "render a tiling file as SVG");
    std::string svg_in, svg_out;
    double svg_scale = 100.0;
    ren_cmd->add_option("--tiling", svg_in)->required();
    ren_cmd->add_option("--svg", svg_out)->required();
    ren_cmd->add_option("--scale", svg_scale, "user units per model unit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*classify_cmd) {
            AnyInstance inst = build_any_instance(classify_proto);
            const char* fam = std::visit(
                [](const auto& q) { return family_name(classify(q)); }, inst);
            std::cout << fam << std::endl;
            return kExitOk;
        }
        if (*fills_cmd) {
            QuadSpec<QF> q = build_qf_instance(parse_instance_string(fills_proto));
            auto target = parse_angle_target(fills_target, q);
            auto fills = enumerate_vertex_fills(q, target);
            std::cout << fills_to_json(fills).dump(2) << std::endl;
            return fills.empty() ? kExitNotFound : kExitOk;
        }
        if (*ef_cmd) {
            QuadSpec<QF> q = build_qf_instance(parse_instance_string(ef_proto));
            QF L = parse_length_expr(ef_len, q);
            auto sols = edge_fill_solutions(q, L, ef_bound);
            std::cout << edgefills_to_json(sols).dump(2) << std::endl;
            return sols.empty() ? kExitNotFound : kExitOk;
        }
        if (*patch_cmd) {
            QuadSpec<QF> q = build_qf_instance(parse_instance_string(p_proto));
            PatchProblem<QF> prob{parse_length_expr(p_base, q), parse_angle_target(p_left, q),
                                  parse_angle_target(p_right, q)};
            auto cands = enumerate_patches(q, prob, p_max);
            std::cout << patches_to_json(cands).dump(2) << std::endl;
            return cands.empty() ? kExitNotFound : kExitOk;
        }
        if (*tile_cmd) return run_tile(targs);
        if (*rep_cmd) {
            QuadSpec<QF> q = build_qf_instance(parse_instance_string(r_proto));
            SearchConfig cfg = make_config(rargs);
            ReptileResult res = reptile_search(q.polygon(), r_k, cfg);
            const char* label = res.outcome == ReptileOutcome::FOUND      ? "FOUND"
                                : res.outcome == ReptileOutcome::EXHAUSTED ? "EXHAUSTED"
                                                                           : "BUDGET";
            std::cout << label << " nodes=" << res.nodes << std::endl;
            if (res.outcome == ReptileOutcome::FOUND && !r_out.empty())
                write_file(r_out, tiling_to_json(res.tiling[0]).dump(2) + "\n");
            return res.outcome == ReptileOutcome::FOUND       ? kExitOk
                   : res.outcome == ReptileOutcome::EXHAUSTED ? kExitNotFound
                                                              : kExitBudget;
        }
        if (*ver_cmd) {
            Tiling t = tiling_from_json(read_json_file(v_path));
            VerifyReport rep = verify_tiling(t, !v_no_reflect);
            if (rep.ok) {
                std::cout << "ok" << std::endl;
                return kExitOk;
            }
            for (const auto& f : rep.failures) std::cout << "FAIL: " << f << std::endl;
            return kExitNotFound;
        }
        if (*ren_cmd) {
            Tiling t = tiling_from_json(read_json_file(svg_in));
            VerifyReport rep = verify_tiling(t);
            if (!rep.ok)
                std::cerr << "warning: tiling does not verify (" << rep.failures.size()
                          << " failures)" << std::endl;
            write_file(svg_out, render_svg(t, svg_scale));
            return kExitOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitUsage;
    }
    return kExitUsage;
}

#include "reptiler/io.hpp"

namespace reptiler {

using nlohmann::json;

json rat_to_json(const Rat& r) { return r.to_string(); }

Rat rat_from_json(const json& j) {
    if (!j.is_string()) throw Error("rational must be a \"p/q\" string");
    return Rat::parse(j.get<std::string>());
}

json qf_to_json(const QF& v) {
    return json{{"x", rat_to_json(v.x())},
                {"y", rat_to_json(v.y())},
                {"m", v.radicand()}};
}

QF qf_from_json(const json& j) {
    return QF(rat_from_json(j.at("x")), rat_from_json(j.at("y")),
              j.at("m").get<unsigned long>());
}

json point_to_json(const PointQ& p) { return json::array({qf_to_json(p.x), qf_to_json(p.y)}); }

PointQ point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw Error("point must be [qf, qf]");
    return PointQ{qf_from_json(j[0]), qf_from_json(j[1])};
}

json polygon_to_json(const PolyQ& p) {
    json verts = json::array();
    for (const auto& v : p.vertices) verts.push_back(point_to_json(v));
    return json{{"vertices", verts}};
}

PolyQ polygon_from_json(const json& j) {
    PolyQ p;
    for (const auto& v : j.at("vertices")) p.vertices.push_back(point_from_json(v));
    return p;
}

json region_to_json(const RegionQ& r) {
    json faces = json::array();
    for (const auto& f : r.faces) {
        json holes = json::array();
        for (const auto& h : f.holes) holes.push_back(polygon_to_json(h));
        faces.push_back(json{{"outer", polygon_to_json(f.outer)}, {"holes", holes}});
    }
    return json{{"faces", faces}};
}

RegionQ region_from_json(const json& j) {
    RegionQ r;
    for (const auto& f : j.at("faces")) {
        Face<QF> face{polygon_from_json(f.at("outer")), {}};
        for (const auto& h : f.at("holes")) face.holes.push_back(polygon_from_json(h));
        r.faces.push_back(std::move(face));
    }
    return r;
}

json tiling_to_json(const Tiling& t) {
    json placements = json::array();
    for (const auto& pl : t.placements) {
        placements.push_back(json{{"reflect", pl.iso.reflect},
                                  {"cos", qf_to_json(pl.iso.rot.c)},
                                  {"sin", qf_to_json(pl.iso.rot.s)},
                                  {"tx", qf_to_json(pl.iso.translate.x)},
                                  {"ty", qf_to_json(pl.iso.translate.y)}});
    }
    return json{{"prototile", polygon_to_json(t.prototile)},
                {"region", region_to_json(t.region)},
                {"placements", placements}};
}

Tiling tiling_from_json(const json& j) {
    Tiling t{polygon_from_json(j.at("prototile")), region_from_json(j.at("region")), {}};
    for (const auto& p : j.at("placements")) {
        IsometryQ iso{Rotor<QF>(qf_from_json(p.at("cos")), qf_from_json(p.at("sin"))),
                      PointQ{qf_from_json(p.at("tx")), qf_from_json(p.at("ty"))},
                      p.at("reflect").get<bool>()};
        t.placements.push_back(Placement{iso, apply_isometry(iso, t.prototile)});
    }
    return t;
}

json fill_to_json(const FillSolution& f) {
    json out = json::object();
    for (AngleTag t : {AngleTag::ALPHA, AngleTag::BETA, AngleTag::GAMMA, AngleTag::DELTA,
                       AngleTag::HALF_PI})
        if (f[t] > 0) out[angle_tag_name(t)] = f[t];
    return out;
}

json fills_to_json(const std::vector<FillSolution>& fs) {
    json out = json::array();
    for (const auto& f : fs) out.push_back(fill_to_json(f));
    return out;
}

json edgefill_to_json(const EdgeFill& f) {
    return json{{"p", f.p}, {"q", f.q}, {"r", f.r}, {"s", f.s}};
}

json edgefills_to_json(const std::vector<EdgeFill>& fs) {
    json out = json::array();
    for (const auto& f : fs) out.push_back(edgefill_to_json(f));
    return out;
}

json patch_to_json(const PatchCandidate& c) {
    json tiles = json::array();
    for (const auto& t : c.tiles)
        tiles.push_back(json{{"side", side_label_name(t.side)}, {"flipped", t.flipped}});
    json points = json::array();
    for (const auto& f : c.point_fills) points.push_back(fill_to_json(f));
    return json{{"tiles", tiles},
                {"left_fill", fill_to_json(c.left_fill)},
                {"point_fills", points},
                {"right_fill", fill_to_json(c.right_fill)}};
}

json patches_to_json(const std::vector<PatchCandidate>& cs) {
    json out = json::array();
    for (const auto& c : cs) out.push_back(patch_to_json(c));
    return out;
}

QF parse_qf_literal(const std::string& text) {
    // terms: [+-] rat ['r' uint] , joined by + or -
    std::string t;
    for (char ch : text)
        if (!std::isspace((unsigned char)ch)) t += ch;
    if (t.empty()) throw Error("empty number literal");
    Rat x(0), y(0);
    unsigned long m = 0;
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
        if (i < t.size() && t[i] == 'r') {
            ++i;
            size_t rs = i;
            while (i < t.size() && std::isdigit((unsigned char)t[i])) ++i;
            if (rs == i) throw Error("radicand missing after 'r' in '" + text + "'");
            unsigned long mm = std::stoul(t.substr(rs, i - rs));
            if (m != 0 && mm != m)
                throw Error("mixed radicands in literal '" + text + "'");
            m = mm;
            Rat coef = num.empty() ? Rat(1) : Rat::parse(num);
            y += sign < 0 ? -coef : coef;
        } else {
            if (num.empty()) throw Error("bad number literal '" + text + "'");
            Rat v = Rat::parse(num);
            x += sign < 0 ? -v : v;
        }
    }
    return QF(x, y, m);
}

InstanceSpec parse_instance_string(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw Error("instance must look like f3:1/5 or f3ab:<a>,<b>");
    std::string head = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    InstanceSpec spec{};
    if (head == "f1" || head == "f2" || head == "f3") {
        spec.kind = head == "f1"   ? InstanceSpec::Kind::F1
                    : head == "f2" ? InstanceSpec::Kind::F2
                                   : InstanceSpec::Kind::F3;
        spec.param = Rat::parse(rest);
        spec.a_param = QF::rational(Rat(0), 0);
        spec.b_param = QF::rational(Rat(0), 0);
        return spec;
    }
    if (head == "f3ab") {
        auto comma = rest.find(',');
        if (comma == std::string::npos) throw Error("f3ab needs two comma-separated values");
        spec.kind = InstanceSpec::Kind::F3AB;
        spec.a_param = parse_qf_literal(rest.substr(0, comma));
        spec.b_param = parse_qf_literal(rest.substr(comma + 1));
        if (spec.a_param.radicand() != spec.b_param.radicand()) {
            unsigned long m = std::max(spec.a_param.radicand(), spec.b_param.radicand());
            // lift the rational one into the common field
            if (spec.a_param.radicand() == 0)
                spec.a_param = QF(spec.a_param.x(), Rat(0), m);
            else if (spec.b_param.radicand() == 0)
                spec.b_param = QF(spec.b_param.x(), Rat(0), m);
            else
                throw Error("f3ab parameters live in different fields");
        }
        return spec;
    }
    throw Error("unknown instance kind '" + head + "'");
}

QuadSpec<QF> build_qf_instance(const InstanceSpec& spec) {
    switch (spec.kind) {
        case InstanceSpec::Kind::F1: return build_family1(spec.param);
        case InstanceSpec::Kind::F3: return build_family3(spec.param);
        case InstanceSpec::Kind::F3AB: return build_family3_ab(spec.a_param, spec.b_param);
        default:
            throw WrongFamily("family (ii) instances live in a tower field; "
                              "only classify/lemma checks accept them");
    }
}

}  // namespace reptiler

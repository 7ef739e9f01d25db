#include "reptiler/svg.hpp"

#include <cstdio>
#include <sstream>

namespace reptiler {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v == 0.0 ? 0.0 : v);  // avoid "-0"
    return buf;
}

struct Mapper {
    double minx, maxy, scale;
    std::pair<double, double> operator()(const PointQ& p) const {
        // y flipped: SVG grows downward
        return {(p.x.to_double() - minx) * scale, (maxy - p.y.to_double()) * scale};
    }
};

void path_for(std::ostringstream& out, const PolyQ& poly, const Mapper& map) {
    for (size_t i = 0; i < poly.size(); ++i) {
        auto [x, y] = map(poly.vertices[i]);
        out << (i == 0 ? "M" : " L") << fmt(x) << " " << fmt(y);
    }
    out << " Z";
}

}  // namespace

std::string render_svg(const Tiling& t, double scale) {
    double minx = 0, miny = 0, maxx = 0, maxy = 0;
    bool first = true;
    auto grow = [&](const PolyQ& p) {
        for (const auto& v : p.vertices) {
            double x = v.x.to_double(), y = v.y.to_double();
            if (first) {
                minx = maxx = x;
                miny = maxy = y;
                first = false;
            } else {
                minx = std::min(minx, x);
                maxx = std::max(maxx, x);
                miny = std::min(miny, y);
                maxy = std::max(maxy, y);
            }
        }
    };
    for (const auto& f : t.region.faces) {
        grow(f.outer);
        for (const auto& h : f.holes) grow(h);
    }
    for (const auto& pl : t.placements) grow(pl.shape);

    double w = (maxx - minx) * scale, h = (maxy - miny) * scale;
    Mapper map{minx, maxy, scale};

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 "
        << fmt(w) << " " << fmt(h) << "\">\n";
    for (const auto& f : t.region.faces) {
        out << "  <path d=\"";
        path_for(out, f.outer, map);
        for (const auto& hole : f.holes) {
            out << " ";
            path_for(out, hole, map);
        }
        out << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    }
    int idx = 0;
    const char* palette[] = {"#9ecae1", "#a1d99b", "#fdae6b", "#bcbddc",
                             "#fc9272", "#c7e9c0", "#fdd0a2", "#dadaeb"};
    for (const auto& pl : t.placements) {
        out << "  <path d=\"";
        path_for(out, pl.shape, map);
        out << "\" fill=\"" << palette[idx % 8]
            << "\" fill-opacity=\"0.8\" stroke=\"#222\" stroke-width=\"1\"/>\n";
        ++idx;
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace reptiler

#include "geom/svg.hpp"

#include <algorithm>
#include <sstream>

namespace geom {

namespace {

// fixed 4-decimal rendering from an exact rational (half-up)
std::string dec4(const Rational& x) {
    Int scaled = rat_floor(x * 10000 + rat(1, 2));
    bool neg = scaled < 0;
    Int mag = neg ? Int(-scaled) : scaled;
    Int whole = mag / 10000, frac = mag % 10000;
    std::string f = frac.str();
    f.insert(f.begin(), 4 - f.size(), '0');
    std::string out = (neg && (whole != 0 || frac != 0)) ? "-" : "";
    out += whole.str();
    // trim trailing zeros but keep at least one digit
    while (f.size() > 1 && f.back() == '0') f.pop_back();
    if (f != "0") out += "." + f;
    return out;
}

struct Chart {
    Point base;
    Vec3 u, v;
    Rational uu, vv;

    std::pair<Rational, Rational> project(const Point& p) const {
        Vec3 d = p - base;
        return {dot(d, u) / uu, dot(d, v) / vv};
    }
};

Chart make_chart(const Plane& pl) {
    Vec3 n = pl.normal;
    Vec3 pick = is_zero(cross(n, Vec3{1, 0, 0})) ? Vec3{0, 1, 0} : Vec3{1, 0, 0};
    Vec3 u = cross(n, pick);
    Vec3 v = cross(n, u);
    return Chart{pl.base, u, v, norm2(u), norm2(v)};
}

}  // namespace

std::string render_svg(const SvgScene& scene) {
    Chart chart = make_chart(scene.plane);

    // chart coordinates of everything drawable, for the viewport
    std::vector<std::pair<Rational, Rational>> coords;
    for (const auto& item : scene.items) {
        coords.push_back(chart.project(item.a));
        if (item.kind != SvgItem::Kind::Point) coords.push_back(chart.project(item.b));
    }
    Rational xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    if (!coords.empty()) {
        xmin = xmax = coords[0].first;
        ymin = ymax = coords[0].second;
        for (const auto& [x, y] : coords) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    Rational w = xmax - xmin, h = ymax - ymin;
    if (w == 0) w = 1;
    if (h == 0) h = 1;
    Rational pad_x = w / 10, pad_y = h / 10;
    xmin -= pad_x; xmax += pad_x;
    ymin -= pad_y; ymax += pad_y;
    w = xmax - xmin;
    h = ymax - ymin;
    Rational stroke = std::max(w, h) / 200;
    Rational dot_r = std::max(w, h) / 100;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << dec4(xmin) << " "
        << dec4(ymin) << " " << dec4(w) << " " << dec4(h) << "\">\n";
    for (const auto& item : scene.items) {
        auto [xa, ya] = chart.project(item.a);
        switch (item.kind) {
            case SvgItem::Kind::Point:
                out << "  <circle cx=\"" << dec4(xa) << "\" cy=\"" << dec4(ya) << "\" r=\""
                    << dec4(dot_r) << "\" fill=\"black\"><title>" << item.name
                    << "</title></circle>\n";
                break;
            case SvgItem::Kind::Segment: {
                auto [xb, yb] = chart.project(item.b);
                out << "  <line x1=\"" << dec4(xa) << "\" y1=\"" << dec4(ya) << "\" x2=\""
                    << dec4(xb) << "\" y2=\"" << dec4(yb) << "\" stroke=\"black\" stroke-width=\""
                    << dec4(stroke) << "\"><title>" << item.name << "</title></line>\n";
                break;
            }
            case SvgItem::Kind::Line: {
                // clip base + t*dir to the viewport rectangle
                auto [xb, yb] = chart.project(item.b);
                Rational dx = xb - xa, dy = yb - ya;
                Rational tmin, tmax;
                bool have = false, empty = false;
                auto slab = [&](const Rational& d, const Rational& o, const Rational& lo,
                                const Rational& hi) {
                    if (d == 0) {
                        if (o < lo || o > hi) empty = true;
                        return;
                    }
                    Rational t0 = (lo - o) / d, t1 = (hi - o) / d;
                    if (t0 > t1) std::swap(t0, t1);
                    if (!have) {
                        tmin = t0; tmax = t1; have = true;
                    } else {
                        tmin = std::max(tmin, t0);
                        tmax = std::min(tmax, t1);
                    }
                };
                slab(dx, xa, xmin, xmax);
                slab(dy, ya, ymin, ymax);
                if (empty || !have || tmin > tmax) break;
                Rational x1 = xa + tmin * dx, y1 = ya + tmin * dy;
                Rational x2 = xa + tmax * dx, y2 = ya + tmax * dy;
                out << "  <line x1=\"" << dec4(x1) << "\" y1=\"" << dec4(y1) << "\" x2=\""
                    << dec4(x2) << "\" y2=\"" << dec4(y2)
                    << "\" stroke=\"gray\" stroke-width=\"" << dec4(stroke) << "\"><title>"
                    << item.name << "</title></line>\n";
                break;
            }
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace geom

#include "render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace anyonlab::render {

namespace {

template <class F>
void each_bond(const Scene& s, F f) {
    for (const auto* set : {&s.dashed, &s.thick, &s.primal, &s.dual, &s.crossings})
        for (const auto& b : *set) f(b);
    for (const auto& [b, _] : s.letters) f(b);
}

bool bond_in(const Bond& b, const Viewport& v) {
    for (const auto& p : endpoints(b))
        if (p.x < v.x0 || p.x > v.x1 || p.y < v.y0 || p.y > v.y1) return false;
    return true;
}

bool plaquette_in(Plaquette p, const Viewport& v) {
    return p.x >= v.x0 && p.x + 1 <= v.x1 && p.y >= v.y0 && p.y + 1 <= v.y1;
}

} // namespace

Viewport fit(const Scene& s) {
    Viewport v{INT64_MAX, INT64_MAX, INT64_MIN, INT64_MIN};
    auto grow = [&](Point p) {
        v.x0 = std::min(v.x0, p.x);
        v.y0 = std::min(v.y0, p.y);
        v.x1 = std::max(v.x1, p.x);
        v.y1 = std::max(v.y1, p.y);
    };
    each_bond(s, [&](const Bond& b) {
        for (const auto& p : endpoints(b)) grow(p);
    });
    for (const auto& p : s.star_defects) grow(p);
    for (const auto& p : s.plaquette_defects) {
        grow(p);
        grow(p + Point{1, 1});
    }
    if (s.cone) grow(s.cone->apex);
    if (v.x0 == INT64_MAX) v = {0, 0, 0, 0};
    return {v.x0 - 1, v.y0 - 1, v.x1 + 1, v.y1 + 1};
}

void check_fits(const Scene& s, const Viewport& v) {
    if (v.x1 < v.x0 || v.y1 < v.y0) throw DomainError("viewport is empty");
    bool ok = true;
    each_bond(s, [&](const Bond& b) { ok = ok && bond_in(b, v); });
    for (const auto& p : s.star_defects) ok = ok && p.x >= v.x0 && p.x <= v.x1 && p.y >= v.y0 && p.y <= v.y1;
    for (const auto& p : s.plaquette_defects) ok = ok && plaquette_in(p, v);
    if (!ok) throw DomainError("viewport too small for the requested objects");
}

std::string ascii(const Scene& s, const Viewport& v) {
    check_fits(s, v);
    std::size_t cols = 2 * (v.x1 - v.x0) + 1, rows = 2 * (v.y1 - v.y0) + 1;
    std::vector<std::string> g(rows, std::string(cols, ' '));
    auto at = [&](std::int64_t gx, std::int64_t gy) -> char& { return g[rows - 1 - gy][gx]; };
    auto bond_cell = [&](const Bond& b) -> char& {
        std::int64_t gx = 2 * (b.o.x - v.x0), gy = 2 * (b.o.y - v.y0);
        return b.d == Orient::H ? at(gx + 1, gy) : at(gx, gy + 1);
    };
    for (std::int64_t x = v.x0; x <= v.x1; ++x)
        for (std::int64_t y = v.y0; y <= v.y1; ++y) {
            at(2 * (x - v.x0), 2 * (y - v.y0)) = '+';
            if (x < v.x1) bond_cell(H(x, y)) = '-';
            if (y < v.y1) bond_cell(V(x, y)) = '|';
            if (s.cone && x < v.x1 && y < v.y1) {
                // Shade plaquettes whose four corners lie in the cone.
                bool in = true;
                for (const auto& c : {Point{x, y}, Point{x + 1, y}, Point{x, y + 1}, Point{x + 1, y + 1}})
                    in = in && s.cone->contains_point(c);
                if (in) at(2 * (x - v.x0) + 1, 2 * (y - v.y0) + 1) = '.';
            }
        }
    for (const auto& b : s.dashed) bond_cell(b) = ':';
    for (const auto& b : s.thick) bond_cell(b) = '#';
    for (const auto& b : s.primal) bond_cell(b) = '=';
    for (const auto& b : s.dual) bond_cell(b) = '~';
    for (const auto& [b, l] : s.letters) bond_cell(b) = letter_char(l);
    for (const auto& p : s.star_defects) at(2 * (p.x - v.x0), 2 * (p.y - v.y0)) = '@';
    for (const auto& p : s.plaquette_defects) at(2 * (p.x - v.x0) + 1, 2 * (p.y - v.y0) + 1) = '*';
    for (const auto& b : s.crossings) bond_cell(b) = '!';
    std::ostringstream os;
    for (const auto& r : g) {
        auto end = r.find_last_not_of(' ');
        os << (end == std::string::npos ? "" : r.substr(0, end + 1)) << "\n";
    }
    return os.str();
}

std::string svg(const Scene& s, const Viewport& v) {
    check_fits(s, v);
    const std::int64_t u = 40, pad = 20;
    std::int64_t wpx = (v.x1 - v.x0) * u + 2 * pad, hpx = (v.y1 - v.y0) * u + 2 * pad;
    auto px = [&](std::int64_t x) { return (x - v.x0) * u + pad; };
    auto py = [&](std::int64_t y) { return (v.y1 - y) * u + pad; };
    std::ostringstream os;
    auto line = [&](const Bond& b, const std::string& style) {
        auto e = endpoints(b);
        os << "<line x1=\"" << px(e[0].x) << "\" y1=\"" << py(e[0].y) << "\" x2=\"" << px(e[1].x) << "\" y2=\""
           << py(e[1].y) << "\" " << style << "/>\n";
    };
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << wpx << "\" height=\"" << hpx << "\" viewBox=\"0 0 "
       << wpx << " " << hpx << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (s.cone)
        for (std::int64_t x = v.x0; x < v.x1; ++x)
            for (std::int64_t y = v.y0; y < v.y1; ++y) {
                bool in = true;
                for (const auto& c : {Point{x, y}, Point{x + 1, y}, Point{x, y + 1}, Point{x + 1, y + 1}})
                    in = in && s.cone->contains_point(c);
                if (in)
                    os << "<rect x=\"" << px(x) << "\" y=\"" << py(y + 1) << "\" width=\"" << u << "\" height=\"" << u
                       << "\" fill=\"#fff3c4\"/>\n";
            }
    for (std::int64_t x = v.x0; x <= v.x1; ++x)
        for (std::int64_t y = v.y0; y <= v.y1; ++y) {
            if (x < v.x1) line(H(x, y), "stroke=\"#cccccc\" stroke-width=\"1\"");
            if (y < v.y1) line(V(x, y), "stroke=\"#cccccc\" stroke-width=\"1\"");
        }
    for (const auto& b : s.dashed) line(b, "stroke=\"black\" stroke-width=\"2\" stroke-dasharray=\"6,4\"");
    for (const auto& b : s.thick) line(b, "stroke=\"black\" stroke-width=\"5\"");
    for (const auto& b : s.primal) line(b, "stroke=\"#1f5fbf\" stroke-width=\"4\"");
    for (const auto& b : s.dual) {
        // Dual crossings are drawn as the segment joining the two plaquette centres.
        auto f = faces(b);
        os << "<line x1=\"" << px(f[0].x) + u / 2 << "\" y1=\"" << py(f[0].y) - u / 2 << "\" x2=\""
           << px(f[1].x) + u / 2 << "\" y2=\"" << py(f[1].y) - u / 2
           << "\" stroke=\"#bf3f1f\" stroke-width=\"4\"/>\n";
    }
    for (const auto& [b, l] : s.letters) {
        auto e = endpoints(b);
        os << "<text x=\"" << (px(e[0].x) + px(e[1].x)) / 2 << "\" y=\"" << (py(e[0].y) + py(e[1].y)) / 2
           << "\" font-size=\"14\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << letter_char(l)
           << "</text>\n";
    }
    for (const auto& p : s.star_defects)
        os << "<circle cx=\"" << px(p.x) << "\" cy=\"" << py(p.y) << "\" r=\"7\" fill=\"#1f5fbf\"/>\n";
    for (const auto& p : s.plaquette_defects)
        os << "<rect x=\"" << px(p.x) + u / 2 - 7 << "\" y=\"" << py(p.y) - u / 2 - 7
           << "\" width=\"14\" height=\"14\" fill=\"#bf3f1f\"/>\n";
    for (const auto& b : s.crossings) {
        auto e = endpoints(b);
        os << "<circle cx=\"" << (px(e[0].x) + px(e[1].x)) / 2 << "\" cy=\"" << (py(e[0].y) + py(e[1].y)) / 2
           << "\" r=\"9\" fill=\"none\" stroke=\"#d00000\" stroke-width=\"3\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace anyonlab::render

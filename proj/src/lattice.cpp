#include "anyonlab/lattice.hpp"

#include <algorithm>

namespace anyonlab {

namespace {

using i128 = __int128;

i128 cross(Point a, Point b) { return i128(a.x) * b.y - i128(a.y) * b.x; }
i128 dot(Point a, Point b) { return i128(a.x) * b.x + i128(a.y) * b.y; }

bool point_on_ray(Point q, Point origin, Point r) {
    Point d = q - origin;
    return cross(r, d) == 0 && dot(r, d) >= 0;
}

// Closed segment [a,b] against closed ray origin + t r, t >= 0.
bool segment_meets_ray(Point a, Point b, Point origin, Point r) {
    Point e = b - a;
    i128 den = cross(r, e);
    Point w = a - origin;
    if (den == 0) {
        if (cross(r, w) != 0) return false;
        return point_on_ray(a, origin, r) || point_on_ray(b, origin, r);
    }
    // origin + t r = a + s e
    i128 tn = cross(w, e);
    i128 sn = cross(w, r);
    if (den < 0) { den = -den; tn = -tn; sn = -sn; }
    return tn >= 0 && sn >= 0 && sn <= den;
}

bool rays_meet(Point p, Point r, Point q, Point s) {
    i128 den = cross(r, s);
    Point w = q - p;
    if (den == 0) {
        if (cross(w, r) != 0) return false;
        return point_on_ray(q, p, r) || point_on_ray(p, q, s);
    }
    i128 tn = cross(w, s);
    i128 un = cross(w, r);
    if (den < 0) { den = -den; tn = -tn; un = -un; }
    return tn >= 0 && un >= 0;
}

} // namespace

std::array<Point, 2> endpoints(const Bond& b) {
    if (b.d == Orient::H) return {b.o, b.o + Point{1, 0}};
    return {b.o, b.o + Point{0, 1}};
}

std::array<Plaquette, 2> faces(const Bond& b) {
    if (b.d == Orient::H) return {b.o, b.o - Point{0, 1}};
    return {b.o, b.o - Point{1, 0}};
}

std::array<Bond, 4> star(Vertex v) {
    return {H(v.x - 1, v.y), H(v.x, v.y), V(v.x, v.y - 1), V(v.x, v.y)};
}

std::array<Bond, 4> plaq(Plaquette p) {
    return {H(p.x, p.y), H(p.x, p.y + 1), V(p.x, p.y), V(p.x + 1, p.y)};
}

bool is_corner(Vertex v, Plaquette p) {
    auto dx = v.x - p.x, dy = v.y - p.y;
    return (dx == 0 || dx == 1) && (dy == 0 || dy == 1);
}

Bond translate(const Bond& b, Point t) { return {b.o + t, b.d}; }

BondSet translate(const BondSet& s, Point t) {
    BondSet out;
    for (const auto& b : s) out.insert(translate(b, t));
    return out;
}

std::string to_string(const Bond& b) {
    return std::string(b.d == Orient::H ? "H(" : "V(") + std::to_string(b.o.x) + "," +
           std::to_string(b.o.y) + ")";
}

Point unit(Dir d) {
    switch (d) {
    case Dir::PX: return {1, 0};
    case Dir::MX: return {-1, 0};
    case Dir::PY: return {0, 1};
    case Dir::MY: return {0, -1};
    }
    return {0, 0};
}

Dir opposite(Dir d) {
    switch (d) {
    case Dir::PX: return Dir::MX;
    case Dir::MX: return Dir::PX;
    case Dir::PY: return Dir::MY;
    case Dir::MY: return Dir::PY;
    }
    return d;
}

Bond primal_step(Vertex v, Dir d) {
    switch (d) {
    case Dir::PX: return H(v.x, v.y);
    case Dir::MX: return H(v.x - 1, v.y);
    case Dir::PY: return V(v.x, v.y);
    case Dir::MY: return V(v.x, v.y - 1);
    }
    return {};
}

Bond dual_step(Plaquette p, Dir d) {
    switch (d) {
    case Dir::PX: return V(p.x + 1, p.y);
    case Dir::MX: return V(p.x, p.y);
    case Dir::PY: return H(p.x, p.y + 1);
    case Dir::MY: return H(p.x, p.y);
    }
    return {};
}

Site Site::vertex(Vertex v) { return {Kind::Vertex, v, {}}; }
Site Site::plaquette(Plaquette p) { return {Kind::Plaquette, {}, p}; }
Site Site::combined(Vertex v, Plaquette p) {
    if (!is_corner(v, p)) throw DomainError("combined site: vertex is not a corner of the plaquette");
    return {Kind::Combined, v, p};
}

FinitePath FinitePath::primal_walk(Vertex from, const std::vector<Dir>& steps) {
    FinitePath f;
    f.kind = PathKind::Primal;
    Point cur = from;
    for (Dir d : steps) {
        f.primal.push_back(primal_step(cur, d));
        cur = cur + unit(d);
    }
    f.start = Site::vertex(from);
    f.end = Site::vertex(cur);
    return f;
}

FinitePath FinitePath::dual_walk(Plaquette from, const std::vector<Dir>& steps) {
    FinitePath f;
    f.kind = PathKind::Dual;
    Point cur = from;
    f.plaquettes.push_back(cur);
    for (Dir d : steps) {
        f.crossed.push_back(dual_step(cur, d));
        cur = cur + unit(d);
        f.plaquettes.push_back(cur);
    }
    f.start = Site::plaquette(from);
    f.end = Site::plaquette(cur);
    return f;
}

FinitePath FinitePath::ribbon(const FinitePath& primal, const FinitePath& dual) {
    if (primal.kind != PathKind::Primal || dual.kind != PathKind::Dual)
        throw DomainError("ribbon needs one primal and one dual path");
    FinitePath f;
    f.kind = PathKind::Ribbon;
    f.primal = primal.primal;
    f.plaquettes = dual.plaquettes;
    f.crossed = dual.crossed;
    // Corner adjacency is enforced where ribbons are built from sites; connector
    // pieces of transporter loops need not start at a combined site.
    f.start = Site{Site::Kind::Combined, primal.start.v, dual.start.p};
    f.end = Site{Site::Kind::Combined, primal.end.v, dual.end.p};
    return f;
}

FinitePath FinitePath::from_bonds(Vertex from, const std::vector<Bond>& bonds) {
    FinitePath f;
    f.kind = PathKind::Primal;
    Point cur = from;
    for (const auto& b : bonds) {
        auto [a, c] = endpoints(b);
        if (a == cur) cur = c;
        else if (c == cur) cur = a;
        else throw DomainError("primal path: bond " + to_string(b) + " does not continue the walk");
        f.primal.push_back(b);
    }
    f.start = Site::vertex(from);
    f.end = Site::vertex(cur);
    return f;
}

FinitePath FinitePath::from_plaquettes(const std::vector<Plaquette>& ps) {
    if (ps.empty()) throw DomainError("dual path: empty plaquette list");
    FinitePath f;
    f.kind = PathKind::Dual;
    f.plaquettes.push_back(ps.front());
    for (std::size_t i = 1; i < ps.size(); ++i) {
        Point d = ps[i] - ps[i - 1];
        Dir dir;
        if (d == Point{1, 0}) dir = Dir::PX;
        else if (d == Point{-1, 0}) dir = Dir::MX;
        else if (d == Point{0, 1}) dir = Dir::PY;
        else if (d == Point{0, -1}) dir = Dir::MY;
        else throw DomainError("dual path: plaquettes are not adjacent");
        f.crossed.push_back(dual_step(ps[i - 1], dir));
        f.plaquettes.push_back(ps[i]);
    }
    f.start = Site::plaquette(ps.front());
    f.end = Site::plaquette(ps.back());
    return f;
}

std::size_t FinitePath::length() const { return std::max(primal.size(), crossed.size()); }

namespace {
BondSet mod2(const std::vector<Bond>& bs) {
    BondSet s;
    for (const auto& b : bs) {
        auto it = s.find(b);
        if (it == s.end()) s.insert(b);
        else s.erase(it);
    }
    return s;
}
} // namespace

BondSet FinitePath::primal_support() const { return mod2(primal); }
BondSet FinitePath::dual_support() const { return mod2(crossed); }

BondSet FinitePath::support() const {
    BondSet s = primal_support();
    for (const auto& b : dual_support()) s.insert(b);
    return s;
}

bool FinitePath::self_avoiding() const {
    auto distinct = [](const std::vector<Point>& pts) {
        std::set<Point> seen;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            bool closing = i + 1 == pts.size() && i > 0 && pts[i] == pts.front();
            if (!seen.insert(pts[i]).second && !closing) return false;
        }
        return true;
    };
    if (kind != PathKind::Dual) {
        std::vector<Point> vs{start.v};
        Point cur = start.v;
        for (const auto& b : primal) {
            auto [a, c] = endpoints(b);
            cur = (a == cur) ? c : a;
            vs.push_back(cur);
        }
        if (!distinct(vs)) return false;
    }
    if (kind != PathKind::Primal && !distinct(plaquettes)) return false;
    // A closed walk must still use each bond once.
    if (BondSet(primal.begin(), primal.end()).size() != primal.size()) return false;
    if (BondSet(crossed.begin(), crossed.end()).size() != crossed.size()) return false;
    return true;
}

FinitePath concat(const FinitePath& a, const FinitePath& b) {
    if (a.kind != b.kind) throw DomainError("concat: path kinds differ");
    bool join_primal = a.kind == PathKind::Dual || a.end.v == b.start.v;
    bool join_dual = a.kind == PathKind::Primal || a.end.p == b.start.p;
    if (!join_primal || !join_dual) throw DomainError("concat: endpoint mismatch");
    FinitePath f = a;
    f.primal.insert(f.primal.end(), b.primal.begin(), b.primal.end());
    f.crossed.insert(f.crossed.end(), b.crossed.begin(), b.crossed.end());
    if (!b.plaquettes.empty())
        f.plaquettes.insert(f.plaquettes.end(), b.plaquettes.begin() + 1, b.plaquettes.end());
    f.end = b.end;
    return f;
}

FinitePath reversed(const FinitePath& p) {
    FinitePath f = p;
    std::reverse(f.primal.begin(), f.primal.end());
    std::reverse(f.crossed.begin(), f.crossed.end());
    std::reverse(f.plaquettes.begin(), f.plaquettes.end());
    std::swap(f.start, f.end);
    return f;
}

FinitePath translate(const FinitePath& p, Point t) {
    FinitePath f = p;
    for (auto& b : f.primal) b = translate(b, t);
    for (auto& b : f.crossed) b = translate(b, t);
    for (auto& q : f.plaquettes) q = q + t;
    f.start.v = f.start.v + t;
    f.start.p = f.start.p + t;
    f.end.v = f.end.v + t;
    f.end.p = f.end.p + t;
    return f;
}

Point Walk::position(std::size_t i) const {
    Point cur = start;
    std::size_t k = std::min(i, prefix.size());
    for (std::size_t j = 0; j < k; ++j) cur = cur + unit(prefix[j]);
    if (i > prefix.size()) {
        auto m = static_cast<std::int64_t>(i - prefix.size());
        Point u = unit(ray);
        cur = cur + Point{u.x * m, u.y * m};
    }
    return cur;
}

SemiInfinitePath SemiInfinitePath::primal_ray(Vertex v, std::vector<Dir> prefix, Dir ray) {
    SemiInfinitePath s;
    s.kind = PathKind::Primal;
    s.start = Site::vertex(v);
    s.primal = {v, std::move(prefix), ray};
    return s;
}

SemiInfinitePath SemiInfinitePath::dual_ray(Plaquette p, std::vector<Dir> prefix, Dir ray) {
    SemiInfinitePath s;
    s.kind = PathKind::Dual;
    s.start = Site::plaquette(p);
    s.dual = {p, std::move(prefix), ray};
    return s;
}

SemiInfinitePath SemiInfinitePath::ribbon_ray(Vertex v, Plaquette p, std::vector<Dir> primal_prefix,
                                              std::vector<Dir> dual_prefix, Dir ray) {
    SemiInfinitePath s;
    s.kind = PathKind::Ribbon;
    s.start = Site::combined(v, p);
    s.primal = {v, std::move(primal_prefix), ray};
    s.dual = {p, std::move(dual_prefix), ray};
    return s;
}

FinitePath SemiInfinitePath::truncate(std::size_t n) const {
    auto steps = [n](const Walk& w) {
        std::vector<Dir> out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) out.push_back(w.step(i));
        return out;
    };
    switch (kind) {
    case PathKind::Primal: return FinitePath::primal_walk(primal.start, steps(primal));
    case PathKind::Dual: return FinitePath::dual_walk(dual.start, steps(dual));
    case PathKind::Ribbon:
        return FinitePath::ribbon(FinitePath::primal_walk(primal.start, steps(primal)),
                                  FinitePath::dual_walk(dual.start, steps(dual)));
    }
    return {};
}

std::vector<Bond> SemiInfinitePath::step_bonds(std::size_t i) const {
    std::vector<Bond> out;
    if (kind != PathKind::Dual) out.push_back(primal_step(primal.position(i), primal.step(i)));
    if (kind != PathKind::Primal) out.push_back(dual_step(dual.position(i), dual.step(i)));
    return out;
}

std::size_t SemiInfinitePath::stabilization_index(const BondSet& region) const {
    auto box = bounding_box(region);
    if (!box) return 0;
    // Beyond the prefix the walk moves monotonically along its ray; past the far
    // side of the region's box (plus one cell for dual offsets) it never returns.
    auto horizon = [&](const Walk& w) {
        Point p0 = w.position(w.prefix.size());
        Point u = unit(w.ray);
        std::int64_t far = 0;
        for (Point c : {Point{box->x0, box->y0}, Point{box->x1, box->y1}}) {
            std::int64_t along = (c.x - p0.x) * u.x + (c.y - p0.y) * u.y;
            far = std::max(far, along);
        }
        return w.prefix.size() + static_cast<std::size_t>(far) + 2;
    };
    std::size_t last = 0;
    if (kind != PathKind::Dual) last = std::max(last, horizon(primal));
    if (kind != PathKind::Primal) last = std::max(last, horizon(dual));
    std::size_t n0 = 0;
    for (std::size_t i = 0; i <= last; ++i)
        for (const auto& b : step_bonds(i))
            if (region.count(b)) n0 = i + 1;
    return n0;
}

SemiInfinitePath translate(const SemiInfinitePath& p, Point t) {
    SemiInfinitePath s = p;
    s.start.v = s.start.v + t;
    s.start.p = s.start.p + t;
    s.primal.start = s.primal.start + t;
    s.dual.start = s.dual.start + t;
    return s;
}

Cone Cone::make(Point apex, Point r1, Point r2) {
    if (r1 == Point{0, 0} || r2 == Point{0, 0}) throw DomainError("cone: zero ray direction");
    i128 c = cross(r1, r2);
    if (c == 0) throw DomainError("cone: opening angle must be strictly between 0 and pi");
    if (c < 0) std::swap(r1, r2);
    return {apex, r1, r2};
}

bool Cone::contains_point(Point q) const {
    Point d = q - apex;
    return cross(ray1, d) >= 0 && cross(d, ray2) >= 0;
}

bool Cone::contains(const Bond& b) const {
    auto [a, c] = endpoints(b);
    if (contains_point(a) || contains_point(c)) return true;
    return segment_meets_ray(a, c, apex, ray1) || segment_meets_ray(a, c, apex, ray2);
}

Cone translate(const Cone& c, Point t) { return {c.apex + t, c.ray1, c.ray2}; }

bool cone_contains(const Cone& c, const Bond& b) { return c.contains(b); }

bool cones_intersect(const Cone& a, const Cone& b) {
    if (a.contains_point(b.apex) || b.contains_point(a.apex)) return true;
    for (Point r : {a.ray1, a.ray2})
        for (Point s : {b.ray1, b.ray2})
            if (rays_meet(a.apex, r, b.apex, s)) return true;
    return false;
}

std::optional<Cone> common_cone(const Cone& a, const Cone& b) {
    auto within = [](Point lo, Point hi, Point r) { return cross(lo, r) >= 0 && cross(r, hi) >= 0; };
    for (auto [lo, hi] : {std::pair{a.ray1, b.ray2}, std::pair{b.ray1, a.ray2}}) {
        if (cross(lo, hi) <= 0) continue;
        if (!within(lo, hi, a.ray1) || !within(lo, hi, a.ray2) || !within(lo, hi, b.ray1) ||
            !within(lo, hi, b.ray2))
            continue;
        Point mid = lo + hi; // strictly inside the opening
        for (std::int64_t t = 1; t < (std::int64_t(1) << 40); t *= 2) {
            Point apex = Point{a.apex.x - t * mid.x, a.apex.y - t * mid.y};
            Cone c{apex, lo, hi};
            if (c.contains_point(a.apex) && c.contains_point(b.apex)) return c;
        }
    }
    return std::nullopt;
}

BondSet box_bonds(std::int64_t x0, std::int64_t y0, std::int64_t x1, std::int64_t y1) {
    BondSet s;
    for (auto y = y0; y <= y1; ++y)
        for (auto x = x0; x < x1; ++x) s.insert(H(x, y));
    for (auto x = x0; x <= x1; ++x)
        for (auto y = y0; y < y1; ++y) s.insert(V(x, y));
    return s;
}

std::optional<BBox> bounding_box(const BondSet& s) {
    if (s.empty()) return std::nullopt;
    BBox b{INT64_MAX, INT64_MAX, INT64_MIN, INT64_MIN};
    for (const auto& bond : s)
        for (Point q : endpoints(bond)) {
            b.x0 = std::min(b.x0, q.x);
            b.y0 = std::min(b.y0, q.y);
            b.x1 = std::max(b.x1, q.x);
            b.y1 = std::max(b.y1, q.y);
        }
    return b;
}

} // namespace anyonlab

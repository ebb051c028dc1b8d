#include "anyonlab/braiding.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace anyonlab {

namespace {

using i128 = __int128;
i128 cross(Point a, Point b) { return i128(a.x) * b.y - i128(a.y) * b.x; }
i128 dot(Point a, Point b) { return i128(a.x) * b.x + i128(a.y) * b.y; }

// Angles are measured counter-clockwise from r0 in [0, 2pi).
int half(Point r0, Point v) {
    i128 c = cross(r0, v);
    return (c > 0 || (c == 0 && dot(r0, v) > 0)) ? 0 : 1;
}
bool angle_less(Point r0, Point u, Point v) {
    int hu = half(r0, u), hv = half(r0, v);
    if (hu != hv) return hu < hv;
    return cross(u, v) > 0;
}
bool angle_leq(Point r0, Point u, Point v) { return !angle_less(r0, v, u); }

Dir dir_between(Point a, Point b) {
    Point d = b - a;
    if (d == Point{1, 0}) return Dir::PX;
    if (d == Point{-1, 0}) return Dir::MX;
    if (d == Point{0, 1}) return Dir::PY;
    return Dir::MY;
}

// Boundary points of a box, counter-clockwise from the lower-left corner.
std::vector<Point> perimeter(const BBox& b) {
    std::vector<Point> out;
    for (auto x = b.x0; x < b.x1; ++x) out.push_back({x, b.y0});
    for (auto y = b.y0; y < b.y1; ++y) out.push_back({b.x1, y});
    for (auto x = b.x1; x > b.x0; --x) out.push_back({x, b.y1});
    for (auto y = b.y1; y > b.y0; --y) out.push_back({b.x0, y});
    return out;
}

bool on_boundary(const BBox& b, Point q) {
    return b.contains(q) && (q.x == b.x0 || q.x == b.x1 || q.y == b.y0 || q.y == b.y1);
}

Bond step_bond(PathKind lattice, Point q, Dir d) {
    return lattice == PathKind::Primal ? primal_step(q, d) : dual_step(q, d);
}

FinitePath walk_path(PathKind lattice, Point from, const std::vector<Dir>& dirs) {
    return lattice == PathKind::Primal ? FinitePath::primal_walk(from, dirs)
                                       : FinitePath::dual_walk(from, dirs);
}

std::vector<Dir> reverse_dirs(const std::vector<Dir>& d) {
    std::vector<Dir> r;
    for (auto it = d.rbegin(); it != d.rend(); ++it) r.push_back(opposite(*it));
    return r;
}

std::vector<Dir> walk_dirs(const Walk& w, std::size_t n) {
    std::vector<Dir> d;
    for (std::size_t i = 0; i < n; ++i) d.push_back(w.step(i));
    return d;
}

// Steps along the perimeter from index i to index j, going counter-clockwise (ccw) or clockwise.
std::vector<Dir> perimeter_arc(const std::vector<Point>& per, std::size_t i, std::size_t j, bool ccw) {
    std::vector<Dir> out;
    std::size_t L = per.size();
    while (i != j) {
        std::size_t k = ccw ? (i + 1) % L : (i + L - 1) % L;
        out.push_back(dir_between(per[i], per[k]));
        i = k;
    }
    return out;
}

// Does the ccw arc i -> j pass strictly through index c?
bool ccw_passes(std::size_t i, std::size_t j, std::size_t c, std::size_t L) {
    auto fwd = [L](std::size_t a, std::size_t b) { return (b + L - a) % L; };
    return c != i && c != j && fwd(i, c) < fwd(i, j);
}

std::size_t index_of(const std::vector<Point>& per, Point q) {
    auto it = std::find(per.begin(), per.end(), q);
    if (it == per.end()) throw std::logic_error("point is not on the perimeter");
    return static_cast<std::size_t>(it - per.begin());
}

// Straight moves from q to the boundary of b, leaving along the dominant axis of q - c.
std::vector<Dir> to_boundary(Point q, Point c, const BBox& b) {
    std::vector<Dir> out;
    Point d = q - c;
    Dir dir;
    if (d.x == 0 && d.y == 0) dir = Dir::PY;
    else if (std::abs(d.x) >= std::abs(d.y)) dir = d.x > 0 ? Dir::PX : Dir::MX;
    else dir = d.y > 0 ? Dir::PY : Dir::MY;
    while (!on_boundary(b, q)) {
        out.push_back(dir);
        q = q + unit(dir);
    }
    return out;
}

Point advance(Point q, const std::vector<Dir>& ds) {
    for (Dir d : ds) q = q + unit(d);
    return q;
}

// Connector from P to Q that stays at sup-distance >= min(|P-c|, |Q-c|) from c and
// avoids the point straight below c when it can.
std::vector<Dir> far_connector(Point P, Point Q, Point c) {
    auto r = [&](Point q) { return std::max(std::abs(q.x - c.x), std::abs(q.y - c.y)); };
    std::int64_t R = std::max(r(P), r(Q));
    if (P == Q) return {};
    if (R == 0) return {};
    BBox box{c.x - R, c.y - R, c.x + R, c.y + R};
    auto out1 = to_boundary(P, c, box);
    auto out2 = to_boundary(Q, c, box);
    Point P1 = advance(P, out1), Q1 = advance(Q, out2);
    auto per = perimeter(box);
    std::size_t i = index_of(per, P1), j = index_of(per, Q1), cut = index_of(per, {c.x, c.y - R});
    bool ccw = !ccw_passes(i, j, cut, per.size());
    auto arc = perimeter_arc(per, i, j, ccw);
    std::vector<Dir> all = out1;
    all.insert(all.end(), arc.begin(), arc.end());
    auto back = reverse_dirs(out2);
    all.insert(all.end(), back.begin(), back.end());
    return all;
}

std::vector<Dir> straight(Point from, Point to) {
    std::vector<Dir> out;
    while (from.x != to.x) {
        Dir d = to.x > from.x ? Dir::PX : Dir::MX;
        out.push_back(d);
        from = from + unit(d);
    }
    while (from.y != to.y) {
        Dir d = to.y > from.y ? Dir::PY : Dir::MY;
        out.push_back(d);
        from = from + unit(d);
    }
    return out;
}

struct LatticeLoop {
    FinitePath loop;
    FinitePath connector;
    std::optional<FinitePath> base;
};

LatticeLoop transporter_loop(PathKind lattice, const Walk& w1, const Walk& w2, std::size_t n) {
    Point P = w1.position(n), Q = w2.position(n);
    auto conn = far_connector(P, Q, w1.start);
    auto d1 = walk_dirs(w1, n);
    auto d2 = reverse_dirs(walk_dirs(w2, n));
    std::vector<Dir> all = d1;
    all.insert(all.end(), conn.begin(), conn.end());
    all.insert(all.end(), d2.begin(), d2.end());
    LatticeLoop out;
    out.connector = walk_path(lattice, P, conn);
    if (w2.start != w1.start) {
        auto b = straight(w2.start, w1.start);
        all.insert(all.end(), b.begin(), b.end());
        out.base = walk_path(lattice, w2.start, b);
    }
    out.loop = walk_path(lattice, w1.start, all);
    return out;
}

} // namespace

ConeFrame ConeFrame::standard() { return {Cone::make({0, 0}, {-15, -26}, {15, -26})}; }

bool admissible(const Cone& c, const ConeFrame& f) {
    Point r0 = f.forbidden.ray2;
    Point fend = f.forbidden.ray1;
    if (!angle_less(r0, r0, c.ray1)) return false;
    if (!angle_less(r0, c.ray1, c.ray2)) return false;
    return angle_less(r0, c.ray2, fend);
}

bool cone_less(const Cone& a, const Cone& b, const ConeFrame& f) {
    if (cones_intersect(a, b)) throw DomainError("cone order needs disjoint cones");
    if (!admissible(a, f) || !admissible(b, f))
        throw DomainError("cone order needs cones clear of the forbidden direction");
    Point r0 = f.forbidden.ray2;
    if (angle_leq(r0, b.ray2, a.ray1)) return true;
    if (angle_leq(r0, a.ray2, b.ray1)) return false;
    throw std::logic_error("disjoint cones with overlapping directions");
}

BondSet TransporterStep::avoid() const {
    BondSet s = connector.support();
    if (base) for (const auto& b : base->support()) s.insert(b);
    return s;
}

TransporterStep transporter(const SectorSpec& s1, const SectorSpec& s2, std::size_t n) {
    if (s1.label != s2.label) throw DomainError("transporter: sector labels differ");
    if (!s1.path || !s2.path) throw DomainError("transporter: the trivial sector needs no transport");
    if (s1.path->kind != s2.path->kind) throw DomainError("transporter: path types differ");
    PathKind kind = s1.path->kind;
    TransporterStep t;
    t.n = n;
    std::optional<LatticeLoop> pl, dl;
    if (kind != PathKind::Dual) pl = transporter_loop(PathKind::Primal, s1.path->primal, s2.path->primal, n);
    if (kind != PathKind::Primal) dl = transporter_loop(PathKind::Dual, s1.path->dual, s2.path->dual, n);
    switch (kind) {
    case PathKind::Primal:
        t.op = string_operator(pl->loop, StringType::Z);
        t.connector = pl->connector;
        t.base = pl->base;
        break;
    case PathKind::Dual:
        t.op = string_operator(dl->loop, StringType::X);
        t.connector = dl->connector;
        t.base = dl->base;
        break;
    case PathKind::Ribbon:
        t.op = string_operator(FinitePath::ribbon(pl->loop, dl->loop), StringType::Y);
        t.connector = FinitePath::ribbon(pl->connector, dl->connector);
        if (pl->base || dl->base) {
            FinitePath pb = pl->base ? *pl->base : FinitePath::primal_walk(s1.path->primal.start, {});
            FinitePath db = dl->base ? *dl->base : FinitePath::dual_walk(s1.path->dual.start, {});
            t.base = FinitePath::ribbon(pb, db);
        }
        break;
    }
    return t;
}

bool intertwines(const TransporterStep& v, const SectorSpec& s1, const SectorSpec& s2,
                 const PauliOperator& b) {
    return v.op * apply_automorphism(s1, b) == apply_automorphism(s2, b) * v.op;
}

std::size_t transporter_bound(const SectorSpec& s1, const SectorSpec& s2, const BondSet& region) {
    auto box = bounding_box(region);
    if (!box || !s1.path) return 0;
    // Connectors keep sup-distance >= min(|P-c|, |Q-c|) from the start of s1, which
    // grows once both walks are on their rays; scan up to where it clears the region.
    Point c = s1.path->kind == PathKind::Dual ? s1.path->dual.start : s1.path->primal.start;
    std::int64_t reach = std::max({std::abs(box->x0 - c.x), std::abs(box->x1 - c.x),
                                   std::abs(box->y0 - c.y), std::abs(box->y1 - c.y)}) + 2;
    std::size_t pre = std::max({s1.path->primal.prefix.size(), s1.path->dual.prefix.size(),
                                s2.path->primal.prefix.size(), s2.path->dual.prefix.size()});
    Point c2 = s2.path->kind == PathKind::Dual ? s2.path->dual.start : s2.path->primal.start;
    std::int64_t offset = std::max(std::abs(c2.x - c.x), std::abs(c2.y - c.y));
    std::size_t far = pre * 2 + static_cast<std::size_t>(reach + offset) + 2;
    std::size_t bound = 0;
    for (std::size_t n = 0; n <= far; ++n) {
        auto t = transporter(s1, s2, n);
        auto conn = t.connector.support();
        for (const auto& b : conn)
            if (region.count(b)) { bound = n + 1; break; }
    }
    return bound;
}

namespace {

struct Component {
    PathKind lattice;
    const Walk* walk;
};

std::vector<Component> components(const SectorSpec& s) {
    std::vector<Component> out;
    if (!s.path) return out;
    if (s.path->kind != PathKind::Dual) out.push_back({PathKind::Primal, &s.path->primal});
    if (s.path->kind != PathKind::Primal) out.push_back({PathKind::Dual, &s.path->dual});
    return out;
}

BBox lattice_box(PathKind lattice, const BBox& vbox) {
    if (lattice == PathKind::Primal) return vbox;
    return {vbox.x0, vbox.y0, vbox.x1 - 1, vbox.y1 - 1};
}

std::size_t exit_index(const Walk& w, const BBox& box) {
    std::size_t i = w.prefix.size();
    while (!on_boundary(box, w.position(i))) {
        if (!box.contains(w.position(i))) throw std::logic_error("walk left the box before its ray");
        ++i;
    }
    return i;
}

// Perimeter index just before the forbidden direction, seen from the box centre.
std::size_t target_index(const std::vector<Point>& per, const BBox& box, const ConeFrame& f,
                         std::size_t& cut) {
    Point d = f.forbidden.ray1 + f.forbidden.ray2;
    Point cen{(box.x0 + box.x1) / 2, (box.y0 + box.y1) / 2};
    std::size_t L = per.size();
    for (std::size_t i = 0; i < L; ++i) {
        Point a = per[i] - cen, b = per[(i + 1) % L] - cen;
        if (cross(d, a) <= 0 && cross(d, b) > 0 && dot(d, a) > 0) {
            cut = i;
            return (i + L - 1) % L;
        }
    }
    throw std::logic_error("forbidden direction does not meet the box");
}

std::vector<Dir> bfs(PathKind lattice, Point from, Point to, const BBox& box, const BondSet& blocked) {
    std::map<Point, std::pair<Point, Dir>> parent;
    std::deque<Point> q{from};
    parent[from] = {from, Dir::PX};
    while (!q.empty()) {
        Point cur = q.front();
        q.pop_front();
        if (cur == to) break;
        for (Dir d : {Dir::PX, Dir::PY, Dir::MX, Dir::MY}) {
            Point nx = cur + unit(d);
            if (!box.contains(nx) || parent.count(nx)) continue;
            if (blocked.count(step_bond(lattice, cur, d))) continue;
            parent[nx] = {cur, d};
            q.push_back(nx);
        }
    }
    if (!parent.count(to)) throw DomainError("cannot route a transport loop around the other strings");
    std::vector<Dir> path;
    for (Point cur = to; cur != from; cur = parent[cur].first) path.push_back(parent[cur].second);
    std::reverse(path.begin(), path.end());
    return path;
}

BraidResult braid_at(const ComposedSector& s1, const ComposedSector& s2, const ConeFrame& f,
                     std::int64_t margin) {
    BBox ext{INT64_MAX, INT64_MAX, INT64_MIN, INT64_MIN};
    auto grow = [&](Point q) {
        ext.x0 = std::min(ext.x0, q.x);
        ext.y0 = std::min(ext.y0, q.y);
        ext.x1 = std::max(ext.x1, q.x + 1);
        ext.y1 = std::max(ext.y1, q.y + 1);
    };
    for (const auto* sec : {&s1, &s2})
        for (const auto& part : sec->parts)
            for (const auto& c : components(part))
                for (std::size_t i = 0; i <= c.walk->prefix.size() + 1; ++i) grow(c.walk->position(i));
    BraidResult res;
    res.margin = margin;
    if (ext.x0 == INT64_MAX) return res;
    BBox vbox{ext.x0 - margin, ext.y0 - margin, ext.x1 + margin, ext.y1 + margin};

    BondSet blocked;
    std::vector<PauliOperator> strings;
    for (const auto& part : s1.parts) {
        std::size_t N = 0;
        for (const auto& c : components(part))
            N = std::max(N, exit_index(*c.walk, lattice_box(c.lattice, vbox)) + 3);
        for (std::size_t i = 0; i < N; ++i)
            for (const auto& b : part.path->step_bonds(i)) blocked.insert(b);
        strings.push_back(part.string(N));
    }

    for (const auto& part : s2.parts) {
        std::optional<FinitePath> ploop, dloop;
        for (const auto& c : components(part)) {
            BBox box = lattice_box(c.lattice, vbox);
            auto per = perimeter(box);
            std::size_t cut = 0;
            std::size_t target = target_index(per, box, f, cut);
            std::size_t m = exit_index(*c.walk, box);
            std::size_t pi = index_of(per, c.walk->position(m));
            if (pi == cut) throw DomainError("a string leaves through the forbidden direction");
            auto dirs = walk_dirs(*c.walk, m);
            auto arc = perimeter_arc(per, pi, target, true);
            dirs.insert(dirs.end(), arc.begin(), arc.end());
            auto back = reverse_dirs(bfs(c.lattice, c.walk->start, per[target], box, blocked));
            dirs.insert(dirs.end(), back.begin(), back.end());
            auto loop = walk_path(c.lattice, c.walk->start, dirs);
            (c.lattice == PathKind::Primal ? ploop : dloop) = loop;
        }
        PauliOperator op;
        if (ploop && dloop) op = string_operator(FinitePath::ribbon(*ploop, *dloop), StringType::Y);
        else if (ploop) op = string_operator(*ploop, StringType::Z);
        else op = string_operator(*dloop, StringType::X);
        if (!is_stabilizer_product(op)) throw std::logic_error("transport loop is not closed");
        for (const auto& g : strings) {
            if (anticommute(op, g)) res.sign = -res.sign;
            for (const auto& [b, l] : op.letters()) {
                Letter o = g.at(b);
                if (o != Letter::I && o != l) res.crossings.push_back(b);
            }
        }
        res.loops.push_back(op);
    }
    return res;
}

} // namespace

BraidResult braiding_phase(const ComposedSector& s1, const ComposedSector& s2, const ConeFrame& f) {
    std::int64_t extent = 0;
    for (const auto* sec : {&s1, &s2})
        for (const auto& part : sec->parts) {
            if (part.cone && !admissible(*part.cone, f))
                throw DomainError("sector cone meets the forbidden direction of the frame");
            for (const auto& c : components(part)) {
                extent = std::max<std::int64_t>(extent, c.walk->prefix.size());
                extent = std::max({extent, std::abs(c.walk->start.x), std::abs(c.walk->start.y)});
            }
        }
    std::int64_t margin = 2 * extent + 8;
    BraidResult r = braid_at(s1, s2, f, margin);
    BraidResult wider = braid_at(s1, s2, f, 2 * margin + 3);
    if (r.sign != wider.sign) throw std::logic_error("crossing parity did not stabilize");
    if (s1.parts.size() == 1 && s2.parts.size() == 1 && s1.parts[0].cone && s2.parts[0].cone &&
        !cones_intersect(*s1.parts[0].cone, *s2.parts[0].cone))
        r.first_less = cone_less(*s1.parts[0].cone, *s2.parts[0].cone, f);
    return r;
}

int braiding_phase(const SectorSpec& s1, const SectorSpec& s2, const ConeFrame& f) {
    auto wrap = [](const SectorSpec& s) {
        ComposedSector c;
        if (s.path) c.parts.push_back(s);
        c.cone = s.cone;
        return c;
    };
    return braiding_phase(wrap(s1), wrap(s2), f).sign;
}

Representatives Representatives::standard() {
    return {SectorSpec::make(Label::X, SemiInfinitePath::dual_ray({0, 1}, {}, Dir::PY),
                             Cone::make({0, 1}, {1, 4}, {-1, 4})),
            SectorSpec::make(Label::Z, SemiInfinitePath::primal_ray({1, 0}, {}, Dir::PX),
                             Cone::make({0, 0}, {4, -1}, {4, 1}))};
}

Representatives Representatives::swapped() {
    return {SectorSpec::make(Label::X, SemiInfinitePath::dual_ray({1, 0}, {}, Dir::PX),
                             Cone::make({0, 0}, {4, -1}, {4, 1})),
            SectorSpec::make(Label::Z, SemiInfinitePath::primal_ray({0, 1}, {}, Dir::PY),
                             Cone::make({0, 1}, {1, 4}, {-1, 4}))};
}

SectorSpec Representatives::ribbon() const {
    return SectorSpec::make(Label::Y, SemiInfinitePath::ribbon_ray({0, 0}, {0, 0}, {}, {}, Dir::PX),
                            Cone::make({-1, 0}, {4, -1}, {4, 1}));
}

ComposedSector Representatives::of(Label l) const {
    switch (l) {
    case Label::One: return {};
    case Label::X: return compose(x, SectorSpec::vacuum());
    case Label::Z: return compose(z, SectorSpec::vacuum());
    case Label::Y: return compose(x, z);
    }
    return {};
}

SignTable braiding_table(const Representatives& r, const ConeFrame& f) {
    SignTable t{};
    for (Label a : kLabels)
        for (Label b : kLabels)
            t[static_cast<int>(a)][static_cast<int>(b)] = braiding_phase(r.of(a), r.of(b), f).sign;
    return t;
}

bool braid_equation_check(Label a, Label b, Label c, const Representatives& r, const ConeFrame& f) {
    auto eps = [&](const ComposedSector& p, const ComposedSector& q) { return braiding_phase(p, q, f).sign; };
    auto A = r.of(a), B = r.of(b), C = r.of(c);
    bool first = eps(A, compose(B, C)) == eps(A, C) * eps(A, B);
    bool second = eps(compose(A, B), C) == eps(A, C) * eps(B, C);
    return first && second;
}

int self_braiding(const ComposedSector& s, const ConeFrame& f) { return braiding_phase(s, s, f).sign; }

int twist(Label l, const Representatives& r, const ConeFrame& f) {
    // With unit R and R-bar the twist collapses to the self-braiding scalar.
    return self_braiding(r.of(l), f);
}

int twist(Label l) { return twist(l, Representatives::standard(), ConeFrame::standard()); }

Conjugate conjugate(Label l, const Representatives& r, const std::vector<QuasiLocalOperator>& samples) {
    Conjugate c{l, PauliOperator::identity(), PauliOperator::identity(), false};
    auto rho = r.of(l);
    PauliOperator I = PauliOperator::identity();
    bool eq1 = c.rbar.adjoint() * rho.apply(c.r) == I;
    bool eq2 = c.r.adjoint() * rho.apply(c.rbar) == I;
    auto both = compose(rho, rho);
    bool trivial = std::all_of(samples.begin(), samples.end(),
                               [&](const QuasiLocalOperator& a) { return both.apply(a) == a; });
    c.equations_hold = eq1 && eq2 && trivial;
    return c;
}

} // namespace anyonlab

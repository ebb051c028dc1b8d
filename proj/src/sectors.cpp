#include "anyonlab/sectors.hpp"

#include <algorithm>

namespace anyonlab {

std::string label_name(Label l) {
    switch (l) {
    case Label::One: return "1";
    case Label::X: return "X";
    case Label::Y: return "Y";
    case Label::Z: return "Z";
    }
    return "?";
}

Label parse_label(const std::string& s) {
    if (s == "1" || s == "One" || s == "one") return Label::One;
    if (s == "X") return Label::X;
    if (s == "Y") return Label::Y;
    if (s == "Z") return Label::Z;
    throw std::invalid_argument("unknown sector label '" + s + "'");
}

namespace {

PathKind kind_for(Label l) {
    switch (l) {
    case Label::X: return PathKind::Dual;
    case Label::Z: return PathKind::Primal;
    case Label::Y: return PathKind::Ribbon;
    default: throw DomainError("the trivial sector has no path");
    }
}

bool direction_in_cone(Dir d, const Cone& c) {
    Point u = unit(d);
    auto cr = [](Point a, Point b) { return a.x * b.y - a.y * b.x; };
    return cr(c.ray1, u) >= 0 && cr(u, c.ray2) >= 0;
}

} // namespace

bool path_in_cone(const SemiInfinitePath& path, const Cone& cone) {
    // Each ray bond is a translate of the first one along a direction inside the cone.
    std::size_t upto = std::max(path.primal.prefix.size(), path.dual.prefix.size()) + 1;
    for (std::size_t i = 0; i < upto; ++i)
        for (const auto& b : path.step_bonds(i))
            if (!cone.contains(b)) return false;
    if (path.kind != PathKind::Dual && !direction_in_cone(path.primal.ray, cone)) return false;
    if (path.kind != PathKind::Primal && !direction_in_cone(path.dual.ray, cone)) return false;
    return true;
}

SectorSpec SectorSpec::make(Label label, SemiInfinitePath path, Cone cone) {
    if (label == Label::One) throw DomainError("the trivial sector takes no path");
    if (path.kind != kind_for(label))
        throw DomainError("sector " + label_name(label) + " needs a " +
                          (label == Label::X ? "dual" : label == Label::Z ? "primal" : "ribbon") + " path");
    if (!path_in_cone(path, cone)) throw DomainError("sector path leaves its cone");
    return {label, std::move(path), cone};
}

PauliOperator SectorSpec::string(std::size_t n) const {
    if (!path) return PauliOperator::identity();
    return truncated_string(*path, n);
}

std::size_t SectorSpec::stabilization_index(const BondSet& region) const {
    return path ? path->stabilization_index(region) : 0;
}

SectorSpec translate(const SectorSpec& s, Point t) {
    SectorSpec r = s;
    if (r.path) r.path = translate(*r.path, t);
    if (r.cone) r.cone = translate(*r.cone, t);
    return r;
}

PauliOperator apply_automorphism(const SectorSpec& s, const PauliOperator& a) {
    if (!s.path) return a;
    PauliOperator g = s.string(s.stabilization_index(a.support()));
    return g * a * g.adjoint();
}

QuasiLocalOperator apply_automorphism(const SectorSpec& s, const QuasiLocalOperator& a) {
    if (!s.path) return a;
    PauliOperator g = s.string(s.stabilization_index(a.support()));
    return QuasiLocalOperator(g) * a * QuasiLocalOperator(g.adjoint());
}

Gauss excitation_expectation(const SectorSpec& s, const QuasiLocalOperator& a) {
    return vacuum_expectation(apply_automorphism(s, a));
}

Syndrome syndrome(const PauliOperator& a) {
    Syndrome out;
    for (const auto& [b, l] : a.letters()) {
        for (const auto& v : endpoints(b))
            if (!out.stars.count(v) && anticommute(star_operator(v), a)) out.stars.insert(v);
        for (const auto& p : faces(b))
            if (!out.plaquettes.count(p) && anticommute(plaquette_operator(p), a)) out.plaquettes.insert(p);
    }
    return out;
}

namespace {

void grow(BBox& box, Point q) {
    box.x0 = std::min(box.x0, q.x);
    box.y0 = std::min(box.y0, q.y);
    box.x1 = std::max(box.x1, q.x);
    box.y1 = std::max(box.y1, q.y);
}

void grow_by_site(BBox& box, const SectorSpec& s) {
    if (!s.path) return;
    if (s.path->kind != PathKind::Dual) grow(box, s.path->start.v);
    if (s.path->kind != PathKind::Primal) {
        grow(box, s.path->start.p);
        grow(box, s.path->start.p + Point{1, 1});
    }
}

// Vertex box enclosing both start sites and the excluded region, with one spare row.
BBox enclosing_box(const SectorSpec& a, const SectorSpec& b, const BondSet& excluded) {
    BBox box{INT64_MAX, INT64_MAX, INT64_MIN, INT64_MIN};
    if (auto e = bounding_box(excluded)) {
        grow(box, {e->x0, e->y0});
        grow(box, {e->x1, e->y1});
    }
    grow_by_site(box, a);
    grow_by_site(box, b);
    return {box.x0 - 1, box.y0 - 1, box.x1 + 1, box.y1 + 1};
}

// Z on the boundary of the vertex box: the product of all plaquettes inside.
PauliOperator primal_loop(const BBox& b) {
    BondSet s;
    for (auto x = b.x0; x < b.x1; ++x) {
        s.insert(H(x, b.y0));
        s.insert(H(x, b.y1));
    }
    for (auto y = b.y0; y < b.y1; ++y) {
        s.insert(V(b.x0, y));
        s.insert(V(b.x1, y));
    }
    return PauliOperator::on(s, Letter::Z);
}

// X on bonds leaving the vertex box: the product of all stars inside.
PauliOperator dual_loop(const BBox& b) {
    BondSet s;
    for (auto y = b.y0; y <= b.y1; ++y) {
        s.insert(H(b.x0 - 1, y));
        s.insert(H(b.x1, y));
    }
    for (auto x = b.x0; x <= b.x1; ++x) {
        s.insert(V(x, b.y0 - 1));
        s.insert(V(x, b.y1));
    }
    return PauliOperator::on(s, Letter::X);
}

} // namespace

PauliOperator sector_distinguisher(const SectorSpec& s, const BondSet& excluded) {
    if (s.label == Label::One) throw DomainError("the trivial sector cannot be told apart from the vacuum");
    return sector_distinguisher(s, SectorSpec::vacuum(), excluded);
}

PauliOperator sector_distinguisher(const SectorSpec& a, const SectorSpec& b, const BondSet& excluded) {
    Label diff = a.label * b.label;
    if (diff == Label::One) throw DomainError("sectors with equal labels cannot be separated by a loop");
    BBox box = enclosing_box(a, b, excluded);
    // A Z loop detects the flux end of a dual string, an X loop the charge end of a primal one.
    return has_flux(diff) ? primal_loop(box) : dual_loop(box);
}

Label ComposedSector::label() const {
    Label l = Label::One;
    for (const auto& p : parts) l = l * p.label;
    return l;
}

PauliOperator ComposedSector::apply(const PauliOperator& a) const {
    PauliOperator r = a;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) r = apply_automorphism(*it, r);
    return r;
}

QuasiLocalOperator ComposedSector::apply(const QuasiLocalOperator& a) const {
    QuasiLocalOperator r = a;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) r = apply_automorphism(*it, r);
    return r;
}

Gauss ComposedSector::expectation(const QuasiLocalOperator& a) const {
    return vacuum_expectation(apply(a));
}

ComposedSector compose(const ComposedSector& a, const ComposedSector& b) {
    ComposedSector r;
    r.parts = a.parts;
    r.parts.insert(r.parts.end(), b.parts.begin(), b.parts.end());
    if (a.cone && b.cone) {
        r.cone = common_cone(*a.cone, *b.cone);
        if (!r.cone) throw DomainError("compose: the two cones do not fit in a common cone");
    } else {
        r.cone = a.cone ? a.cone : b.cone;
    }
    return r;
}

ComposedSector compose(const SectorSpec& a, const SectorSpec& b) {
    auto wrap = [](const SectorSpec& s) {
        ComposedSector c;
        if (s.label != Label::One) c.parts.push_back(s);
        c.cone = s.cone;
        return c;
    };
    return compose(wrap(a), wrap(b));
}

QuasiLocalOperator local_hamiltonian(const BondSet& region) {
    std::set<Vertex> vs;
    std::set<Plaquette> ps;
    for (const auto& b : region) {
        for (const auto& v : endpoints(b)) vs.insert(v);
        for (const auto& p : faces(b)) ps.insert(p);
    }
    auto inside = [&](const std::array<Bond, 4>& bs) {
        return std::all_of(bs.begin(), bs.end(), [&](const Bond& b) { return region.count(b) > 0; });
    };
    QuasiLocalOperator h;
    for (const auto& v : vs)
        if (inside(star(v))) h = h - QuasiLocalOperator(star_operator(v));
    for (const auto& p : ps)
        if (inside(plaq(p))) h = h - QuasiLocalOperator(plaquette_operator(p));
    return h;
}

QuasiLocalOperator dynamics_shift(const SectorSpec& s, const BondSet& region) {
    if (s.path) {
        auto inside = [&](const std::array<Bond, 4>& bs) {
            return std::all_of(bs.begin(), bs.end(), [&](const Bond& b) { return region.count(b) > 0; });
        };
        const Site& st = s.path->start;
        if (s.path->kind != PathKind::Dual && !inside(star(st.v)))
            throw DomainError("region does not contain the star of the start defect");
        if (s.path->kind != PathKind::Primal && !inside(plaq(st.p)))
            throw DomainError("region does not contain the plaquette of the start defect");
    }
    QuasiLocalOperator h = local_hamiltonian(region);
    return apply_automorphism(s, h) - h;
}

bool translation_intertwine_check(const SectorSpec& s, Point x,
                                  const std::vector<QuasiLocalOperator>& samples) {
    SectorSpec shifted = translate(s, -x);
    for (const auto& a : samples) {
        auto lhs = translate(apply_automorphism(s, translate(a, x)), -x);
        auto rhs = apply_automorphism(shifted, a);
        if (lhs != rhs) return false;
    }
    return true;
}

} // namespace anyonlab

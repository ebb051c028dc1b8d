#include "anyonlab/strings.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

namespace anyonlab {

StringType string_type_for(PathKind k) {
    switch (k) {
    case PathKind::Primal: return StringType::Z;
    case PathKind::Dual: return StringType::X;
    case PathKind::Ribbon: return StringType::Y;
    }
    return StringType::Z;
}

PauliOperator string_operator(const FinitePath& path, StringType t) {
    if (string_type_for(path.kind) != t) throw DomainError("string type does not match path kind");
    PauliOperator gx = PauliOperator::on(path.dual_support(), Letter::X);
    PauliOperator gz = PauliOperator::on(path.primal_support(), Letter::Z);
    switch (t) {
    case StringType::Z: return gz;
    case StringType::X: return gx;
    case StringType::Y: return gx * gz;
    }
    return {};
}

PauliOperator string_operator(const FinitePath& path) {
    return string_operator(path, string_type_for(path.kind));
}

PauliOperator truncated_string(const SemiInfinitePath& path, std::size_t n, StringType t) {
    return string_operator(path.truncate(n), t);
}

PauliOperator truncated_string(const SemiInfinitePath& path, std::size_t n) {
    return string_operator(path.truncate(n));
}

namespace {

// Euler trail through every edge from `from` to `to` (Hierholzer).
std::vector<Bond> euler_trail(const BondSet& edges, Point from, Point to,
                              const std::function<std::array<Point, 2>(const Bond&)>& ends) {
    std::map<Point, std::vector<Bond>> adj;
    for (const auto& b : edges)
        for (Point q : ends(b)) adj[q].push_back(b);
    for (const auto& [q, es] : adj) {
        bool odd = es.size() % 2 == 1;
        bool terminal = from != to && (q == from || q == to);
        if (odd != terminal) throw DomainError("bond set is not a path between the given endpoints");
    }
    if (edges.empty()) {
        if (from != to) throw DomainError("empty bond set cannot join distinct endpoints");
        return {};
    }
    if (from != to && (!adj.count(from) || !adj.count(to)))
        throw DomainError("bond set is not a path between the given endpoints");
    if (from == to && !adj.count(from)) throw DomainError("bond set does not pass through the endpoint");

    BondSet used;
    std::vector<std::pair<Point, std::optional<Bond>>> stack{{from, std::nullopt}};
    std::vector<Bond> trail;
    while (!stack.empty()) {
        Point cur = stack.back().first;
        auto& es = adj[cur];
        while (!es.empty() && used.count(es.back())) es.pop_back();
        if (es.empty()) {
            if (stack.back().second) trail.push_back(*stack.back().second);
            stack.pop_back();
            continue;
        }
        Bond b = es.back();
        used.insert(b);
        auto e = ends(b);
        stack.push_back({e[0] == cur ? e[1] : e[0], b});
    }
    if (used.size() != edges.size()) throw DomainError("bond set is disconnected");
    std::reverse(trail.begin(), trail.end());
    return trail;
}

} // namespace

FinitePath order_primal(const BondSet& bonds, Vertex from, Vertex to) {
    auto trail = euler_trail(bonds, from, to, [](const Bond& b) { return endpoints(b); });
    return FinitePath::from_bonds(from, trail);
}

FinitePath order_dual(const BondSet& crossed, Plaquette from, Plaquette to) {
    auto trail = euler_trail(crossed, from, to, [](const Bond& b) { return faces(b); });
    std::vector<Plaquette> ps{from};
    for (const auto& b : trail) {
        auto f = faces(b);
        ps.push_back(f[0] == ps.back() ? f[1] : f[0]);
    }
    return FinitePath::from_plaquettes(ps);
}

FinitePath deform(const FinitePath& path, Plaquette p) {
    if (path.kind != PathKind::Primal) throw DomainError("deform across a plaquette needs a primal path");
    BondSet s = path.primal_support();
    bool meets = false;
    for (const auto& b : plaq(p)) {
        if (s.erase(b)) meets = true;
        else s.insert(b);
    }
    if (!meets) throw DomainError("plaquette does not meet the path");
    return order_primal(s, path.start.v, path.end.v);
}

FinitePath deform_dual(const FinitePath& path, Vertex v) {
    if (path.kind != PathKind::Dual) throw DomainError("deform across a star needs a dual path");
    BondSet s = path.dual_support();
    bool meets = false;
    for (const auto& b : star(v)) {
        if (s.erase(b)) meets = true;
        else s.insert(b);
    }
    if (!meets) throw DomainError("star does not meet the path");
    return order_dual(s, path.start.p, path.end.p);
}

} // namespace anyonlab

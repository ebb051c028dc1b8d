#include "anyonlab/vacuum.hpp"

#include <map>
#include <vector>

namespace anyonlab {

XZDecomposition decompose_xz(const PauliOperator& p) {
    LetterMap xs, zs;
    int phase = p.phase();
    for (const auto& [b, l] : p.letters()) {
        if (l == Letter::X || l == Letter::Y) xs[b] = Letter::X;
        if (l == Letter::Z || l == Letter::Y) zs[b] = Letter::Z;
        // Y = i X Z on a single bond; letters on distinct bonds commute.
        if (l == Letter::Y) phase += 1;
    }
    return {PauliOperator(0, xs), PauliOperator(0, zs), phase % 4};
}

PauliOperator StabilizerWitness::recompose() const {
    PauliOperator acc = PauliOperator::identity().with_phase(phase);
    for (const auto& s : stars) acc = acc * star_operator(s);
    for (const auto& q : plaquettes) acc = acc * plaquette_operator(q);
    return acc;
}

namespace {

// Rows of sorted coordinates of bonds of one orientation, keyed by y.
std::map<std::int64_t, std::vector<std::int64_t>> rows(const BondSet& s, Orient o) {
    std::map<std::int64_t, std::vector<std::int64_t>> r;
    for (const auto& b : s)
        if (b.d == o) r[b.o.y].push_back(b.o.x);
    return r; // BondSet ordering keeps each row sorted by x
}

} // namespace

std::optional<std::set<Vertex>> enclosed_stars(const BondSet& cyc) {
    std::map<Plaquette, int> deg;
    for (const auto& b : cyc)
        for (const auto& f : faces(b)) deg[f] ^= 1;
    for (const auto& [f, d] : deg)
        if (d) return std::nullopt;
    std::set<Vertex> inside;
    // A horizontal ray leftwards from vertex (x,y) crosses the dual edges of H(x',y), x' < x.
    for (const auto& [y, xs] : rows(cyc, Orient::H))
        for (std::size_t k = 0; k + 1 < xs.size(); k += 2)
            for (auto x = xs[k] + 1; x <= xs[k + 1]; ++x) inside.insert({x, y});
    return inside;
}

std::optional<std::set<Plaquette>> enclosed_plaquettes(const BondSet& cyc) {
    std::map<Vertex, int> deg;
    for (const auto& b : cyc)
        for (const auto& v : endpoints(b)) deg[v] ^= 1;
    for (const auto& [v, d] : deg)
        if (d) return std::nullopt;
    std::set<Plaquette> inside;
    // A leftward ray from the centre of plaquette (x,y) crosses V(x',y), x' <= x.
    for (const auto& [y, xs] : rows(cyc, Orient::V))
        for (std::size_t k = 0; k + 1 < xs.size(); k += 2)
            for (auto x = xs[k]; x < xs[k + 1]; ++x) inside.insert({x, y});
    return inside;
}

std::optional<StabilizerWitness> is_stabilizer_product(const PauliOperator& p) {
    auto dec = decompose_xz(p);
    auto stars = enclosed_stars(dec.xpart.support());
    if (!stars) return std::nullopt;
    auto plaqs = enclosed_plaquettes(dec.zpart.support());
    if (!plaqs) return std::nullopt;
    StabilizerWitness w{std::move(*stars), std::move(*plaqs), dec.phase};
    if (w.recompose() != p) throw std::logic_error("stabilizer witness does not recompose");
    return w;
}

Gauss vacuum_expectation(const PauliOperator& p) {
    auto w = is_stabilizer_product(p);
    return w ? Gauss::i_pow(w->phase) : Gauss(0);
}

Gauss vacuum_expectation(const QuasiLocalOperator& a) {
    Gauss total;
    for (const auto& [m, c] : a.terms()) total = total + c * vacuum_expectation(PauliOperator(0, m));
    return total;
}

} // namespace anyonlab

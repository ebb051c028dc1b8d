#pragma once

#include "anyonlab/sectors.hpp"

#include <optional>
#include <string>

namespace anyonlab::render {

// Vertex-coordinate window, inclusive.
struct Viewport {
    std::int64_t x0, y0, x1, y1;
};

// Layers, drawn bottom to top: lattice, motif, cone, paths, letters, defects, crossings.
struct Scene {
    BondSet dashed;  // star motif
    BondSet thick;   // plaquette motif
    BondSet primal;  // primal path bonds
    BondSet dual;    // bonds crossed by a dual path
    LetterMap letters;
    std::set<Vertex> star_defects;
    std::set<Plaquette> plaquette_defects;
    BondSet crossings;
    std::optional<Cone> cone;
};

// Smallest window holding every object of the scene, padded by one.
Viewport fit(const Scene& s);
// Throws DomainError when something in the scene falls outside the window.
void check_fits(const Scene& s, const Viewport& v);

std::string ascii(const Scene& s, const Viewport& v);
std::string svg(const Scene& s, const Viewport& v);

} // namespace anyonlab::render

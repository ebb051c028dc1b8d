#pragma once

#include "anyonlab/strings.hpp"
#include "anyonlab/vacuum.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace anyonlab {

// bit0: flux carried by a dual (X) string, bit1: charge carried by a primal (Z) string.
enum class Label : std::uint8_t { One = 0, X = 1, Z = 2, Y = 3 };

inline Label operator*(Label a, Label b) {
    return static_cast<Label>(static_cast<int>(a) ^ static_cast<int>(b));
}
inline bool has_flux(Label l) { return static_cast<int>(l) & 1; }
inline bool has_charge(Label l) { return static_cast<int>(l) & 2; }

std::string label_name(Label l);
Label parse_label(const std::string& s);
constexpr Label kLabels[4] = {Label::One, Label::X, Label::Y, Label::Z};

struct SectorSpec {
    Label label = Label::One;
    std::optional<SemiInfinitePath> path;
    std::optional<Cone> cone;

    static SectorSpec vacuum() { return {}; }
    // Validates that the path type matches the label and that the path lies in the cone.
    static SectorSpec make(Label label, SemiInfinitePath path, Cone cone);

    PauliOperator string(std::size_t n) const;
    std::size_t stabilization_index(const BondSet& region) const;
};

SectorSpec translate(const SectorSpec& s, Point t);
bool path_in_cone(const SemiInfinitePath& path, const Cone& cone);

PauliOperator apply_automorphism(const SectorSpec& s, const PauliOperator& a);
QuasiLocalOperator apply_automorphism(const SectorSpec& s, const QuasiLocalOperator& a);
Gauss excitation_expectation(const SectorSpec& s, const QuasiLocalOperator& a);

struct Syndrome {
    std::set<Vertex> stars;
    std::set<Plaquette> plaquettes;
    std::size_t size() const { return stars.size() + plaquettes.size(); }
    bool operator==(const Syndrome&) const = default;
};

Syndrome syndrome(const PauliOperator& a);

// Closed-loop operator outside `excluded` separating the sector from the vacuum.
PauliOperator sector_distinguisher(const SectorSpec& s, const BondSet& excluded);
// Closed-loop operator outside `excluded` whose values in the two sectors differ by 2.
PauliOperator sector_distinguisher(const SectorSpec& a, const SectorSpec& b, const BondSet& excluded);

// A finite tensor product rho_1 (x) ... (x) rho_k acting as rho_1(...rho_k(A)).
struct ComposedSector {
    std::vector<SectorSpec> parts;
    std::optional<Cone> cone;

    Label label() const;
    PauliOperator apply(const PauliOperator& a) const;
    QuasiLocalOperator apply(const QuasiLocalOperator& a) const;
    Gauss expectation(const QuasiLocalOperator& a) const;
};

ComposedSector compose(const SectorSpec& a, const SectorSpec& b);
ComposedSector compose(const ComposedSector& a, const ComposedSector& b);

// -sum A_s - sum B_p over stars and plaquettes wholly inside the region.
QuasiLocalOperator local_hamiltonian(const BondSet& region);
QuasiLocalOperator dynamics_shift(const SectorSpec& s, const BondSet& region);

bool translation_intertwine_check(const SectorSpec& s, Point x,
                                  const std::vector<QuasiLocalOperator>& samples);

} // namespace anyonlab

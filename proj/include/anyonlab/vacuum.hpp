#pragma once

#include "anyonlab/pauli.hpp"

#include <optional>
#include <set>

namespace anyonlab {

struct XZDecomposition {
    PauliOperator xpart; // pure X, phase 0
    PauliOperator zpart; // pure Z, phase 0
    int phase = 0;       // P = i^phase * xpart * zpart
};

XZDecomposition decompose_xz(const PauliOperator& p);

// P = i^phase * prod A_s * prod B_p.
struct StabilizerWitness {
    std::set<Vertex> stars;
    std::set<Plaquette> plaquettes;
    int phase = 0;

    PauliOperator recompose() const;
};

std::optional<StabilizerWitness> is_stabilizer_product(const PauliOperator& p);

// Stars enclosed by a dual cycle given as its set of crossed bonds (even-odd rule).
// Empty optional if the bond set is not a dual cycle.
std::optional<std::set<Vertex>> enclosed_stars(const BondSet& dual_cycle);
// Plaquettes enclosed by a primal cycle.
std::optional<std::set<Plaquette>> enclosed_plaquettes(const BondSet& cycle);

Gauss vacuum_expectation(const PauliOperator& p);
Gauss vacuum_expectation(const QuasiLocalOperator& a);

} // namespace anyonlab

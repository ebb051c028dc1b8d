#pragma once

#include "anyonlab/pauli.hpp"

namespace anyonlab {

enum class StringType : std::uint8_t { X, Y, Z };

StringType string_type_for(PathKind k);

// Z on primal bonds, X on crossed bonds, Gamma_X * Gamma_Z for ribbons.
PauliOperator string_operator(const FinitePath& path, StringType t);
PauliOperator string_operator(const FinitePath& path);
PauliOperator truncated_string(const SemiInfinitePath& path, std::size_t n, StringType t);
PauliOperator truncated_string(const SemiInfinitePath& path, std::size_t n);

// Moves a primal path across plaquette p (resp. a dual path across the star at v).
FinitePath deform(const FinitePath& path, Plaquette p);
FinitePath deform_dual(const FinitePath& path, Vertex v);

// Orders a mod-2 bond set into a primal path from `from` to `to`.
FinitePath order_primal(const BondSet& bonds, Vertex from, Vertex to);
FinitePath order_dual(const BondSet& crossed, Plaquette from, Plaquette to);

} // namespace anyonlab

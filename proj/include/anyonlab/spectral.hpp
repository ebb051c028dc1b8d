#pragma once

#include "anyonlab/sectors.hpp"

#include <Eigen/Sparse>

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

namespace anyonlab {

constexpr double kSpectralTol = 1e-9;

struct FiniteLattice {
    enum class Kind { Torus, OpenPatch };
    Kind kind = Kind::Torus;
    int w = 0, h = 0;
    std::vector<Bond> bonds;
    std::map<Bond, int> index;
    std::vector<Vertex> star_sites;         // complete stars only
    std::vector<Plaquette> plaquette_sites; // complete plaquettes only
    std::vector<std::uint64_t> star_masks, plaquette_masks;

    // Periodic w x h lattice: 2wh bonds, wh stars, wh plaquettes. Needs w, h >= 2.
    static FiniteLattice Torus(int w, int h);
    // w x h plaquettes with vertices in [0,w] x [0,h].
    static FiniteLattice OpenPatch(int w, int h);

    std::size_t num_bonds() const { return bonds.size(); }
    std::size_t num_terms() const { return star_sites.size() + plaquette_sites.size(); }
    // Canonical index of a bond, wrapping coordinates on the torus.
    std::optional<int> bond_index(const Bond& b) const;
    // Open patch: both endpoints at distance >= margin from the patch boundary.
    bool interior(const Bond& b, int margin) const;
    BondSet interior_bonds(int margin) const;
    std::uint64_t mask(const BondSet& s) const;
};

// Amplitudes over the computational (Z) basis; bit k set means bond k is flipped.
// Stored sparsely: the projector states used here have few nonzero amplitudes.
struct DenseState {
    std::unordered_map<std::uint64_t, std::complex<double>> amp;
    double norm() const;
    void normalize();
    void add(std::uint64_t s, std::complex<double> a);
};

std::complex<double> inner(const DenseState& a, const DenseState& b); // <a|b>
DenseState apply(const FiniteLattice& l, const PauliOperator& p, const DenseState& s);
DenseState apply(const FiniteLattice& l, const QuasiLocalOperator& q, const DenseState& s);
DenseState apply_hamiltonian(const FiniteLattice& l, const DenseState& s);

// -sum A_s - sum B_p over complete terms. Capped at 20 bonds.
Eigen::SparseMatrix<double> build_hamiltonian(const FiniteLattice& l);
Eigen::SparseMatrix<double> star_matrix(const FiniteLattice& l, std::size_t k);
Eigen::SparseMatrix<double> plaquette_matrix(const FiniteLattice& l, std::size_t k);
// Every [A_s, B_p] vanishes as a matrix.
bool terms_commute(const FiniteLattice& l);

// prod (1+A_s)/2 prod (1+B_p)/2 applied to the all-up state, normalized.
DenseState projector_state(const FiniteLattice& l);
std::complex<double> oracle_expectation(const FiniteLattice& l, const DenseState& s, const PauliOperator& p);
std::complex<double> oracle_expectation(const FiniteLattice& l, const DenseState& s, const QuasiLocalOperator& q);
// Largest |A_s psi - psi|, |B_p psi - psi| over included terms.
double stabilizer_residual(const FiniteLattice& l, const DenseState& s);

struct SpectrumResult {
    double e0 = 0;
    double gap = 0;
    int degeneracy = 0;
    std::vector<double> low; // lowest distinct levels found
    double residual = 0;     // largest eigen-residual of the reported ground vectors
    bool dense = false;
};

// Dense solver up to 10 bonds, deflated Lanczos up to 26.
SpectrumResult spectral_gap(const FiniteLattice& l, std::uint64_t seed = 0);

// <Gamma psi|H|Gamma psi> - <psi|H|psi> with psi the projector state.
double string_energy(const FiniteLattice& l, const FinitePath& path, StringType t);

struct DerivationResult {
    std::complex<double> lhs; // -i <X* delta(Y)> on the patch state, delta(Y) = i[H, Y]
    std::complex<double> rhs; // exact vacuum sums over terms touching supp(Y)
    bool ok = false;
};
DerivationResult derivation_check(const FiniteLattice& l, const QuasiLocalOperator& x, const QuasiLocalOperator& y);

std::complex<double> to_complex(const Gauss& z);

} // namespace anyonlab

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "anyonlab/spectral.hpp"
#include "support/gen.hpp"
#include "support/oracle.hpp"

using namespace anyonlab;

namespace {

// Letters of p moved onto the lattice's canonical bonds.
LetterMap on_lattice(const FiniteLattice& l, const PauliOperator& p) {
    LetterMap m;
    for (const auto& [b, x] : p.letters()) m[l.bonds[*l.bond_index(b)]] = x;
    return m;
}

QuasiLocalOperator q(const PauliOperator& p) { return QuasiLocalOperator(p); }

} // namespace

TEST_CASE("lattice counts and Z2 relations") {
    auto t = FiniteLattice::Torus(3, 2);
    CHECK(t.num_bonds() == 12);
    CHECK(t.star_sites.size() == 6);
    CHECK(t.plaquette_sites.size() == 6);
    std::uint64_t xs = 0, zs = 0;
    for (auto m : t.star_masks) xs ^= m;
    for (auto m : t.plaquette_masks) zs ^= m;
    CHECK(xs == 0);
    CHECK(zs == 0);
    CHECK(t.bond_index(H(3, 0)) == t.bond_index(H(0, 0)));
    CHECK(t.bond_index(V(-1, -2)) == t.bond_index(V(2, 0)));

    auto p = FiniteLattice::OpenPatch(3, 3);
    CHECK(p.num_bonds() == 24);
    CHECK(p.star_sites.size() == 4);
    CHECK(p.plaquette_sites.size() == 9);
    CHECK(p.num_terms() == 13);
    CHECK_FALSE(p.bond_index(H(3, 0)));
    auto p4 = FiniteLattice::OpenPatch(4, 4);
    CHECK(p4.num_bonds() == 40);
    CHECK(p4.interior_bonds(1).size() == 12);
    CHECK_THROWS_AS(FiniteLattice::Torus(1, 4), DomainError);
}

TEST_CASE("Hamiltonian matches a Kronecker-product oracle on Torus(2,2)") {
    auto t = FiniteLattice::Torus(2, 2);
    oracle::Mat h = oracle::Mat::Zero(256, 256);
    for (const auto& v : t.star_sites) h -= oracle::dense(on_lattice(t, star_operator(v)), 1.0, t.bonds);
    for (const auto& p : t.plaquette_sites) h -= oracle::dense(on_lattice(t, plaquette_operator(p)), 1.0, t.bonds);
    oracle::Mat built = Eigen::MatrixXd(build_hamiltonian(t)).cast<std::complex<double>>();
    CHECK(oracle::close(built, h, 1e-12));
    CHECK(terms_commute(t));
    CHECK(terms_commute(FiniteLattice::OpenPatch(2, 2)));

    // apply agrees with the oracle on a random state.
    gen::Gen g(61);
    Eigen::VectorXcd v = Eigen::VectorXcd::Random(256);
    DenseState s;
    for (int i = 0; i < 256; ++i) s.add(i, v[i]);
    for (int k = 0; k < 20; ++k) {
        auto p = g.pauli(t.bonds, 0.4);
        auto out = apply(t, p, s);
        Eigen::VectorXcd want = oracle::dense(p, t.bonds) * v;
        for (int i = 0; i < 256; ++i) {
            auto it = out.amp.find(i);
            CHECK(std::abs((it == out.amp.end() ? 0.0 : it->second) - want[i]) < 1e-12);
        }
    }
}

TEST_CASE("projector states") {
    auto l = FiniteLattice::OpenPatch(3, 3);
    auto psi = projector_state(l);
    CHECK(std::abs(psi.norm() - 1) < kSpectralTol);
    CHECK(stabilizer_residual(l, psi) < kSpectralTol);
    for (const auto& v : l.star_sites) CHECK(std::abs(oracle_expectation(l, psi, star_operator(v)) - 1.0) < kSpectralTol);
    for (const auto& p : l.plaquette_sites)
        CHECK(std::abs(oracle_expectation(l, psi, plaquette_operator(p)) - 1.0) < kSpectralTol);
    CHECK(std::abs(oracle_expectation(l, psi, PauliOperator::single(H(1, 1), Letter::X))) < kSpectralTol);
    auto loop = string_operator(FinitePath::primal_walk({1, 1}, {Dir::PX, Dir::PY, Dir::MX, Dir::MY}));
    CHECK(std::abs(oracle_expectation(l, psi, loop) - 1.0) < kSpectralTol);
    CHECK(std::abs(oracle_expectation(l, psi, PauliOperator::identity()) - 1.0) < kSpectralTol);
    CHECK(std::abs(oracle_expectation(l, psi, PauliOperator::single(V(1, 1), Letter::Z))) < kSpectralTol);
    CHECK_THROWS_AS(oracle_expectation(l, psi, PauliOperator::single(H(9, 9), Letter::Z)), DomainError);
}

TEST_CASE("torus spectra") {
    auto r22 = spectral_gap(FiniteLattice::Torus(2, 2));
    CHECK(r22.dense);
    CHECK(std::abs(r22.e0 + 8) < kSpectralTol);
    CHECK(std::abs(r22.gap - 4) < kSpectralTol);
    CHECK(r22.degeneracy == 4);
    CHECK(r22.residual < 1e-8);

    auto r23 = spectral_gap(FiniteLattice::Torus(2, 3));
    CHECK_FALSE(r23.dense);
    CHECK(std::abs(r23.e0 + 12) < kSpectralTol);
    CHECK(std::abs(r23.gap - 4) < kSpectralTol);
    CHECK(r23.degeneracy == 4);

    CHECK_THROWS_AS(spectral_gap(FiniteLattice::Torus(4, 4)), DomainError);
    CHECK_THROWS_AS(build_hamiltonian(FiniteLattice::Torus(3, 4)), DomainError);
}

TEST_CASE("string energies") {
    auto l = FiniteLattice::OpenPatch(4, 4);
    auto open = FinitePath::primal_walk({1, 1}, {Dir::PX, Dir::PY});
    CHECK(std::abs(string_energy(l, open, StringType::Z) - 4) < kSpectralTol);
    auto loop = FinitePath::primal_walk({1, 1}, {Dir::PX, Dir::PY, Dir::MX, Dir::MY});
    CHECK(std::abs(string_energy(l, loop, StringType::Z)) < kSpectralTol);
    auto rib = FinitePath::ribbon(FinitePath::primal_walk({1, 1}, {Dir::PX}), FinitePath::dual_walk({1, 1}, {Dir::PX}));
    CHECK(std::abs(string_energy(l, rib, StringType::Y) - 8) < kSpectralTol);
    auto dual = FinitePath::dual_walk({1, 1}, {Dir::PY});
    CHECK(std::abs(string_energy(l, dual, StringType::X) - 4) < kSpectralTol);
}

TEST_CASE("derivation identity") {
    auto l = FiniteLattice::OpenPatch(4, 4);
    auto x1 = q(PauliOperator::single(H(1, 2), Letter::X));
    auto r1 = derivation_check(l, x1, x1);
    CHECK(r1.ok);
    CHECK(std::abs(r1.lhs - 4.0) < kSpectralTol);
    CHECK(std::abs(r1.rhs - 4.0) < kSpectralTol);

    auto axz = q(star_operator({2, 2})), bxz = q(plaquette_operator({1, 1}) * star_operator({2, 2}));
    auto r2 = derivation_check(l, axz, bxz);
    CHECK(r2.ok);
    CHECK(std::abs(r2.lhs) < kSpectralTol);
    CHECK(std::abs(r2.rhs) < kSpectralTol);

    auto zs = q(string_operator(FinitePath::primal_walk({1, 2}, {Dir::PX, Dir::PX})));
    auto r3 = derivation_check(l, zs, zs);
    CHECK(r3.ok);
    CHECK(std::abs(r3.lhs - 4.0) < kSpectralTol);

    CHECK_THROWS_AS(derivation_check(l, x1, q(PauliOperator::single(H(0, 0), Letter::X))), DomainError);
}

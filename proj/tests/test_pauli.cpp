#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "anyonlab/strings.hpp"
#include "support/gen.hpp"
#include "support/oracle.hpp"

using namespace anyonlab;

namespace {

const std::vector<Bond> kSix = {H(0, 0), V(0, 0), H(1, 0), V(1, 0), H(0, 1), V(0, 1)};

} // namespace

TEST_CASE("single-bond product table") {
    struct Row {
        Letter a, b;
        int phase;
        Letter c;
    };
    // Frozen from 2x2 matrix products.
    const Row table[] = {
        {Letter::X, Letter::X, 0, Letter::I}, {Letter::X, Letter::Y, 1, Letter::Z}, {Letter::X, Letter::Z, 3, Letter::Y},
        {Letter::Y, Letter::X, 3, Letter::Z}, {Letter::Y, Letter::Y, 0, Letter::I}, {Letter::Y, Letter::Z, 1, Letter::X},
        {Letter::Z, Letter::X, 1, Letter::Y}, {Letter::Z, Letter::Y, 3, Letter::X}, {Letter::Z, Letter::Z, 0, Letter::I},
    };
    for (const auto& r : table) {
        auto p = multiply_letters(r.a, r.b);
        CHECK(p.phase == r.phase);
        CHECK(p.c == r.c);
        oracle::Mat lhs = oracle::letter_matrix(r.a) * oracle::letter_matrix(r.b);
        CHECK(oracle::close(lhs, oracle::i_pow(r.phase) * oracle::letter_matrix(r.c)));
    }
    auto xz = PauliOperator::single(H(0, 0), Letter::X) * PauliOperator::single(H(0, 0), Letter::Z);
    CHECK(xz == PauliOperator(3, {{H(0, 0), Letter::Y}}));
}

TEST_CASE("multiply matches dense matrices on six bonds") {
    gen::Gen g(1);
    for (int t = 0; t < 400; ++t) {
        auto p = g.pauli(kSix), q = g.pauli(kSix);
        CHECK(oracle::close(oracle::dense(p * q, kSix), oracle::dense(p, kSix) * oracle::dense(q, kSix)));
        auto r = g.pauli(kSix);
        CHECK((p * q) * r == p * (q * r));
        CHECK((p * q).phase() >= 0);
        CHECK((p * q).phase() < 4);
    }
}

TEST_CASE("commutation matches the dense commutator") {
    gen::Gen g(2);
    for (int t = 0; t < 400; ++t) {
        auto p = g.pauli(kSix), q = g.pauli(kSix);
        oracle::Mat a = oracle::dense(p, kSix), b = oracle::dense(q, kSix);
        bool anti = oracle::close(a * b, -(b * a));
        bool comm = oracle::close(a * b, b * a);
        REQUIRE(anti != comm);
        CHECK(anticommute(p, q) == anti);
    }
    CHECK(commutes(star_operator({0, 0}), plaquette_operator({0, 0})) == Commutation::Commute);
    CHECK(anticommute(PauliOperator::single(H(0, 0), Letter::X), PauliOperator::single(H(0, 0), Letter::Z)));
    // A Z string ending at x shares one bond with the star at x.
    auto gamma = string_operator(FinitePath::primal_walk({0, 0}, {Dir::PX, Dir::PX}), StringType::Z);
    CHECK(anticommute(star_operator({2, 0}), gamma));
    CHECK(anticommute(star_operator({0, 0}), gamma));
    CHECK_FALSE(anticommute(star_operator({1, 0}), gamma));
}

TEST_CASE("stabilizer generators") {
    auto a = star_operator({3, -1});
    CHECK(a * a == PauliOperator::identity());
    CHECK(a.adjoint() == a);
    auto b = plaquette_operator({0, 0});
    for (const auto& bond : plaq({0, 0})) CHECK(b.at(bond) == Letter::Z);
    CHECK(b.support().size() == 4);
    // Four plaquettes of a 2x2 block multiply to the outer 8-bond loop.
    auto block = plaquette_operator({0, 0}) * plaquette_operator({1, 0}) * plaquette_operator({0, 1}) *
                 plaquette_operator({1, 1});
    auto loop = string_operator(FinitePath::primal_walk({0, 0}, {Dir::PX, Dir::PX, Dir::PY, Dir::PY, Dir::MX, Dir::MX,
                                                                 Dir::MY, Dir::MY}),
                                StringType::Z);
    CHECK(block == loop);
    CHECK(loop.support().size() == 8);
}

TEST_CASE("a Z string times a plaquette is the deformed string") {
    auto gamma = FinitePath::primal_walk({0, 0}, {Dir::PX, Dir::PX});
    auto bent = FinitePath::primal_walk({0, 0}, {Dir::PY, Dir::PX, Dir::MY, Dir::PX});
    CHECK(string_operator(gamma, StringType::Z) * plaquette_operator({0, 0}) == string_operator(bent, StringType::Z));
}

TEST_CASE("squares and adjoints") {
    gen::Gen g(3);
    for (int t = 0; t < 200; ++t) {
        auto p = g.pauli(kSix);
        CHECK(p * p == PauliOperator::identity().with_phase(2 * p.phase()));
        CHECK(p * p.adjoint() == PauliOperator::identity());
        auto q = g.pauli(kSix);
        CHECK((p * q).adjoint() == q.adjoint() * p.adjoint());
    }
}

TEST_CASE("quasi-local *-algebra laws against the dense oracle") {
    gen::Gen g(4);
    std::vector<Bond> eight = kSix;
    eight.push_back(H(1, 1));
    eight.push_back(V(2, 0));
    auto random_q = [&] {
        QuasiLocalOperator q;
        int n = g.uniform(1, 3);
        for (int i = 0; i < n; ++i)
            q = q + QuasiLocalOperator(g.pauli(eight, 0.3), Gauss(Rational(g.uniform(-3, 3), g.uniform(1, 3)),
                                                                   Rational(g.uniform(-3, 3), g.uniform(1, 3))));
        return q;
    };
    for (int t = 0; t < 60; ++t) {
        auto a = random_q(), b = random_q();
        Gauss lam(Rational(g.uniform(-4, 4), 3), Rational(g.uniform(-4, 4), 5));
        CHECK(oracle::close(oracle::dense(a * b, eight), oracle::dense(a, eight) * oracle::dense(b, eight), 1e-9));
        CHECK(oracle::close(oracle::dense(a.adjoint(), eight), oracle::dense(a, eight).adjoint(), 1e-9));
        CHECK((a * b).adjoint() == b.adjoint() * a.adjoint());
        CHECK(a.scale(lam).adjoint() == a.adjoint().scale(lam.conj()));
        CHECK(a + QuasiLocalOperator() == a);
        CHECK((a - a).is_zero());
        CHECK(oracle::close(oracle::dense(commutator(a, b), eight),
                            oracle::dense(a, eight) * oracle::dense(b, eight) - oracle::dense(b, eight) * oracle::dense(a, eight),
                            1e-9));
    }
}

TEST_CASE("quasi-local storage drops zero coefficients") {
    auto x = QuasiLocalOperator(PauliOperator::single(H(0, 0), Letter::X));
    auto sum = x + x.scale(Gauss(-1));
    CHECK(sum.is_zero());
    CHECK(sum.terms().empty());
    // A phase on the monomial folds into the coefficient.
    auto ip = QuasiLocalOperator(PauliOperator(1, {{H(0, 0), Letter::Z}}));
    CHECK(ip.terms().begin()->second == Gauss(0, 1));
}

TEST_CASE("rational and gaussian printing") {
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Gauss(1).str() == "1");
    CHECK(Gauss(0, -1).str() == "-i");
    CHECK(Gauss(Rational(1, 2), 1).str() == "1/2+i");
    CHECK(Gauss().str() == "0");
}

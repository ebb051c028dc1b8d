#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "anyonlab/braiding.hpp"
#include "support/gen.hpp"

using namespace anyonlab;

namespace {

const ConeFrame kFrame = ConeFrame::standard();

int L(Label l) { return static_cast<int>(l); }

SectorSpec vertical_z(std::int64_t x) {
    return SectorSpec::make(Label::Z, SemiInfinitePath::primal_ray({x, 0}, {}, Dir::PY),
                            Cone::make({x, -1}, {1, 4}, {-1, 4}));
}

} // namespace

TEST_CASE("cone order") {
    Cone east = Cone::make({0, 0}, {4, -1}, {4, 1});
    Cone north = Cone::make({0, 1}, {1, 4}, {-1, 4});
    CHECK_FALSE(cone_less(east, north, kFrame));
    CHECK(cone_less(north, east, kFrame));
    Cone west = Cone::make({-1, 0}, {-4, 1}, {-4, -1});
    CHECK_FALSE(cone_less(east, west, kFrame));
    CHECK(cone_less(west, east, kFrame));
    CHECK(cone_less(north, west, kFrame) != cone_less(west, north, kFrame));
    CHECK_THROWS_AS(cone_less(east, east, kFrame), DomainError);

    CHECK(admissible(east, kFrame));
    CHECK(admissible(north, kFrame));
    CHECK_FALSE(admissible(Cone::make({0, 0}, {1, -4}, {-1, -4}), kFrame));
    // A cone whose edge points straight down still meets the forbidden directions.
    CHECK_FALSE(admissible(Cone::make({0, 0}, {0, -1}, {1, 0}), kFrame));
}

TEST_CASE("transporters") {
    auto r = Representatives::standard();
    SUBCASE("same path") {
        for (std::size_t n : {0u, 3u, 8u}) {
            auto v = transporter(r.z, r.z, n);
            CHECK(vacuum_expectation(v.op) == Gauss(1));
            CHECK(syndrome(v.op).size() == 0);
        }
    }
    SUBCASE("parallel vertical paths three apart") {
        auto s1 = vertical_z(0), s2 = vertical_z(3);
        auto v = transporter(s1, s2, 10);
        CHECK(vacuum_expectation(v.op) == Gauss(1));
        CHECK(syndrome(v.op).size() == 0);
        REQUIRE(v.base);
        // Every Z letter sits on a path; the loop encloses the strip between them.
        auto w = is_stabilizer_product(v.op);
        REQUIRE(w);
        CHECK(w->stars.empty());
        CHECK(w->plaquettes.count({1, 4}));
        for (std::int64_t x = 0; x <= 1; ++x)
            for (std::int64_t y = 1; y <= 2; ++y)
                for (const auto& b : plaq({x, y})) {
                    for (Letter l : {Letter::X, Letter::Y, Letter::Z}) {
                        auto op = PauliOperator::single(b, l);
                        CHECK(intertwines(v, s1, s2, op));
                    }
                }
        CHECK(intertwines(v, s1, s2, star_operator({1, 1}) * star_operator({2, 2})));
    }
    SUBCASE("label mismatch") {
        CHECK_THROWS_AS(transporter(r.x, r.z, 4), DomainError);
    }
    SUBCASE("bound keeps connectors away from the region") {
        auto s1 = vertical_z(0), s2 = vertical_z(3);
        BondSet region = box_bonds(-2, -2, 5, 5);
        auto n0 = transporter_bound(s1, s2, region);
        for (std::size_t n = n0; n < n0 + 6; ++n) {
            auto v = transporter(s1, s2, n);
            for (const auto& b : v.connector.support()) CHECK(region.count(b) == 0);
        }
    }
}

TEST_CASE("frozen braiding tables") {
    // Rows and columns indexed by One, X, Z, Y.
    const SignTable standard = {{{1, 1, 1, 1}, {1, 1, -1, -1}, {1, 1, 1, 1}, {1, 1, -1, -1}}};
    const SignTable swapped = {{{1, 1, 1, 1}, {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, 1, -1}}};
    CHECK(braiding_table(Representatives::standard(), kFrame) == standard);
    CHECK(braiding_table(Representatives::swapped(), kFrame) == swapped);
}

TEST_CASE("bicharacter, monodromy, and braid equations") {
    for (auto r : {Representatives::standard(), Representatives::swapped()}) {
        auto t = braiding_table(r, kFrame);
        for (Label a : kLabels)
            for (Label b : kLabels) {
                for (Label c : kLabels) {
                    CHECK(t[L(a)][L(b * c)] == t[L(a)][L(b)] * t[L(a)][L(c)]);
                    CHECK(t[L(a * b)][L(c)] == t[L(a)][L(c)] * t[L(b)][L(c)]);
                    CHECK(braid_equation_check(a, b, c, r, kFrame));
                }
            }
        CHECK(t[L(Label::X)][L(Label::Z)] * t[L(Label::Z)][L(Label::X)] == -1);
        CHECK(t[L(Label::X)][L(Label::X)] == 1);
        CHECK(t[L(Label::Z)][L(Label::Z)] == 1);
    }
    auto a = braiding_table(Representatives::standard(), kFrame);
    auto b = braiding_table(Representatives::swapped(), kFrame);
    for (Label x : kLabels)
        for (Label y : kLabels) CHECK(a[L(x)][L(y)] * a[L(y)][L(x)] == b[L(x)][L(y)] * b[L(y)][L(x)]);
}

TEST_CASE("braid results carry the order and the trace") {
    auto r = Representatives::standard();
    auto res = braiding_phase(r.of(Label::X), r.of(Label::Z), kFrame);
    CHECK(res.sign == -1);
    REQUIRE(res.first_less);
    CHECK(*res.first_less);
    CHECK(res.crossings.size() % 2 == 1);
    CHECK(braiding_phase(r.z, r.x, kFrame) == 1);
    CHECK(braiding_phase(r.x, r.x, kFrame) == 1);
}

TEST_CASE("twists and conjugates") {
    CHECK(twist(Label::One) == 1);
    CHECK(twist(Label::X) == 1);
    CHECK(twist(Label::Z) == 1);
    CHECK(twist(Label::Y) == -1);
    auto r = Representatives::standard();
    auto rib = r.ribbon();
    CHECK(self_braiding(ComposedSector{{rib}, rib.cone}, kFrame) == -1);
    for (Label l : kLabels) CHECK(twist(l, Representatives::swapped(), kFrame) == twist(l));

    gen::Gen g(41);
    auto pool = gen::bond_list(box_bonds(-3, -3, 3, 3));
    std::vector<QuasiLocalOperator> samples;
    for (int i = 0; i < 60; ++i) samples.push_back(g.combination(pool, -2, 2, 2));
    for (Label l : kLabels) {
        auto c = conjugate(l, r, samples);
        CHECK(c.bar == l);
        CHECK(c.r.is_identity());
        CHECK(c.rbar.is_identity());
        CHECK(c.equations_hold);
    }
}

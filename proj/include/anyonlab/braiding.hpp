#pragma once

#include "anyonlab/sectors.hpp"

#include <array>
#include <optional>
#include <vector>

namespace anyonlab {

struct ConeFrame {
    Cone forbidden;
    // Downward cone at the origin with half-angle 30 degrees (slope 15/26 for tan 30).
    static ConeFrame standard();
};

// True when the cone's asymptotic directions avoid the forbidden cone entirely,
// i.e. the cone sits in the complement of some translate of it.
bool admissible(const Cone& c, const ConeFrame& f);
// a < b: rotating a counter-clockwise about its apex reaches the forbidden cone
// before meeting b. Throws on intersecting cones.
bool cone_less(const Cone& a, const Cone& b, const ConeFrame& f);

struct TransporterStep {
    std::size_t n = 0;
    PauliOperator op;                 // closed-loop string operator
    FinitePath connector;             // far connector between the n-th sites
    std::optional<FinitePath> base;   // closes the loop when the start sites differ
    BondSet avoid() const;            // bonds the intertwining relation must avoid
};

// V_n = Gamma_1^n Gamma_connector Gamma_2^n (closed by a base path when starts differ).
TransporterStep transporter(const SectorSpec& s1, const SectorSpec& s2, std::size_t n);
bool intertwines(const TransporterStep& v, const SectorSpec& s1, const SectorSpec& s2,
                 const PauliOperator& b);
// Smallest n beyond which every connector stays clear of the region.
std::size_t transporter_bound(const SectorSpec& s1, const SectorSpec& s2, const BondSet& region);

struct BraidResult {
    int sign = 1;
    std::vector<Bond> crossings;         // bonds where a transport loop anticommutes with a string
    std::vector<PauliOperator> loops;    // one transport loop per component of the second argument
    std::int64_t margin = 0;
    std::optional<bool> first_less;      // cone_less(first, second) for single disjoint cones
};

// epsilon_{rho1, rho2}: transports each component of s2 counter-clockwise to just
// before the forbidden direction and takes the commutation sign with s1's strings.
BraidResult braiding_phase(const ComposedSector& s1, const ComposedSector& s2, const ConeFrame& f);
int braiding_phase(const SectorSpec& s1, const SectorSpec& s2, const ConeFrame& f);

// Representatives used for tables: X, Z single strings, Y = X (x) Z.
struct Representatives {
    SectorSpec x, z;
    static Representatives standard();
    // X and Z exchanged in angular order, which flips the sign of epsilon_{X,Z}.
    static Representatives swapped();
    ComposedSector of(Label l) const;
    SectorSpec ribbon() const; // single-ribbon Y representative
};

using SignTable = std::array<std::array<int, 4>, 4>; // indexed by static_cast<int>(Label)

SignTable braiding_table(const Representatives& r, const ConeFrame& f);
// Both braid equations for (a, b, c), with the composite sides computed geometrically.
bool braid_equation_check(Label a, Label b, Label c, const Representatives& r, const ConeFrame& f);

int twist(Label l, const Representatives& r, const ConeFrame& f);
int twist(Label l);
int self_braiding(const ComposedSector& s, const ConeFrame& f);

struct Conjugate {
    Label bar;
    PauliOperator r, rbar;
    bool equations_hold = false;
};
// Self-conjugate with unit intertwiners; checks the conjugate equations and that
// rho-bar (x) rho acts trivially on the samples.
Conjugate conjugate(Label l, const Representatives& r, const std::vector<QuasiLocalOperator>& samples);

} // namespace anyonlab

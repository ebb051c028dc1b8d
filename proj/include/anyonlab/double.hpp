#pragma once

#include "anyonlab/braiding.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace anyonlab {

// D(Z2) on the basis delta_g (x) h with g, h in {e, f}. Elements are stored as
// 4-vectors indexed by 2*g + h.
using DoubleElement = std::array<Gauss, 4>;
DoubleElement double_basis(int g, int h);
DoubleElement double_unit(); // 1 (x) e = sum_g delta_g (x) e

// Simples V_{g,chi}: flux g in {0 = e, 1 = f}, character chi in {0 = trivial, 1 = sign}.
struct Irrep {
    int g = 0;
    int chi = 0;
    bool operator==(const Irrep&) const = default;
};

// Order of the multiplicity vectors: Pi_0, Pi_X, Pi_Y, Pi_Z (same as kLabels).
constexpr std::size_t kSimples = 4;
Irrep simple_irrep(std::size_t i);
std::size_t simple_index(Irrep r);
std::string simple_name(std::size_t i);
Label simple_label(std::size_t i); // the assignment F(Pi_k) = rho^k
std::size_t label_simple(Label l);

// pi_r(a) for a one-dimensional module.
Gauss represent(Irrep r, const DoubleElement& a);
// (pi_a (x) pi_b)(Delta(delta_g (x) h)).
Gauss coproduct_character(Irrep a, Irrep b, int g, int h);

struct RepObject {
    std::array<unsigned, kSimples> m{};

    static RepObject simple(std::size_t i);
    unsigned dim() const;
    bool operator==(const RepObject&) const = default;
};

RepObject direct_sum(const RepObject& a, const RepObject& b);
std::string to_string(const RepObject& a);

// Linear map between modules, one block per simple: blocks[i] is dst.m[i] x src.m[i].
struct Morphism {
    RepObject src, dst;
    std::array<std::vector<std::vector<Gauss>>, kSimples> blocks;

    static Morphism identity(const RepObject& a);
    static Morphism zero(const RepObject& src, const RepObject& dst);
    bool operator==(const Morphism&) const = default;
};

Morphism compose(const Morphism& f, const Morphism& g); // f after g
unsigned hom_dimension(const RepObject& a, const RepObject& b);

// Simple factor of V_a (x) V_b, read off from the coproduct character.
std::size_t simple_tensor(std::size_t a, std::size_t b);
RepObject rep_tensor(const RepObject& a, const RepObject& b);

// Scalar of sigma o (pi_a (x) pi_b)(R) on V_a (x) V_b.
int rep_braiding(std::size_t a, std::size_t b);
// c_{A,B}: A (x) B -> B (x) A. Summands of A (x) B at simple k are ordered by
// (i, j, alpha, beta) with i (x) j = k.
Morphism rep_braiding(const RepObject& a, const RepObject& b);
int rep_twist(std::size_t a);
int rep_monodromy(std::size_t a, std::size_t b);
// Both braid equations over all simple triples.
bool rep_braid_equations();

struct SectorCategory {
    SignTable braiding{};          // indexed by static_cast<int>(Label)
    std::array<int, 4> twists{};   // indexed by static_cast<int>(Label)

    RepObject tensor(const RepObject& a, const RepObject& b) const; // label convolution
};

SectorCategory skeletal_sector_category(const ConeFrame& frame, const Representatives& reps);
SectorCategory skeletal_sector_category(const ConeFrame& frame);

struct CatReport {
    bool fusion_match = false;
    bool braiding_match = false;
    bool twist_match = false;
    std::map<std::string, std::string> correspondence;
    int epsilon_xz = 0;
    std::vector<std::string> mismatches;

    bool all() const { return fusion_match && braiding_match && twist_match; }
};

CatReport verify_equivalence(const ConeFrame& frame, const Representatives& reps);
CatReport verify_equivalence(const ConeFrame& frame);

} // namespace anyonlab

#include "anyonlab/double.hpp"

#include <sstream>
#include <stdexcept>

namespace anyonlab {

DoubleElement double_basis(int g, int h) {
    DoubleElement a{};
    a[2 * g + h] = Gauss(1);
    return a;
}

DoubleElement double_unit() {
    DoubleElement a{};
    a[0] = a[2] = Gauss(1);
    return a;
}

Irrep simple_irrep(std::size_t i) {
    static constexpr Irrep table[kSimples] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    if (i >= kSimples) throw std::out_of_range("simple index");
    return table[i];
}

std::size_t simple_index(Irrep r) {
    for (std::size_t i = 0; i < kSimples; ++i)
        if (simple_irrep(i) == r) return i;
    throw std::out_of_range("irrep");
}

std::string simple_name(std::size_t i) {
    static const char* names[kSimples] = {"Pi_0", "Pi_X", "Pi_Y", "Pi_Z"};
    return names[i];
}

Label simple_label(std::size_t i) { return kLabels[i]; }

std::size_t label_simple(Label l) {
    for (std::size_t i = 0; i < kSimples; ++i)
        if (kLabels[i] == l) return i;
    throw std::out_of_range("label");
}

Gauss represent(Irrep r, const DoubleElement& a) {
    Gauss s;
    for (int h = 0; h < 2; ++h) s = s + a[2 * r.g + h] * Gauss((r.chi && h) ? -1 : 1);
    return s;
}

Gauss coproduct_character(Irrep a, Irrep b, int g, int h) {
    Gauss s;
    for (int g1 = 0; g1 < 2; ++g1)
        s = s + represent(a, double_basis(g1, h)) * represent(b, double_basis(g1 ^ g, h));
    return s;
}

RepObject RepObject::simple(std::size_t i) {
    RepObject r;
    r.m.at(i) = 1;
    return r;
}

unsigned RepObject::dim() const {
    unsigned d = 0;
    for (auto k : m) d += k;
    return d;
}

RepObject direct_sum(const RepObject& a, const RepObject& b) {
    RepObject r;
    for (std::size_t i = 0; i < kSimples; ++i) r.m[i] = a.m[i] + b.m[i];
    return r;
}

std::string to_string(const RepObject& a) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < kSimples; ++i) {
        if (!a.m[i]) continue;
        if (!first) os << " + ";
        first = false;
        if (a.m[i] > 1) os << a.m[i] << "*";
        os << simple_name(i);
    }
    if (first) os << "0";
    return os.str();
}

namespace {

using Block = std::vector<std::vector<Gauss>>;

Block zero_block(unsigned rows, unsigned cols) { return Block(rows, std::vector<Gauss>(cols)); }

} // namespace

Morphism Morphism::zero(const RepObject& src, const RepObject& dst) {
    Morphism f{src, dst, {}};
    for (std::size_t i = 0; i < kSimples; ++i) f.blocks[i] = zero_block(dst.m[i], src.m[i]);
    return f;
}

Morphism Morphism::identity(const RepObject& a) {
    Morphism f = zero(a, a);
    for (std::size_t i = 0; i < kSimples; ++i)
        for (unsigned k = 0; k < a.m[i]; ++k) f.blocks[i][k][k] = Gauss(1);
    return f;
}

Morphism compose(const Morphism& f, const Morphism& g) {
    if (!(g.dst == f.src)) throw DomainError("compose: morphisms are not composable");
    Morphism h = Morphism::zero(g.src, f.dst);
    for (std::size_t i = 0; i < kSimples; ++i)
        for (unsigned r = 0; r < f.dst.m[i]; ++r)
            for (unsigned c = 0; c < g.src.m[i]; ++c)
                for (unsigned k = 0; k < f.src.m[i]; ++k)
                    h.blocks[i][r][c] = h.blocks[i][r][c] + f.blocks[i][r][k] * g.blocks[i][k][c];
    return h;
}

unsigned hom_dimension(const RepObject& a, const RepObject& b) {
    unsigned d = 0;
    for (std::size_t i = 0; i < kSimples; ++i) d += a.m[i] * b.m[i];
    return d;
}

std::size_t simple_tensor(std::size_t a, std::size_t b) {
    Irrep ra = simple_irrep(a), rb = simple_irrep(b);
    for (std::size_t k = 0; k < kSimples; ++k) {
        bool match = true;
        for (int g = 0; g < 2 && match; ++g)
            for (int h = 0; h < 2 && match; ++h)
                match = coproduct_character(ra, rb, g, h) == represent(simple_irrep(k), double_basis(g, h));
        if (match) return k;
    }
    throw std::logic_error("tensor product of simples is not simple");
}

RepObject rep_tensor(const RepObject& a, const RepObject& b) {
    RepObject r;
    for (std::size_t i = 0; i < kSimples; ++i)
        for (std::size_t j = 0; j < kSimples; ++j) r.m[simple_tensor(i, j)] += a.m[i] * b.m[j];
    return r;
}

namespace {

int sign_of(const Gauss& z) {
    if (z == Gauss(1)) return 1;
    if (z == Gauss(-1)) return -1;
    throw std::logic_error("expected a sign, got " + z.str());
}

} // namespace

int rep_braiding(std::size_t a, std::size_t b) {
    // R = sum_g (delta_g (x) e) (x) (1 (x) g); the flip does not change a scalar.
    Irrep ra = simple_irrep(a), rb = simple_irrep(b);
    Gauss s;
    for (int g = 0; g < 2; ++g) {
        DoubleElement one_g = double_basis(0, g);
        one_g[2 + g] = Gauss(1);
        s = s + represent(ra, double_basis(g, 0)) * represent(rb, one_g);
    }
    return sign_of(s);
}

Morphism rep_braiding(const RepObject& a, const RepObject& b) {
    RepObject ab = rep_tensor(a, b), ba = rep_tensor(b, a);
    Morphism c = Morphism::zero(ab, ba);
    for (std::size_t k = 0; k < kSimples; ++k) {
        // Offsets of the (i, j) summand inside the k-block, for both orders.
        std::map<std::pair<std::size_t, std::size_t>, unsigned> off_ab, off_ba;
        unsigned o = 0;
        for (std::size_t i = 0; i < kSimples; ++i)
            for (std::size_t j = 0; j < kSimples; ++j)
                if (simple_tensor(i, j) == k) {
                    off_ab[{i, j}] = o;
                    o += a.m[i] * b.m[j];
                }
        o = 0;
        for (std::size_t j = 0; j < kSimples; ++j)
            for (std::size_t i = 0; i < kSimples; ++i)
                if (simple_tensor(j, i) == k) {
                    off_ba[{j, i}] = o;
                    o += b.m[j] * a.m[i];
                }
        for (const auto& [ij, oab] : off_ab) {
            auto [i, j] = ij;
            Gauss s(rep_braiding(i, j));
            unsigned oba = off_ba.at({j, i});
            for (unsigned al = 0; al < a.m[i]; ++al)
                for (unsigned be = 0; be < b.m[j]; ++be)
                    c.blocks[k][oba + be * a.m[i] + al][oab + al * b.m[j] + be] = s;
        }
    }
    return c;
}

int rep_twist(std::size_t a) {
    // Inverse ribbon element of D(Z2): sum_g delta_g (x) g.
    DoubleElement v{};
    v[0] = v[3] = Gauss(1);
    return sign_of(represent(simple_irrep(a), v));
}

int rep_monodromy(std::size_t a, std::size_t b) { return rep_braiding(a, b) * rep_braiding(b, a); }

bool rep_braid_equations() {
    for (std::size_t a = 0; a < kSimples; ++a)
        for (std::size_t b = 0; b < kSimples; ++b)
            for (std::size_t c = 0; c < kSimples; ++c) {
                if (rep_braiding(a, simple_tensor(b, c)) != rep_braiding(a, b) * rep_braiding(a, c)) return false;
                if (rep_braiding(simple_tensor(a, b), c) != rep_braiding(a, c) * rep_braiding(b, c)) return false;
            }
    return true;
}

RepObject SectorCategory::tensor(const RepObject& a, const RepObject& b) const {
    RepObject r;
    for (std::size_t i = 0; i < kSimples; ++i)
        for (std::size_t j = 0; j < kSimples; ++j)
            r.m[label_simple(simple_label(i) * simple_label(j))] += a.m[i] * b.m[j];
    return r;
}

SectorCategory skeletal_sector_category(const ConeFrame& frame, const Representatives& reps) {
    SectorCategory c;
    c.braiding = braiding_table(reps, frame);
    for (Label l : kLabels) c.twists[static_cast<int>(l)] = twist(l, reps, frame);
    return c;
}

SectorCategory skeletal_sector_category(const ConeFrame& frame) {
    return skeletal_sector_category(frame, Representatives::standard());
}

CatReport verify_equivalence(const ConeFrame& frame, const Representatives& reps) {
    SectorCategory cat = skeletal_sector_category(frame, reps);
    CatReport r;
    r.fusion_match = r.braiding_match = r.twist_match = true;
    for (std::size_t i = 0; i < kSimples; ++i) r.correspondence[simple_name(i)] = label_name(simple_label(i));
    r.epsilon_xz = cat.braiding[static_cast<int>(Label::X)][static_cast<int>(Label::Z)];
    for (std::size_t i = 0; i < kSimples; ++i) {
        int li = static_cast<int>(simple_label(i));
        for (std::size_t j = 0; j < kSimples; ++j) {
            int lj = static_cast<int>(simple_label(j));
            RepObject lhs = cat.tensor(RepObject::simple(i), RepObject::simple(j));
            RepObject rhs = rep_tensor(RepObject::simple(i), RepObject::simple(j));
            if (!(lhs == rhs)) {
                r.fusion_match = false;
                r.mismatches.push_back("fusion " + simple_name(i) + "," + simple_name(j));
            }
            if (cat.braiding[li][lj] != rep_braiding(i, j)) {
                r.braiding_match = false;
                r.mismatches.push_back("braiding " + simple_name(i) + "," + simple_name(j));
            }
        }
        if (cat.twists[li] != rep_twist(i)) {
            r.twist_match = false;
            r.mismatches.push_back("twist " + simple_name(i));
        }
    }
    if (r.epsilon_xz != -1) r.mismatches.push_back("representatives give epsilon_{X,Z} = +1");
    return r;
}

CatReport verify_equivalence(const ConeFrame& frame) {
    return verify_equivalence(frame, Representatives::standard());
}

} // namespace anyonlab

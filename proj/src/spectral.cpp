#include "anyonlab/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

namespace anyonlab {

namespace {

std::int64_t wrap(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

void add_terms(FiniteLattice& l, bool all_terms) {
    auto complete = [&](const std::array<Bond, 4>& bs, std::uint64_t& m) {
        m = 0;
        for (const auto& b : bs) {
            auto k = l.bond_index(b);
            if (!k) return false;
            m ^= std::uint64_t{1} << *k;
        }
        return true;
    };
    std::int64_t vx = all_terms ? l.w - 1 : l.w, vy = all_terms ? l.h - 1 : l.h;
    for (std::int64_t x = 0; x <= vx; ++x)
        for (std::int64_t y = 0; y <= vy; ++y) {
            std::uint64_t m;
            if (complete(star({x, y}), m)) {
                l.star_sites.push_back({x, y});
                l.star_masks.push_back(m);
            }
        }
    for (std::int64_t x = 0; x < l.w; ++x)
        for (std::int64_t y = 0; y < l.h; ++y) {
            std::uint64_t m;
            if (complete(plaq({x, y}), m)) {
                l.plaquette_sites.push_back({x, y});
                l.plaquette_masks.push_back(m);
            }
        }
}

} // namespace

FiniteLattice FiniteLattice::Torus(int w, int h) {
    if (w < 2 || h < 2) throw DomainError("torus sides must be at least 2");
    if (2 * w * h > 64) throw DomainError("torus has more than 64 bonds");
    FiniteLattice l;
    l.kind = Kind::Torus;
    l.w = w;
    l.h = h;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            l.bonds.push_back(H(x, y));
            l.bonds.push_back(V(x, y));
        }
    for (std::size_t k = 0; k < l.bonds.size(); ++k) l.index[l.bonds[k]] = static_cast<int>(k);
    add_terms(l, true);
    return l;
}

FiniteLattice FiniteLattice::OpenPatch(int w, int h) {
    if (w < 1 || h < 1) throw DomainError("patch sides must be positive");
    if (w * (h + 1) + (w + 1) * h > 64) throw DomainError("patch has more than 64 bonds");
    FiniteLattice l;
    l.kind = Kind::OpenPatch;
    l.w = w;
    l.h = h;
    for (int y = 0; y <= h; ++y)
        for (int x = 0; x < w; ++x) l.bonds.push_back(H(x, y));
    for (int y = 0; y < h; ++y)
        for (int x = 0; x <= w; ++x) l.bonds.push_back(V(x, y));
    for (std::size_t k = 0; k < l.bonds.size(); ++k) l.index[l.bonds[k]] = static_cast<int>(k);
    add_terms(l, false);
    return l;
}

std::optional<int> FiniteLattice::bond_index(const Bond& b) const {
    Bond c = b;
    if (kind == Kind::Torus) c.o = {wrap(b.o.x, w), wrap(b.o.y, h)};
    auto it = index.find(c);
    if (it == index.end()) return std::nullopt;
    return it->second;
}

bool FiniteLattice::interior(const Bond& b, int margin) const {
    if (!bond_index(b)) return false;
    if (kind == Kind::Torus) return true;
    for (const auto& p : endpoints(b))
        if (p.x < margin || p.x > w - margin || p.y < margin || p.y > h - margin) return false;
    return true;
}

BondSet FiniteLattice::interior_bonds(int margin) const {
    BondSet s;
    for (const auto& b : bonds)
        if (interior(b, margin)) s.insert(b);
    return s;
}

std::uint64_t FiniteLattice::mask(const BondSet& s) const {
    std::uint64_t m = 0;
    for (const auto& b : s) {
        auto k = bond_index(b);
        if (!k) throw DomainError("bond " + to_string(b) + " lies outside the lattice");
        m ^= std::uint64_t{1} << *k;
    }
    return m;
}

double DenseState::norm() const {
    double s = 0;
    for (const auto& [k, a] : amp) s += std::norm(a);
    return std::sqrt(s);
}

void DenseState::normalize() {
    double n = norm();
    if (n == 0) throw std::logic_error("cannot normalize the zero vector");
    for (auto& [k, a] : amp) a /= n;
}

void DenseState::add(std::uint64_t s, std::complex<double> a) {
    auto& v = amp[s];
    v += a;
}

std::complex<double> inner(const DenseState& a, const DenseState& b) {
    std::complex<double> s = 0;
    const auto& small = a.amp.size() <= b.amp.size() ? a.amp : b.amp;
    for (const auto& [k, _] : small) {
        auto ia = a.amp.find(k), ib = b.amp.find(k);
        if (ia != a.amp.end() && ib != b.amp.end()) s += std::conj(ia->second) * ib->second;
    }
    return s;
}

std::complex<double> to_complex(const Gauss& z) { return {z.re.to_double(), z.im.to_double()}; }

namespace {

// P = c * X^xmask Z^zmask in the computational basis, with Y = i X Z.
struct BitPauli {
    std::uint64_t xmask = 0, zmask = 0;
    std::complex<double> c = 1;
};

BitPauli to_bits(const FiniteLattice& l, const LetterMap& letters, std::complex<double> c) {
    BitPauli p;
    p.c = c;
    for (const auto& [b, letter] : letters) {
        auto k = l.bond_index(b);
        if (!k) throw DomainError("operator support leaves the lattice at " + to_string(b));
        std::uint64_t bit = std::uint64_t{1} << *k;
        if (letter == Letter::X || letter == Letter::Y) p.xmask |= bit;
        if (letter == Letter::Z || letter == Letter::Y) p.zmask |= bit;
        if (letter == Letter::Y) p.c *= std::complex<double>(0, 1);
    }
    return p;
}

int parity(std::uint64_t m) { return __builtin_popcountll(m) & 1; }

void apply_bits(const BitPauli& p, const DenseState& s, DenseState& out) {
    for (const auto& [k, a] : s.amp) {
        double sg = parity(k & p.zmask) ? -1.0 : 1.0;
        out.add(k ^ p.xmask, p.c * sg * a);
    }
}

} // namespace

DenseState apply(const FiniteLattice& l, const PauliOperator& p, const DenseState& s) {
    DenseState out;
    apply_bits(to_bits(l, p.letters(), to_complex(Gauss::i_pow(p.phase()))), s, out);
    return out;
}

DenseState apply(const FiniteLattice& l, const QuasiLocalOperator& q, const DenseState& s) {
    DenseState out;
    for (const auto& [letters, c] : q.terms()) apply_bits(to_bits(l, letters, to_complex(c)), s, out);
    return out;
}

DenseState apply_hamiltonian(const FiniteLattice& l, const DenseState& s) {
    DenseState out;
    for (const auto& [k, a] : s.amp) {
        double diag = 0;
        for (auto m : l.plaquette_masks) diag -= parity(k & m) ? -1.0 : 1.0;
        out.add(k, diag * a);
        for (auto m : l.star_masks) out.add(k ^ m, -a);
    }
    return out;
}

namespace {

constexpr std::size_t kSparseCap = 20;
constexpr std::size_t kDenseEigenCap = 10;
constexpr std::size_t kIterativeCap = 26;

void check_cap(const FiniteLattice& l, std::size_t cap) {
    if (l.num_bonds() > cap)
        throw DomainError("lattice has " + std::to_string(l.num_bonds()) + " bonds, above the cap of " +
                          std::to_string(cap));
}

Eigen::SparseMatrix<double> from_masks(std::size_t n, std::uint64_t xmask, std::uint64_t zmask, double c) {
    std::size_t dim = std::size_t{1} << n;
    std::vector<Eigen::Triplet<double>> t;
    t.reserve(dim);
    for (std::uint64_t s = 0; s < dim; ++s)
        t.emplace_back(static_cast<int>(s ^ xmask), static_cast<int>(s), parity(s & zmask) ? -c : c);
    Eigen::SparseMatrix<double> m(dim, dim);
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

} // namespace

Eigen::SparseMatrix<double> build_hamiltonian(const FiniteLattice& l) {
    check_cap(l, kSparseCap);
    std::size_t dim = std::size_t{1} << l.num_bonds();
    std::vector<Eigen::Triplet<double>> t;
    t.reserve(dim * (l.star_masks.size() + 1));
    for (std::uint64_t s = 0; s < dim; ++s) {
        double diag = 0;
        for (auto m : l.plaquette_masks) diag -= parity(s & m) ? -1.0 : 1.0;
        t.emplace_back(static_cast<int>(s), static_cast<int>(s), diag);
        for (auto m : l.star_masks) t.emplace_back(static_cast<int>(s ^ m), static_cast<int>(s), -1.0);
    }
    Eigen::SparseMatrix<double> h(dim, dim);
    h.setFromTriplets(t.begin(), t.end());
    return h;
}

Eigen::SparseMatrix<double> star_matrix(const FiniteLattice& l, std::size_t k) {
    check_cap(l, kSparseCap);
    return from_masks(l.num_bonds(), l.star_masks.at(k), 0, 1.0);
}

Eigen::SparseMatrix<double> plaquette_matrix(const FiniteLattice& l, std::size_t k) {
    check_cap(l, kSparseCap);
    return from_masks(l.num_bonds(), 0, l.plaquette_masks.at(k), 1.0);
}

bool terms_commute(const FiniteLattice& l) {
    std::vector<Eigen::SparseMatrix<double>> ps;
    for (std::size_t j = 0; j < l.plaquette_masks.size(); ++j) ps.push_back(plaquette_matrix(l, j));
    for (std::size_t i = 0; i < l.star_masks.size(); ++i) {
        auto a = star_matrix(l, i);
        for (const auto& b : ps) {
            Eigen::SparseMatrix<double> c = a * b - b * a;
            if (c.norm() > kSpectralTol) return false;
        }
    }
    return true;
}

DenseState projector_state(const FiniteLattice& l) {
    // The all-up state already satisfies every B_p = +1.
    DenseState s;
    s.amp[0] = 1.0;
    for (auto m : l.star_masks) {
        DenseState next;
        for (const auto& [k, a] : s.amp) {
            next.add(k, 0.5 * a);
            next.add(k ^ m, 0.5 * a);
        }
        s = std::move(next);
    }
    s.normalize();
    return s;
}

std::complex<double> oracle_expectation(const FiniteLattice& l, const DenseState& s, const PauliOperator& p) {
    return inner(s, apply(l, p, s));
}

std::complex<double> oracle_expectation(const FiniteLattice& l, const DenseState& s, const QuasiLocalOperator& q) {
    return inner(s, apply(l, q, s));
}

double stabilizer_residual(const FiniteLattice& l, const DenseState& s) {
    double worst = 0;
    auto check = [&](std::uint64_t xm, std::uint64_t zm) {
        DenseState t;
        apply_bits({xm, zm, 1.0}, s, t);
        for (const auto& [k, a] : s.amp) t.add(k, -a);
        worst = std::max(worst, t.norm());
    };
    for (auto m : l.star_masks) check(m, 0);
    for (auto m : l.plaquette_masks) check(0, m);
    return worst;
}

namespace {

using Vec = Eigen::VectorXd;
using MatVec = std::function<void(const Vec&, Vec&)>;

struct Lanczos {
    std::vector<double> ritz; // ascending
    Vec lowest;
    double residual = 0;
};

// Lanczos with full reorthogonalization inside the complement of `deflate`.
Lanczos lanczos(const MatVec& op, std::size_t dim, const std::vector<Vec>& deflate, std::mt19937_64& rng,
                std::size_t max_iter) {
    auto project = [&](Vec& v, const std::vector<Vec>& basis) {
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : basis) v -= b.dot(v) * b;
    };
    std::normal_distribution<double> nd;
    Vec v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = nd(rng);
    project(v, deflate);
    v.normalize();

    std::vector<Vec> basis{v};
    std::vector<double> alpha, beta;
    Vec w(dim);
    for (std::size_t it = 0; it < max_iter; ++it) {
        op(basis.back(), w);
        alpha.push_back(basis.back().dot(w));
        project(w, deflate);
        project(w, basis);
        double b = w.norm();
        if (b < 1e-10 || basis.size() == dim - deflate.size()) break;
        beta.push_back(b);
        basis.push_back(w / b);
    }
    std::size_t m = alpha.size();
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        t(i, i) = alpha[i];
        if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    Lanczos out;
    for (std::size_t i = 0; i < m; ++i) out.ritz.push_back(es.eigenvalues()[i]);
    out.lowest = Vec::Zero(dim);
    for (std::size_t i = 0; i < m; ++i) out.lowest += es.eigenvectors()(i, 0) * basis[i];
    out.lowest.normalize();
    op(out.lowest, w);
    out.residual = (w - out.ritz[0] * out.lowest).norm();
    return out;
}

std::vector<double> distinct(const std::vector<double>& ev) {
    std::vector<double> d;
    for (double e : ev)
        if (d.empty() || e > d.back() + 1e-6) d.push_back(e);
    return d;
}

SpectrumResult dense_spectrum(const FiniteLattice& l) {
    Eigen::MatrixXd h = Eigen::MatrixXd(build_hamiltonian(l));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    SpectrumResult r;
    r.dense = true;
    r.e0 = ev.front();
    r.low = distinct(ev);
    r.degeneracy = static_cast<int>(std::count_if(ev.begin(), ev.end(), [&](double e) { return e < r.e0 + 1e-6; }));
    r.gap = r.low.size() > 1 ? r.low[1] - r.e0 : 0.0;
    for (int k = 0; k < r.degeneracy; ++k) {
        Vec x = es.eigenvectors().col(k);
        r.residual = std::max(r.residual, (h * x - ev[k] * x).norm());
    }
    return r;
}

SpectrumResult iterative_spectrum(const FiniteLattice& l, std::uint64_t seed) {
    std::size_t n = l.num_bonds();
    std::size_t dim = std::size_t{1} << n;
    Vec diag(dim);
    for (std::uint64_t s = 0; s < dim; ++s) {
        double d = 0;
        for (auto m : l.plaquette_masks) d -= parity(s & m) ? -1.0 : 1.0;
        diag[s] = d;
    }
    MatVec op = [&](const Vec& x, Vec& y) {
        y = diag.cwiseProduct(x);
        for (auto m : l.star_masks)
            for (std::uint64_t s = 0; s < dim; ++s) y[s ^ m] -= x[s];
    };
    std::mt19937_64 rng(seed);
    const std::size_t max_iter = 300;

    // The first run sees every level present in a random vector; the gap comes from it.
    Lanczos first = lanczos(op, dim, {}, rng, max_iter);
    SpectrumResult r;
    r.low = distinct(first.ritz);
    r.e0 = first.ritz.front();
    r.gap = r.low.size() > 1 ? r.low[1] - r.e0 : 0.0;
    if (first.residual > 1e-8) throw std::runtime_error("Lanczos did not converge");

    // Degeneracy: deflate ground vectors until the lowest remaining level rises.
    std::vector<Vec> ground{first.lowest};
    r.residual = first.residual;
    while (ground.size() < dim) {
        Lanczos next = lanczos(op, dim, ground, rng, max_iter);
        if (next.ritz.front() > r.e0 + 1e-6) break;
        if (next.residual > 1e-8) throw std::runtime_error("Lanczos did not converge");
        r.residual = std::max(r.residual, next.residual);
        Vec g = next.lowest;
        for (const auto& b : ground) g -= b.dot(g) * b;
        ground.push_back(g.normalized());
    }
    r.degeneracy = static_cast<int>(ground.size());
    return r;
}

} // namespace

SpectrumResult spectral_gap(const FiniteLattice& l, std::uint64_t seed) {
    if (l.num_bonds() <= kDenseEigenCap) return dense_spectrum(l);
    check_cap(l, kIterativeCap);
    return iterative_spectrum(l, seed);
}

double string_energy(const FiniteLattice& l, const FinitePath& path, StringType t) {
    DenseState psi = projector_state(l);
    DenseState phi = apply(l, string_operator(path, t), psi);
    double e_phi = inner(phi, apply_hamiltonian(l, phi)).real();
    double e_psi = inner(psi, apply_hamiltonian(l, psi)).real();
    return e_phi - e_psi;
}

DerivationResult derivation_check(const FiniteLattice& l, const QuasiLocalOperator& x, const QuasiLocalOperator& y) {
    for (const auto* op : {&x, &y})
        for (const auto& b : op->support())
            if (!l.interior(b, 1)) throw DomainError("operator support at " + to_string(b) + " is too close to the boundary");

    DenseState psi = projector_state(l);
    DenseState ypsi = apply(l, y, psi);
    DenseState xpsi = apply(l, x, psi);
    // -i <X* delta(Y)> with delta(Y) = i[H, Y] is <X* H Y> - <X* Y H>.
    std::complex<double> lhs = inner(xpsi, apply_hamiltonian(l, ypsi)) -
                               inner(xpsi, apply(l, y, apply_hamiltonian(l, psi)));

    std::set<Vertex> stars;
    std::set<Plaquette> plaqs;
    for (const auto& b : y.support()) {
        for (const auto& v : endpoints(b)) stars.insert(v);
        for (const auto& p : faces(b)) plaqs.insert(p);
    }
    QuasiLocalOperator xs = x.adjoint();
    Gauss base = vacuum_expectation(xs * y);
    Gauss rhs;
    for (const auto& s : stars)
        rhs = rhs + base - vacuum_expectation(xs * QuasiLocalOperator(star_operator(s)) * y);
    for (const auto& p : plaqs)
        rhs = rhs + base - vacuum_expectation(xs * QuasiLocalOperator(plaquette_operator(p)) * y);

    DerivationResult r{lhs, to_complex(rhs), false};
    r.ok = std::abs(r.lhs - r.rhs) <= kSpectralTol;
    return r;
}

} // namespace anyonlab

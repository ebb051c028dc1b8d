#include "anyonlab/pauli.hpp"

#include <numeric>
#include <stdexcept>

namespace anyonlab {

namespace {
using i128 = __int128;

std::int64_t narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
    return static_cast<std::int64_t>(v);
}

Rational reduce(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("rational: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i128 a = n < 0 ? -n : n, b = d;
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    return Rational(narrow(n), narrow(d));
}
} // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : n_(n), d_(d) {
    if (d == 0) throw std::domain_error("rational: zero denominator");
    if (d_ < 0) { n_ = -n_; d_ = -d_; }
    auto g = std::gcd(n_ < 0 ? -n_ : n_, d_);
    if (g > 1) { n_ /= g; d_ /= g; }
}

Rational Rational::operator+(const Rational& o) const {
    return reduce(i128(n_) * o.d_ + i128(o.n_) * d_, i128(d_) * o.d_);
}
Rational Rational::operator-(const Rational& o) const { return *this + (-o); }
Rational Rational::operator*(const Rational& o) const {
    return reduce(i128(n_) * o.n_, i128(d_) * o.d_);
}
Rational Rational::operator/(const Rational& o) const {
    return reduce(i128(n_) * o.d_, i128(d_) * o.n_);
}

std::string Rational::str() const {
    return d_ == 1 ? std::to_string(n_) : std::to_string(n_) + "/" + std::to_string(d_);
}

Gauss Gauss::i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
    }
}

std::string Gauss::str() const {
    if (im.is_zero()) return re.str();
    std::string imag;
    if (im == Rational(1)) imag = "i";
    else if (im == Rational(-1)) imag = "-i";
    else imag = im.str() + "i";
    if (re.is_zero()) return imag;
    if (imag[0] == '-') return re.str() + imag;
    return re.str() + "+" + imag;
}

char letter_char(Letter l) {
    switch (l) {
    case Letter::I: return 'I';
    case Letter::X: return 'X';
    case Letter::Y: return 'Y';
    case Letter::Z: return 'Z';
    }
    return '?';
}

Letter letter_from_char(char c) {
    switch (c) {
    case 'I': return Letter::I;
    case 'X': return Letter::X;
    case 'Y': return Letter::Y;
    case 'Z': return Letter::Z;
    }
    throw std::invalid_argument(std::string("unknown Pauli letter '") + c + "'");
}

LetterProduct multiply_letters(Letter a, Letter b) {
    if (a == Letter::I) return {0, b};
    if (b == Letter::I) return {0, a};
    if (a == b) return {0, Letter::I};
    auto c = static_cast<Letter>(static_cast<int>(a) ^ static_cast<int>(b));
    // Cyclic order X -> Y -> Z gives +i, anticyclic gives -i.
    auto rank = [](Letter l) { return l == Letter::X ? 0 : l == Letter::Y ? 1 : 2; };
    bool cyclic = (rank(a) + 1) % 3 == rank(b);
    return {cyclic ? 1 : 3, c};
}

PauliOperator::PauliOperator(int phase, LetterMap letters)
    : phase_(((phase % 4) + 4) % 4), letters_(std::move(letters)) {
    for (auto it = letters_.begin(); it != letters_.end();) {
        if (it->second == Letter::I) it = letters_.erase(it);
        else ++it;
    }
}

PauliOperator PauliOperator::single(const Bond& b, Letter l) { return {0, {{b, l}}}; }

PauliOperator PauliOperator::on(const BondSet& bonds, Letter l) {
    LetterMap m;
    for (const auto& b : bonds) m[b] = l;
    return {0, m};
}

Letter PauliOperator::at(const Bond& b) const {
    auto it = letters_.find(b);
    return it == letters_.end() ? Letter::I : it->second;
}

BondSet PauliOperator::support() const {
    BondSet s;
    for (const auto& [b, l] : letters_) s.insert(b);
    return s;
}

bool PauliOperator::localized_in(const BondSet& region) const {
    for (const auto& [b, l] : letters_)
        if (!region.count(b)) return false;
    return true;
}

PauliOperator PauliOperator::operator*(const PauliOperator& o) const {
    int ph = phase_ + o.phase_;
    LetterMap out = letters_;
    for (const auto& [b, l] : o.letters_) {
        auto it = out.find(b);
        if (it == out.end()) {
            out.emplace(b, l);
            continue;
        }
        auto pr = multiply_letters(it->second, l);
        ph += pr.phase;
        if (pr.c == Letter::I) out.erase(it);
        else it->second = pr.c;
    }
    PauliOperator r;
    r.phase_ = ph % 4;
    r.letters_ = std::move(out);
    return r;
}

PauliOperator PauliOperator::adjoint() const { return {4 - phase_, letters_}; }

PauliOperator PauliOperator::with_phase(int k) const { return {k, letters_}; }

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) { return p * q; }

Commutation commutes(const PauliOperator& p, const PauliOperator& q) {
    const auto& a = p.letters().size() <= q.letters().size() ? p.letters() : q.letters();
    const auto& b = p.letters().size() <= q.letters().size() ? q : p;
    int odd = 0;
    for (const auto& [bond, l] : a) {
        Letter m = b.at(bond);
        if (m != Letter::I && m != l) odd ^= 1;
    }
    return odd ? Commutation::Anticommute : Commutation::Commute;
}

PauliOperator star_operator(Vertex v) {
    LetterMap m;
    for (const auto& b : star(v)) m[b] = Letter::X;
    return {0, m};
}

PauliOperator plaquette_operator(Plaquette p) {
    LetterMap m;
    for (const auto& b : plaq(p)) m[b] = Letter::Z;
    return {0, m};
}

PauliOperator translate(const PauliOperator& p, Point t) {
    LetterMap m;
    for (const auto& [b, l] : p.letters()) m[translate(b, t)] = l;
    return {p.phase(), m};
}

QuasiLocalOperator::QuasiLocalOperator(const PauliOperator& p, Gauss c) {
    add_term(p.letters(), c * Gauss::i_pow(p.phase()));
}

void QuasiLocalOperator::add_term(const LetterMap& m, const Gauss& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (fresh) return;
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

BondSet QuasiLocalOperator::support() const {
    BondSet s;
    for (const auto& [m, c] : terms_)
        for (const auto& [b, l] : m) s.insert(b);
    return s;
}

QuasiLocalOperator QuasiLocalOperator::operator+(const QuasiLocalOperator& o) const {
    QuasiLocalOperator r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

QuasiLocalOperator QuasiLocalOperator::operator-(const QuasiLocalOperator& o) const {
    return *this + o.scale(Gauss(-1));
}

QuasiLocalOperator QuasiLocalOperator::operator*(const QuasiLocalOperator& o) const {
    QuasiLocalOperator r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            PauliOperator p = PauliOperator(0, m1) * PauliOperator(0, m2);
            r.add_term(p.letters(), c1 * c2 * Gauss::i_pow(p.phase()));
        }
    return r;
}

QuasiLocalOperator QuasiLocalOperator::scale(const Gauss& c) const {
    QuasiLocalOperator r;
    for (const auto& [m, v] : terms_) r.add_term(m, v * c);
    return r;
}

QuasiLocalOperator QuasiLocalOperator::adjoint() const {
    // Phase-free Pauli monomials are self-adjoint.
    QuasiLocalOperator r;
    for (const auto& [m, v] : terms_) r.add_term(m, v.conj());
    return r;
}

QuasiLocalOperator translate(const QuasiLocalOperator& a, Point t) {
    QuasiLocalOperator r;
    for (const auto& [m, c] : a.terms()) r.add_term(translate(PauliOperator(0, m), t).letters(), c);
    return r;
}

QuasiLocalOperator commutator(const QuasiLocalOperator& a, const QuasiLocalOperator& b) {
    return a * b - b * a;
}

} // namespace anyonlab

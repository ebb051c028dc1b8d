#pragma once

#include "anyonlab/lattice.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace anyonlab {

// Exact rational with int64 numerator/denominator, always reduced, den > 0.
class Rational {
public:
    Rational(std::int64_t n = 0, std::int64_t d = 1);
    std::int64_t num() const { return n_; }
    std::int64_t den() const { return d_; }
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational operator-() const { return {-n_, d_}; }
    bool operator==(const Rational&) const = default;
    bool is_zero() const { return n_ == 0; }
    double to_double() const { return double(n_) / double(d_); }
    std::string str() const;

private:
    std::int64_t n_, d_;
};

// Exact Gaussian rational re + i im.
struct Gauss {
    Rational re, im;
    Gauss(Rational r = 0, Rational i = 0) : re(r), im(i) {}
    static Gauss i_pow(int k);
    Gauss operator+(const Gauss& o) const { return {re + o.re, im + o.im}; }
    Gauss operator-(const Gauss& o) const { return {re - o.re, im - o.im}; }
    Gauss operator*(const Gauss& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Gauss operator-() const { return {-re, -im}; }
    Gauss conj() const { return {re, -im}; }
    bool operator==(const Gauss&) const = default;
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    std::string str() const;
};

// Bit layout: bit0 = X component, bit1 = Z component.
enum class Letter : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char letter_char(Letter l);
Letter letter_from_char(char c);

// a*b = i^phase * c with the convention X*Z = -iY.
struct LetterProduct {
    int phase;
    Letter c;
};
LetterProduct multiply_letters(Letter a, Letter b);

using LetterMap = std::map<Bond, Letter>;

enum class Commutation { Commute, Anticommute };

class PauliOperator {
public:
    PauliOperator() = default;
    PauliOperator(int phase, LetterMap letters);

    static PauliOperator identity() { return {}; }
    static PauliOperator single(const Bond& b, Letter l);
    static PauliOperator on(const BondSet& bonds, Letter l);

    int phase() const { return phase_; }
    const LetterMap& letters() const { return letters_; }
    Letter at(const Bond& b) const;
    BondSet support() const;
    bool is_identity() const { return letters_.empty(); }
    bool localized_in(const BondSet& region) const;

    PauliOperator operator*(const PauliOperator& o) const;
    PauliOperator adjoint() const;
    PauliOperator with_phase(int k) const;
    bool operator==(const PauliOperator&) const = default;

private:
    int phase_ = 0; // exponent of i, in 0..3
    LetterMap letters_;
};

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q);
Commutation commutes(const PauliOperator& p, const PauliOperator& q);
inline bool anticommute(const PauliOperator& p, const PauliOperator& q) {
    return commutes(p, q) == Commutation::Anticommute;
}

PauliOperator star_operator(Vertex v);
PauliOperator plaquette_operator(Plaquette p);
PauliOperator translate(const PauliOperator& p, Point t);

class QuasiLocalOperator {
public:
    QuasiLocalOperator() = default;
    QuasiLocalOperator(const PauliOperator& p, Gauss c = Gauss(1));

    const std::map<LetterMap, Gauss>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BondSet support() const;

    QuasiLocalOperator operator+(const QuasiLocalOperator& o) const;
    QuasiLocalOperator operator-(const QuasiLocalOperator& o) const;
    QuasiLocalOperator operator*(const QuasiLocalOperator& o) const;
    QuasiLocalOperator scale(const Gauss& c) const;
    QuasiLocalOperator adjoint() const;
    bool operator==(const QuasiLocalOperator&) const = default;

    void add_term(const LetterMap& m, const Gauss& c);

private:
    std::map<LetterMap, Gauss> terms_;
};

QuasiLocalOperator translate(const QuasiLocalOperator& a, Point t);
// i[A,B] style helpers
QuasiLocalOperator commutator(const QuasiLocalOperator& a, const QuasiLocalOperator& b);

} // namespace anyonlab

#pragma once

// Dense Kronecker-product matrices for small bond sets. Bond k of the list is
// bit k of the basis index, matching the spectral module's convention.

#include "anyonlab/pauli.hpp"

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <vector>

namespace oracle {

using Mat = Eigen::MatrixXcd;
using cd = std::complex<double>;

inline Mat letter_matrix(anyonlab::Letter l) {
    Mat m(2, 2);
    switch (l) {
    case anyonlab::Letter::I: m << 1, 0, 0, 1; break;
    case anyonlab::Letter::X: m << 0, 1, 1, 0; break;
    case anyonlab::Letter::Y: m << 0, cd(0, -1), cd(0, 1), 0; break;
    case anyonlab::Letter::Z: m << 1, 0, 0, -1; break;
    }
    return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
    Mat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return r;
}

inline Mat dense(const anyonlab::LetterMap& letters, cd c, const std::vector<anyonlab::Bond>& bonds) {
    for (const auto& [b, _] : letters)
        if (std::find(bonds.begin(), bonds.end(), b) == bonds.end()) throw std::logic_error("bond outside oracle register");
    Mat m = Mat::Identity(1, 1);
    for (auto it = bonds.rbegin(); it != bonds.rend(); ++it) {
        auto f = letters.find(*it);
        m = kron(m, letter_matrix(f == letters.end() ? anyonlab::Letter::I : f->second));
    }
    return c * m;
}

inline cd i_pow(int k) {
    static const cd t[4] = {1, cd(0, 1), -1, cd(0, -1)};
    return t[((k % 4) + 4) % 4];
}

inline Mat dense(const anyonlab::PauliOperator& p, const std::vector<anyonlab::Bond>& bonds) {
    return dense(p.letters(), i_pow(p.phase()), bonds);
}

inline Mat dense(const anyonlab::QuasiLocalOperator& q, const std::vector<anyonlab::Bond>& bonds) {
    std::size_t n = std::size_t{1} << bonds.size();
    Mat m = Mat::Zero(n, n);
    for (const auto& [letters, c] : q.terms()) m += dense(letters, {c.re.to_double(), c.im.to_double()}, bonds);
    return m;
}

inline bool close(const Mat& a, const Mat& b, double tol = 1e-12) { return (a - b).norm() <= tol; }

} // namespace oracle

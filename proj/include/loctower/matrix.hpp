#ifndef LOCTOWER_MATRIX_HPP
#define LOCTOWER_MATRIX_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "loctower/errors.hpp"

namespace loctower {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline bool is_finite(const ComplexMatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const Complex z = m(i, j);
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        }
    return true;
}

/// Largest singular value. This is the operator (spectral) norm, the only
/// matrix norm that makes the level seminorms C*-norms.
inline double spectral_norm(const ComplexMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    return m.jacobiSvd().singularValues()(0);
}

/// Canonical order on spectral points: ascending real part, then imaginary.
inline bool spectral_less(const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

}  // namespace loctower

#endif

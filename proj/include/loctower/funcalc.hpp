#ifndef LOCTOWER_FUNCALC_HPP
#define LOCTOWER_FUNCALC_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "loctower/errors.hpp"
#include "loctower/function_spec.hpp"
#include "loctower/spectrum.hpp"
#include "loctower/tower.hpp"

namespace loctower {

namespace detail {

/// Unitary diagonalization of one normal level: Schur reduction, then the
/// triangular factor is asserted diagonal (off-diagonal mass <= 1e-8 * norm)
/// and truncated. The assertion doubles as a normality backstop.
struct LevelDiagonalization {
    ComplexMatrix unitary;        // U with T = U diag(values) U*
    std::vector<Complex> values;  // diagonal, in Schur order
};

inline LevelDiagonalization diagonalize_normal(const ComplexMatrix& m, std::size_t level_index) {
    Eigen::ComplexSchur<ComplexMatrix> schur(m, /*computeU=*/true);
    if (schur.info() != Eigen::Success)
        throw TowerError(ErrorCode::EigensolverFailure,
                         "Schur reduction did not converge at level " + std::to_string(level_index));
    const ComplexMatrix& t = schur.matrixT();
    double off = 0.0;
    for (Eigen::Index i = 0; i < t.rows(); ++i)
        for (Eigen::Index j = i + 1; j < t.cols(); ++j) off = std::max(off, std::abs(t(i, j)));
    const double scale = std::max(1.0, spectral_norm(m));
    if (off > 1e-8 * scale)
        throw TowerError(ErrorCode::NotNormal,
                         "triangular factor at level " + std::to_string(level_index) +
                             " is not diagonal (off-diagonal magnitude " + std::to_string(off) + ")");
    LevelDiagonalization d;
    d.unitary = schur.matrixU();
    d.values.reserve(static_cast<std::size_t>(t.rows()));
    for (Eigen::Index i = 0; i < t.rows(); ++i) d.values.push_back(t(i, i));
    return d;
}

}  // namespace detail

/// Continuous functional calculus f(T): per level, diagonalize the normal
/// matrix and apply f to the spectral values. The resulting family is
/// coherent and is re-validated on the way out.
inline OperatorTower apply_function(const OperatorTower& tower, const FunctionSpec& f,
                                    double normal_tol = tol::eigen) {
    tower.require_normal(normal_tol);
    if (f.is_identity()) return tower;  // exact by definition of the calculus
    std::vector<ComplexMatrix> out;
    out.reserve(tower.num_levels());
    for (std::size_t a = 1; a <= tower.num_levels(); ++a) {
        const auto diag = detail::diagonalize_normal(tower.level(a), a);
        const int d = static_cast<int>(diag.values.size());
        ComplexMatrix fd = ComplexMatrix::Zero(d, d);
        for (int i = 0; i < d; ++i) fd(i, i) = f(diag.values[static_cast<std::size_t>(i)]);
        out.push_back(diag.unitary * fd * diag.unitary.adjoint());
    }
    // Coherence is inherited from the tower; failure here is an internal error.
    return OperatorTower::validate(tower.chain(), std::move(out), 10 * tol::coherence);
}

/// Polynomial calculus by direct matrix products: sum of coeff * T^j (T*)^k.
/// Independent route from apply_function; the two must agree on polynomials.
inline OperatorTower polynomial_calculus(const OperatorTower& tower,
                                         const std::vector<PolyTerm>& terms,
                                         double normal_tol = tol::eigen) {
    tower.require_normal(normal_tol);
    OperatorTower acc = OperatorTower::zero(tower.chain());
    const OperatorTower star = tower.adjoint();
    for (const auto& term : terms) {
        OperatorTower mono = OperatorTower::identity(tower.chain());
        for (int i = 0; i < term.z_power; ++i) mono = mono.compose(tower);
        for (int i = 0; i < term.conj_power; ++i) mono = mono.compose(star);
        acc = acc.add(mono.scale(term.coeff));
    }
    return acc;
}

struct Classification {
    bool self_adjoint = false;
    bool unitary = false;
    bool normal = false;
};

/// Spectral classification cross-checked against direct norm tests; the two
/// routes must agree or an internal error is raised.
inline Classification classify(const OperatorTower& tower, double tolerance = tol::eigen) {
    Classification c;
    c.normal = tower.is_normal(tolerance);

    double max_im = 0.0, max_circle = 0.0;
    if (c.normal) {
        const LocalSpectrum s = local_spectrum(tower);
        for (Complex z : s.merged) {
            max_im = std::max(max_im, std::abs(z.imag()));
            max_circle = std::max(max_circle, std::abs(std::abs(z) - 1.0));
        }
    }
    const bool sa_spectral = c.normal && max_im <= tolerance;
    const bool un_spectral = c.normal && max_circle <= tolerance;

    double sa_direct_dev = 0.0, un_direct_dev = 0.0;
    for (std::size_t a = 1; a <= tower.num_levels(); ++a) {
        const ComplexMatrix& m = tower.level(a);
        sa_direct_dev = std::max(sa_direct_dev, spectral_norm(m - m.adjoint()));
        const ComplexMatrix id = ComplexMatrix::Identity(m.rows(), m.cols());
        un_direct_dev = std::max(un_direct_dev, spectral_norm(m * m.adjoint() - id));
    }
    // Direct route at a looser scale-aware threshold; spectral distances can
    // be smaller than operator-norm distances by a dimension factor.
    const double direct_tol = 64 * tolerance;
    const bool sa_direct = sa_direct_dev <= direct_tol;
    const bool un_direct = un_direct_dev <= direct_tol && c.normal;
    if (sa_spectral != sa_direct || un_spectral != un_direct)
        throw TowerError(ErrorCode::EigensolverFailure,
                         "classification routes disagree (spectral vs direct norm)");

    c.self_adjoint = sa_spectral;
    c.unitary = un_spectral;
    return c;
}

struct SpectralMappingReport {
    double hausdorff = 0.0;
    bool pass = false;
    std::vector<Complex> spectrum_of_image;   // merged spectrum of f(T)
    std::vector<Complex> image_of_spectrum;   // f applied to merged spectrum of T
};

/// Executable spectral mapping check: the spectrum of f(T) against the image
/// of the spectrum, compared in Hausdorff distance.
inline SpectralMappingReport check_spectral_mapping(const OperatorTower& tower,
                                                    const FunctionSpec& f,
                                                    double tolerance = tol::eigen) {
    SpectralMappingReport r;
    const OperatorTower image = apply_function(tower, f);
    r.spectrum_of_image = local_spectrum(image).merged;
    std::vector<Complex> mapped;
    for (Complex z : local_spectrum(tower).merged) mapped.push_back(f(z));
    r.image_of_spectrum = detail::dedup_spectrum(std::move(mapped), tol::eigen);
    r.hausdorff = hausdorff_distance(r.spectrum_of_image, r.image_of_spectrum);
    r.pass = r.hausdorff <= tolerance;
    return r;
}

}  // namespace loctower

#endif

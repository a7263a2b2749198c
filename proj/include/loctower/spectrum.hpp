#ifndef LOCTOWER_SPECTRUM_HPP
#define LOCTOWER_SPECTRUM_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "loctower/errors.hpp"
#include "loctower/matrix.hpp"
#include "loctower/tower.hpp"

namespace loctower {

/// Per-level eigenvalue lists together with the tolerance-deduplicated union.
/// The union models the local spectrum of the tower.
struct LocalSpectrum {
    std::vector<std::vector<Complex>> per_level;  // per_level[a-1] has d_a entries
    std::vector<Complex> merged;                  // canonical (Re, Im) order
    bool normal_input = true;                     // false flags the block-structure-only case
    double match_tol = tol::eigen;
};

namespace detail {

/// Eigenvalues of one level via a complex Schur reduction (unitary similarity
/// to triangular form); diagonal of the triangular factor, canonically sorted.
inline std::vector<Complex> level_eigenvalues(const ComplexMatrix& m, std::size_t level_index) {
    Eigen::ComplexSchur<ComplexMatrix> schur(m, /*computeU=*/false);
    if (schur.info() != Eigen::Success)
        throw TowerError(ErrorCode::EigensolverFailure,
                         "Schur reduction did not converge at level " + std::to_string(level_index));
    std::vector<Complex> eig;
    eig.reserve(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) eig.push_back(schur.matrixT()(i, i));
    std::sort(eig.begin(), eig.end(), spectral_less);
    return eig;
}

/// Greedy nearest-neighbor dedup at the matching tolerance; cluster
/// representatives are the lexicographically smallest members, so output is
/// deterministic.
inline std::vector<Complex> dedup_spectrum(std::vector<Complex> values, double match_tol) {
    std::sort(values.begin(), values.end(), spectral_less);
    std::vector<Complex> out;
    for (Complex z : values) {
        bool merged = false;
        for (const Complex& rep : out)
            if (std::abs(rep - z) <= match_tol) {
                merged = true;
                break;
            }
        if (!merged) out.push_back(z);
    }
    return out;
}

/// Multiset containment of `small` in `big` within a tolerance, by greedy
/// nearest-match pairing.
inline bool multiset_contained(const std::vector<Complex>& small, const std::vector<Complex>& big,
                               double match_tol) {
    std::vector<bool> used(big.size(), false);
    for (Complex z : small) {
        double best = match_tol;
        std::ptrdiff_t best_idx = -1;
        for (std::size_t i = 0; i < big.size(); ++i) {
            if (used[i]) continue;
            const double d = std::abs(big[i] - z);
            if (d <= best) {
                best = d;
                best_idx = static_cast<std::ptrdiff_t>(i);
            }
        }
        if (best_idx < 0) return false;
        used[static_cast<std::size_t>(best_idx)] = true;
    }
    return true;
}

}  // namespace detail

/// Local spectrum of a tower: the union over levels of the level spectra.
/// Non-normal towers are admitted (the block structure still nests the level
/// spectra) but flagged.
inline LocalSpectrum local_spectrum(const OperatorTower& tower, double match_tol = tol::eigen) {
    LocalSpectrum s;
    s.match_tol = match_tol;
    s.normal_input = tower.is_normal();
    std::vector<Complex> all;
    for (std::size_t a = 1; a <= tower.num_levels(); ++a) {
        auto eig = detail::level_eigenvalues(tower.level(a), a);
        all.insert(all.end(), eig.begin(), eig.end());
        s.per_level.push_back(std::move(eig));
    }
    s.merged = detail::dedup_spectrum(std::move(all), match_tol);
    return s;
}

/// Symmetric Hausdorff distance between two finite point sets.
inline double hausdorff_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    if (a.empty() || b.empty()) return a.empty() == b.empty() ? 0.0 : std::numeric_limits<double>::infinity();
    auto directed = [](const std::vector<Complex>& from, const std::vector<Complex>& to) {
        double worst = 0.0;
        for (Complex z : from) {
            double best = std::numeric_limits<double>::infinity();
            for (Complex w : to) best = std::min(best, std::abs(z - w));
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

}  // namespace loctower

#endif

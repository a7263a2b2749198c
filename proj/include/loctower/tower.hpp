#ifndef LOCTOWER_TOWER_HPP
#define LOCTOWER_TOWER_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "loctower/errors.hpp"
#include "loctower/index_chain.hpp"
#include "loctower/matrix.hpp"

namespace loctower {

namespace tol {
inline constexpr double coherence = 1e-10;   // block-structure deviations
inline constexpr double numeric = 1e-9;      // relative, norm identities
inline constexpr double eigen = 1e-8;        // eigenvalue matching
}  // namespace tol

/// Nondecreasing vector of level seminorms p_1(T) <= ... <= p_N(T).
struct SeminormVector {
    std::vector<double> values;
};

struct NormalityCertificate {
    bool normal = false;
    std::size_t worst_level = 0;
    double deviation = 0.0;  // max over levels of ||T_a T_a* - T_a* T_a||
};

/// Coherent family {T_1, ..., T_N} of square matrices: T_b restricted to the
/// first d_a coordinates equals T_a, and that subspace is reducing for T_b.
/// This is the finite model of a locally bounded operator on the nested chain.
/// Immutable after construction; all algebra returns new towers.
class OperatorTower {
public:
    /// Checks sizes, finiteness, coherence and reduction before admitting the
    /// family. Reports the first violating level pair and worst deviation.
    static OperatorTower validate(IndexChain chain, std::vector<ComplexMatrix> raw_levels,
                                  double coherence_tol = tol::coherence) {
        const std::size_t n = chain.size();
        if (raw_levels.size() != n)
            throw TowerError(ErrorCode::DimensionMismatch,
                             "expected " + std::to_string(n) + " levels, got " +
                                 std::to_string(raw_levels.size()));
        for (std::size_t a = 1; a <= n; ++a) {
            const ComplexMatrix& m = raw_levels[a - 1];
            const int d = chain.dim(a);
            if (m.rows() != d || m.cols() != d)
                throw TowerError(ErrorCode::DimensionMismatch,
                                 "level " + std::to_string(a) + " is " + std::to_string(m.rows()) +
                                     "x" + std::to_string(m.cols()) + ", expected " +
                                     std::to_string(d) + "x" + std::to_string(d));
            if (!is_finite(m))
                throw TowerError(ErrorCode::NonFiniteEntry,
                                 "level " + std::to_string(a) + " contains NaN/Inf");
        }
        // Coherence against the immediate predecessor suffices: block equality
        // and reduction compose along the chain.
        for (std::size_t a = 1; a < n; ++a) {
            const int da = chain.dim(a);
            const int db = chain.dim(a + 1);
            const ComplexMatrix& big = raw_levels[a];
            const double restr =
                (big.topLeftCorner(da, da) - raw_levels[a - 1]).cwiseAbs().maxCoeff();
            if (restr > coherence_tol)
                throw TowerError(ErrorCode::CoherenceViolation,
                                 "restriction mismatch between levels " + std::to_string(a) +
                                     " and " + std::to_string(a + 1) + ", max deviation " +
                                     std::to_string(restr));
            const double off_ur = big.topRightCorner(da, db - da).cwiseAbs().maxCoeff();
            const double off_ll = big.bottomLeftCorner(db - da, da).cwiseAbs().maxCoeff();
            const double off = std::max(off_ur, off_ll);
            if (off > coherence_tol)
                throw TowerError(ErrorCode::CoherenceViolation,
                                 "nonzero off-diagonal block between levels " + std::to_string(a) +
                                     " and " + std::to_string(a + 1) + ", max deviation " +
                                     std::to_string(off));
        }
        return OperatorTower(std::move(chain), std::move(raw_levels));
    }

    const IndexChain& chain() const noexcept { return chain_; }
    std::size_t num_levels() const noexcept { return chain_.size(); }

    /// Level extraction (1-based); models the quotient map onto level a.
    const ComplexMatrix& level(std::size_t a) const {
        chain_.check_level(a);
        return levels_[a - 1];
    }

    ComplexMatrix restrict_to(std::size_t a) const { return level(a); }

    const ComplexMatrix& top() const { return levels_.back(); }

    OperatorTower adjoint() const {
        std::vector<ComplexMatrix> out;
        out.reserve(levels_.size());
        for (const auto& m : levels_) out.push_back(m.adjoint());
        return from_coherent(chain_, std::move(out));
    }

    OperatorTower add(const OperatorTower& other) const {
        check_same_chain(other);
        std::vector<ComplexMatrix> out;
        out.reserve(levels_.size());
        for (std::size_t i = 0; i < levels_.size(); ++i)
            out.push_back(levels_[i] + other.levels_[i]);
        return from_coherent(chain_, std::move(out));
    }

    OperatorTower scale(Complex c) const {
        std::vector<ComplexMatrix> out;
        out.reserve(levels_.size());
        for (const auto& m : levels_) out.push_back(c * m);
        return from_coherent(chain_, std::move(out));
    }

    OperatorTower compose(const OperatorTower& other) const {
        check_same_chain(other);
        std::vector<ComplexMatrix> out;
        out.reserve(levels_.size());
        for (std::size_t i = 0; i < levels_.size(); ++i)
            out.push_back(levels_[i] * other.levels_[i]);
        return from_coherent(chain_, std::move(out));
    }

    static OperatorTower identity(const IndexChain& chain) {
        std::vector<ComplexMatrix> out;
        out.reserve(chain.size());
        for (std::size_t a = 1; a <= chain.size(); ++a)
            out.push_back(ComplexMatrix::Identity(chain.dim(a), chain.dim(a)));
        return from_coherent(chain, std::move(out));
    }

    static OperatorTower zero(const IndexChain& chain) {
        std::vector<ComplexMatrix> out;
        out.reserve(chain.size());
        for (std::size_t a = 1; a <= chain.size(); ++a)
            out.push_back(ComplexMatrix::Zero(chain.dim(a), chain.dim(a)));
        return from_coherent(chain, std::move(out));
    }

    /// Diagonal tower from the top-level diagonal entries.
    static OperatorTower diagonal(const IndexChain& chain, const std::vector<Complex>& entries) {
        if (static_cast<int>(entries.size()) != chain.dim(chain.size()))
            throw TowerError(ErrorCode::DimensionMismatch,
                             "diagonal entry count must equal top dimension");
        std::vector<ComplexMatrix> out;
        out.reserve(chain.size());
        for (std::size_t a = 1; a <= chain.size(); ++a) {
            const int d = chain.dim(a);
            ComplexMatrix m = ComplexMatrix::Zero(d, d);
            for (int i = 0; i < d; ++i) m(i, i) = entries[static_cast<std::size_t>(i)];
            out.push_back(std::move(m));
        }
        return from_coherent(chain, std::move(out));
    }

    SeminormVector seminorms() const {
        SeminormVector s;
        s.values.reserve(levels_.size());
        for (const auto& m : levels_) s.values.push_back(spectral_norm(m));
        return s;
    }

    NormalityCertificate normality(double tolerance = tol::eigen) const {
        NormalityCertificate cert;
        cert.normal = true;
        for (std::size_t a = 1; a <= chain_.size(); ++a) {
            const ComplexMatrix& m = levels_[a - 1];
            const double dev = spectral_norm(m * m.adjoint() - m.adjoint() * m);
            if (dev > cert.deviation) {
                cert.deviation = dev;
                cert.worst_level = a;
            }
        }
        if (cert.worst_level == 0) cert.worst_level = 1;
        cert.normal = cert.deviation <= tolerance;
        return cert;
    }

    bool is_normal(double tolerance = tol::eigen) const { return normality(tolerance).normal; }

    void require_normal(double tolerance = tol::eigen) const {
        const NormalityCertificate c = normality(tolerance);
        if (!c.normal)
            throw TowerError(ErrorCode::NotNormal,
                             "tower is not normal: level " + std::to_string(c.worst_level) +
                                 " has commutator norm " + std::to_string(c.deviation));
    }

    /// Algebra results are coherent by construction; the full check is kept
    /// for debug builds.
    static OperatorTower from_coherent(IndexChain chain, std::vector<ComplexMatrix> levels) {
#ifndef NDEBUG
        return validate(std::move(chain), std::move(levels), 10 * tol::coherence);
#else
        return OperatorTower(std::move(chain), std::move(levels));
#endif
    }

private:
    OperatorTower(IndexChain chain, std::vector<ComplexMatrix> levels)
        : chain_(std::move(chain)), levels_(std::move(levels)) {}

    void check_same_chain(const OperatorTower& other) const {
        if (chain_ != other.chain_)
            throw TowerError(ErrorCode::ChainMismatch, "operands have different index chains");
    }

    IndexChain chain_;
    std::vector<ComplexMatrix> levels_;
};

/// Convenience wrapper matching the operation-style interface.
inline OperatorTower validate_tower(IndexChain chain, std::vector<ComplexMatrix> raw_levels,
                                    double coherence_tol = tol::coherence) {
    return OperatorTower::validate(std::move(chain), std::move(raw_levels), coherence_tol);
}

}  // namespace loctower

#endif

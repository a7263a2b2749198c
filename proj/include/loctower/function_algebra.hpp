#ifndef LOCTOWER_FUNCTION_ALGEBRA_HPP
#define LOCTOWER_FUNCTION_ALGEBRA_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "loctower/errors.hpp"
#include "loctower/matrix.hpp"

namespace loctower {

/// Nested chain of real intervals carrying uniform sample grids.
/// symmetric: level n is [-n, n]; halfline: level n is [1/2, n].
/// The halfline left endpoint matches the seminorm family it models; any
/// positive left endpoint would do, 1/2 is the documented constant.
class IntervalChain {
public:
    enum class Mode { Symmetric, Halfline };

    static constexpr double kHalflineStart = 0.5;

    IntervalChain(Mode mode, int num_levels, int samples_per_unit = 1000)
        : mode_(mode), num_levels_(num_levels), samples_per_unit_(samples_per_unit) {
        if (num_levels_ < 1)
            throw TowerError(ErrorCode::BadInput, "interval chain needs at least one level");
        if (samples_per_unit_ < 10)
            throw TowerError(ErrorCode::BadInput, "need at least 10 samples per unit");
        if (mode_ == Mode::Halfline && samples_per_unit_ % 2 != 0)
            throw TowerError(ErrorCode::BadInput,
                             "halfline mode needs an even samples_per_unit so 1/2 lands on the grid");
        // Global grid over the level-N interval; level grids are index ranges
        // within it, so nesting is exact.
        const long k_min = mode_ == Mode::Symmetric
                               ? -static_cast<long>(num_levels_) * samples_per_unit_
                               : samples_per_unit_ / 2;
        const long k_max = static_cast<long>(num_levels_) * samples_per_unit_;
        grid_.reserve(static_cast<std::size_t>(k_max - k_min + 1));
        for (long k = k_min; k <= k_max; ++k)
            grid_.push_back(static_cast<double>(k) / samples_per_unit_);
    }

    Mode mode() const noexcept { return mode_; }
    int num_levels() const noexcept { return num_levels_; }
    int samples_per_unit() const noexcept { return samples_per_unit_; }
    const std::vector<double>& grid() const noexcept { return grid_; }
    std::size_t grid_size() const noexcept { return grid_.size(); }

    double level_lo(int n) const { return mode_ == Mode::Symmetric ? -n : kHalflineStart; }
    double level_hi(int n) const { return static_cast<double>(n); }

    /// Half-open index range [first, last) of the level-n grid inside the
    /// global grid.
    std::pair<std::size_t, std::size_t> level_range(int n) const {
        check_level(n);
        const double lo = level_lo(n), hi = level_hi(n);
        std::size_t first = 0;
        while (first < grid_.size() && grid_[first] < lo - 0.5 / samples_per_unit_) ++first;
        std::size_t last = grid_.size();
        while (last > first && grid_[last - 1] > hi + 0.5 / samples_per_unit_) --last;
        return {first, last};
    }

    void check_level(int n) const {
        if (n < 1 || n > num_levels_)
            throw TowerError(ErrorCode::LevelOutOfRange,
                             "level " + std::to_string(n) + " outside [1, " +
                                 std::to_string(num_levels_) + "]");
    }

    bool operator==(const IntervalChain& o) const noexcept {
        return mode_ == o.mode_ && num_levels_ == o.num_levels_ &&
               samples_per_unit_ == o.samples_per_unit_;
    }
    bool operator!=(const IntervalChain& o) const noexcept { return !(*this == o); }

private:
    Mode mode_;
    int num_levels_;
    int samples_per_unit_;
    std::vector<double> grid_;
};

/// A sampled continuous function on the level-N interval of a chain.
class GridFunction {
public:
    GridFunction(IntervalChain chain, std::vector<Complex> values)
        : chain_(std::move(chain)), values_(std::move(values)) {
        if (values_.size() != chain_.grid_size())
            throw TowerError(ErrorCode::DimensionMismatch,
                             "sample count does not match the chain grid");
        for (Complex z : values_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw TowerError(ErrorCode::NonFiniteEntry, "grid function sample is NaN/Inf");
    }

    template <typename F>
    static GridFunction sample(const IntervalChain& chain, F&& f) {
        std::vector<Complex> values;
        values.reserve(chain.grid_size());
        for (double t : chain.grid()) values.push_back(Complex(f(t)));
        return GridFunction(chain, std::move(values));
    }

    const IntervalChain& chain() const noexcept { return chain_; }
    const std::vector<Complex>& values() const noexcept { return values_; }

    GridFunction operator+(const GridFunction& o) const { return zip(o, std::plus<Complex>{}); }
    GridFunction operator-(const GridFunction& o) const { return zip(o, std::minus<Complex>{}); }
    GridFunction operator*(const GridFunction& o) const { return zip(o, std::multiplies<Complex>{}); }

    GridFunction conj() const {
        std::vector<Complex> out;
        out.reserve(values_.size());
        for (Complex z : values_) out.push_back(std::conj(z));
        return GridFunction(chain_, std::move(out));
    }

private:
    template <typename Op>
    GridFunction zip(const GridFunction& o, Op op) const {
        if (chain_ != o.chain_)
            throw TowerError(ErrorCode::ChainMismatch, "grid functions live on different chains");
        std::vector<Complex> out;
        out.reserve(values_.size());
        for (std::size_t i = 0; i < values_.size(); ++i) out.push_back(op(values_[i], o.values_[i]));
        return GridFunction(chain_, std::move(out));
    }

    IntervalChain chain_;
    std::vector<Complex> values_;
};

/// Sup of |f| over the level-n grid; the grid model of the level seminorm.
inline double seminorm_p(const GridFunction& f, int n) {
    const auto [first, last] = f.chain().level_range(n);
    double sup = 0.0;
    for (std::size_t i = first; i < last; ++i) sup = std::max(sup, std::abs(f.values()[i]));
    return sup;
}

/// Equality in the level-n quotient: the difference has vanishing level-n
/// seminorm.
inline bool quotient_equal(const GridFunction& f, const GridFunction& g, int n, double tolerance) {
    if (f.chain() != g.chain())
        throw TowerError(ErrorCode::ChainMismatch, "grid functions live on different chains");
    return seminorm_p(f - g, n) <= tolerance;
}

/// Point evaluation as a character: the smallest level whose interval
/// contains x, plus nearest-grid-sample application. For Lipschitz inputs the
/// read-off error is bounded by L / (2 * samples_per_unit).
struct EvaluationCharacter {
    int min_level = 1;
    double point = 0.0;

    Complex operator()(const GridFunction& f) const {
        const auto& grid = f.chain().grid();
        std::size_t best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double d = std::abs(grid[i] - point);
            if (d < best_d) {
                best_d = d;
                best = i;
            }
        }
        return f.values()[best];
    }
};

inline EvaluationCharacter evaluation_character(const IntervalChain& chain, double x) {
    const int n_levels = chain.num_levels();
    for (int n = 1; n <= n_levels; ++n)
        if (x >= chain.level_lo(n) && x <= chain.level_hi(n)) return {n, x};
    throw TowerError(ErrorCode::OutOfDomain,
                     "point " + std::to_string(x) + " lies in no level interval");
}

// Built-in generators.

/// g_l(t) = 1 / (2 + t l^2); decreasing on [0, inf) with g_l(0) = 1/2.
inline double witness_g(int ell, double t) { return 1.0 / (2.0 + t * ell * ell); }

inline GridFunction make_identity(const IntervalChain& chain) {
    return GridFunction::sample(chain, [](double t) { return t; });
}

/// t clamped to [-1, 1]; coincides with the identity on level 1 of the
/// symmetric chain but differs from it at t = 2.
inline GridFunction make_clamp1(const IntervalChain& chain) {
    return GridFunction::sample(chain, [](double t) { return std::clamp(t, -1.0, 1.0); });
}

inline GridFunction make_witness(const IntervalChain& chain, int ell) {
    if (ell < 1) throw TowerError(ErrorCode::BadInput, "witness index must be positive");
    return GridFunction::sample(chain, [ell](double t) { return witness_g(ell, t); });
}

inline GridFunction make_const(const IntervalChain& chain, Complex c) {
    std::vector<Complex> values(chain.grid_size(), c);
    return GridFunction(chain, std::move(values));
}

inline GridFunction make_exp(const IntervalChain& chain) {
    return GridFunction::sample(chain, [](double t) { return std::exp(t); });
}

struct NoncontinuityRow {
    int ell = 0;
    std::vector<double> seminorms;  // p_n(g_ell) for n = 1..N
    double bound = 0.0;             // 1/ell
    double phi_value = 0.0;         // g_ell(0), the evaluation at 0
    bool pass = false;              // every p_n(g_ell) < 1/ell
};

struct NoncontinuityReport {
    std::vector<NoncontinuityRow> rows;
    bool pass = false;
};

/// The non-continuous-character demonstration: on the halfline chain every
/// seminorm of g_l is 2/(4 + l^2) < 1/l, yet evaluation at 0 stays 1/2, so no
/// seminorm ball maps into a small ball around 0 under f -> f(0).
inline NoncontinuityReport noncontinuity_witness(const IntervalChain& chain, int max_ell) {
    if (chain.mode() != IntervalChain::Mode::Halfline)
        throw TowerError(ErrorCode::OutOfDomain,
                         "evaluation at 0 is representable only on the halfline chain");
    NoncontinuityReport report;
    report.pass = true;
    for (int ell = 1; ell <= max_ell; ++ell) {
        const GridFunction g = make_witness(chain, ell);
        NoncontinuityRow row;
        row.ell = ell;
        row.bound = 1.0 / ell;
        row.phi_value = witness_g(ell, 0.0);  // 0 is outside every level; analytic value
        row.pass = true;
        for (int n = 1; n <= chain.num_levels(); ++n) {
            const double p = seminorm_p(g, n);
            row.seminorms.push_back(p);
            if (!(p < row.bound)) row.pass = false;
        }
        if (!row.pass) report.pass = false;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace loctower

#endif

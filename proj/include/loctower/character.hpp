#ifndef LOCTOWER_CHARACTER_HPP
#define LOCTOWER_CHARACTER_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "loctower/errors.hpp"
#include "loctower/funcalc.hpp"
#include "loctower/function_spec.hpp"
#include "loctower/spectrum.hpp"
#include "loctower/tower.hpp"

namespace loctower {

/// A character of the commutative algebra generated by a normal tower:
/// evaluation at a spectral point, tagged with the smallest level whose
/// spectrum contains that point.
struct Character {
    std::size_t min_level = 1;
    Complex value{0.0, 0.0};
};

/// An element of the generated algebra, presented as f(T) for a function
/// on the local spectrum.
struct AlgebraElement {
    FunctionSpec expr;
};

/// One character per merged spectral point, in canonical spectral order.
/// Eigenvalue multiplicity does not multiply characters.
inline std::vector<Character> enumerate_characters(const OperatorTower& tower,
                                                   double match_tol = tol::eigen) {
    tower.require_normal();
    const LocalSpectrum s = local_spectrum(tower, match_tol);
    std::vector<Character> chars;
    chars.reserve(s.merged.size());
    for (Complex z : s.merged) {
        Character c;
        c.value = z;
        c.min_level = s.per_level.size();
        for (std::size_t a = 1; a <= s.per_level.size(); ++a) {
            const auto& lvl = s.per_level[a - 1];
            const bool present = std::any_of(lvl.begin(), lvl.end(), [&](Complex w) {
                return std::abs(w - z) <= match_tol;
            });
            if (present) {
                c.min_level = a;
                break;
            }
        }
        chars.push_back(c);
    }
    return chars;
}

namespace detail {

inline void check_known_character(const OperatorTower& tower, const Character& phi,
                                  double match_tol) {
    const LocalSpectrum s = local_spectrum(tower, match_tol);
    for (Complex z : s.merged)
        if (std::abs(z - phi.value) <= match_tol) return;
    throw TowerError(ErrorCode::UnknownCharacter,
                     "character value is not a spectral point of the tower");
}

}  // namespace detail

/// Whether the character factors through level a, i.e. its spectral value
/// already occurs in the level-a spectrum. Monotone in a.
inline bool factor_level(const OperatorTower& tower, const Character& phi, std::size_t a,
                         double match_tol = tol::eigen) {
    tower.chain().check_level(a);
    detail::check_known_character(tower, phi, match_tol);
    const LocalSpectrum s = local_spectrum(tower, match_tol);
    const auto& lvl = s.per_level[a - 1];
    return std::any_of(lvl.begin(), lvl.end(),
                       [&](Complex w) { return std::abs(w - phi.value) <= match_tol; });
}

/// Gelfand transform of an element at every character: evaluation of the
/// defining function at the spectral point.
inline std::vector<Complex> gelfand(const OperatorTower& tower, const AlgebraElement& a,
                                    const std::vector<Character>& characters) {
    std::vector<Complex> spectrum;
    spectrum.reserve(characters.size());
    for (const auto& c : characters) spectrum.push_back(c.value);
    a.expr.check_coverage(spectrum);
    std::vector<Complex> out;
    out.reserve(characters.size());
    for (const auto& c : characters) out.push_back(a.expr(c.value));
    return out;
}

/// Independent route for polynomial elements: evaluate the polynomial tower,
/// move level min_level into the diagonalizing basis of T there, and read the
/// diagonal entry paired with the character's spectral value.
inline Complex gelfand_via_diagonalization(const OperatorTower& tower,
                                           const std::vector<PolyTerm>& terms,
                                           const Character& phi,
                                           double match_tol = tol::eigen) {
    detail::check_known_character(tower, phi, match_tol);
    const OperatorTower poly = polynomial_calculus(tower, terms);
    const std::size_t a = phi.min_level;
    const auto diag = detail::diagonalize_normal(tower.level(a), a);
    const ComplexMatrix in_basis =
        diag.unitary.adjoint() * poly.level(a) * diag.unitary;
    double best = std::numeric_limits<double>::infinity();
    Eigen::Index best_idx = 0;
    for (Eigen::Index i = 0; i < in_basis.rows(); ++i) {
        const double d = std::abs(diag.values[static_cast<std::size_t>(i)] - phi.value);
        if (d < best) {
            best = d;
            best_idx = i;
        }
    }
    if (best > match_tol)
        throw TowerError(ErrorCode::UnknownCharacter,
                         "character value missing from level " + std::to_string(a) + " spectrum");
    return in_basis(best_idx, best_idx);
}

struct IsometryReport {
    std::vector<double> element_norms;   // p_a of the materialized element
    std::vector<double> gelfand_norms;   // sup |Gelfand value| over characters factoring through a
    double worst_relative = 0.0;
    bool pass = false;
};

/// Local isometry of the Gelfand transform: per level, the seminorm of f(T)
/// against the sup of |f| over the characters living at that level.
inline IsometryReport local_isometry_check(const OperatorTower& tower, const AlgebraElement& a,
                                           double rel_tol = 1e-8) {
    IsometryReport r;
    const OperatorTower mat = apply_function(tower, a.expr);
    r.element_norms = mat.seminorms().values;

    const auto characters = enumerate_characters(tower);
    const auto values = gelfand(tower, a, characters);
    r.gelfand_norms.assign(tower.num_levels(), 0.0);
    for (std::size_t lev = 1; lev <= tower.num_levels(); ++lev) {
        double sup = 0.0;
        for (std::size_t i = 0; i < characters.size(); ++i)
            if (characters[i].min_level <= lev) sup = std::max(sup, std::abs(values[i]));
        r.gelfand_norms[lev - 1] = sup;
    }

    for (std::size_t i = 0; i < r.element_norms.size(); ++i) {
        const double denom = std::max({1.0, r.element_norms[i], r.gelfand_norms[i]});
        r.worst_relative =
            std::max(r.worst_relative, std::abs(r.element_norms[i] - r.gelfand_norms[i]) / denom);
    }
    r.pass = r.worst_relative <= rel_tol;
    return r;
}

/// Maximal-ideal membership: the element lies in Ker(phi) iff its Gelfand
/// value at phi vanishes.
inline bool kernel_contains(const OperatorTower& tower, const Character& phi,
                            const AlgebraElement& a, double tolerance) {
    detail::check_known_character(tower, phi, tol::eigen);
    a.expr.check_coverage(local_spectrum(tower).merged);
    return std::abs(a.expr(phi.value)) <= tolerance;
}

}  // namespace loctower

#endif

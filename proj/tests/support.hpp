// Test-only generators and independent oracles. The planted construction is
// the oracle for spectra and character min-levels: eigenvalues are chosen
// first, then hidden behind block-structured unitary conjugation.
#ifndef LOCTOWER_TESTS_SUPPORT_HPP
#define LOCTOWER_TESTS_SUPPORT_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <random>
#include <vector>

#include "loctower/matrix.hpp"
#include "loctower/function_spec.hpp"
#include "loctower/tower.hpp"

namespace loctower::testsupport {

using Rng = std::mt19937_64;

inline IndexChain random_chain(Rng& rng, int max_levels = 6, int max_dim = 16) {
    std::uniform_int_distribution<int> levels_dist(1, max_levels);
    const int n = levels_dist(rng);
    // Choose n distinct dimensions from 1..max_dim.
    std::vector<int> pool(max_dim);
    for (int i = 0; i < max_dim; ++i) pool[i] = i + 1;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> dims(pool.begin(), pool.begin() + n);
    std::sort(dims.begin(), dims.end());
    return IndexChain(dims);
}

inline Complex random_complex(Rng& rng, double scale = 2.0) {
    std::uniform_real_distribution<double> d(-scale, scale);
    return {d(rng), d(rng)};
}

/// Haar-ish random unitary via Householder QR of a complex Gaussian matrix.
inline ComplexMatrix random_unitary(Rng& rng, int n) {
    std::normal_distribution<double> g(0.0, 1.0);
    ComplexMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
    Eigen::HouseholderQR<ComplexMatrix> qr(a);
    return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

/// Block-diagonal unitary respecting every chain split: one unitary block per
/// dimension increment.
inline ComplexMatrix block_unitary(Rng& rng, const IndexChain& chain) {
    const int top = chain.dim(chain.size());
    ComplexMatrix u = ComplexMatrix::Zero(top, top);
    int start = 0;
    for (std::size_t a = 1; a <= chain.size(); ++a) {
        const int end = chain.dim(a);
        const int size = end - start;
        u.block(start, start, size, size) = random_unitary(rng, size);
        start = end;
    }
    return u;
}

/// A planted normal tower: T_top = U diag(values) U* with U block-structured,
/// levels are the leading blocks. Records everything needed as an oracle.
struct PlantedTower {
    OperatorTower tower;
    std::vector<Complex> planted;                   // diagonal values, index order
    std::vector<std::vector<Complex>> per_level;    // first d_a planted values
};

inline PlantedTower planted_normal_tower(Rng& rng, const IndexChain& chain,
                                         std::vector<Complex> planted) {
    const int top = chain.dim(chain.size());
    if (static_cast<int>(planted.size()) != top) std::abort();
    const ComplexMatrix u = block_unitary(rng, chain);
    ComplexMatrix d = ComplexMatrix::Zero(top, top);
    for (int i = 0; i < top; ++i) d(i, i) = planted[static_cast<std::size_t>(i)];
    const ComplexMatrix t_top = u * d * u.adjoint();
    std::vector<ComplexMatrix> levels;
    std::vector<std::vector<Complex>> per_level;
    for (std::size_t a = 1; a <= chain.size(); ++a) {
        const int da = chain.dim(a);
        levels.push_back(t_top.topLeftCorner(da, da));
        per_level.emplace_back(planted.begin(), planted.begin() + da);
    }
    // The leading block of a product of block-diagonal factors is the product
    // of leading blocks, so the family is coherent by construction.
    auto tower = OperatorTower::validate(chain, std::move(levels), 1e-9);
    return PlantedTower{std::move(tower), std::move(planted), std::move(per_level)};
}

inline PlantedTower random_normal_tower(Rng& rng, const IndexChain& chain, bool real_spectrum = false) {
    const int top = chain.dim(chain.size());
    std::vector<Complex> planted;
    planted.reserve(static_cast<std::size_t>(top));
    for (int i = 0; i < top; ++i) {
        Complex z = random_complex(rng);
        if (real_spectrum) z = Complex(z.real(), 0.0);
        planted.push_back(z);
    }
    return planted_normal_tower(rng, chain, std::move(planted));
}

/// Oracle for character min-levels: smallest level whose planted value list
/// contains the point.
inline std::size_t planted_min_level(const PlantedTower& p, Complex value, double match_tol) {
    for (std::size_t a = 1; a <= p.per_level.size(); ++a)
        for (Complex w : p.per_level[a - 1])
            if (std::abs(w - value) <= match_tol) return a;
    return 0;  // not planted
}

inline std::vector<PolyTerm> random_polynomial(Rng& rng, int max_degree = 3, int max_terms = 4) {
    std::uniform_int_distribution<int> terms_dist(1, max_terms);
    std::uniform_int_distribution<int> pow_dist(0, max_degree);
    const int n_terms = terms_dist(rng);
    std::vector<PolyTerm> terms;
    for (int i = 0; i < n_terms; ++i) {
        int j = pow_dist(rng);
        int k = pow_dist(rng);
        if (j + k > max_degree) k = std::max(0, max_degree - j);
        terms.push_back(PolyTerm{j, k, random_complex(rng, 1.0)});
    }
    return terms;
}

/// Direct polynomial evaluation at a point, independent of FunctionSpec.
inline Complex eval_polynomial(const std::vector<PolyTerm>& terms, Complex z) {
    Complex acc{0.0, 0.0};
    for (const auto& t : terms) {
        Complex m = t.coeff;
        for (int i = 0; i < t.z_power; ++i) m *= z;
        for (int i = 0; i < t.conj_power; ++i) m *= std::conj(z);
        acc += m;
    }
    return acc;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace loctower::testsupport

#endif

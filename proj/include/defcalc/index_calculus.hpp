#pragma once

/**
 * @file index_calculus.hpp
 * @brief Deficiency indices of products, powers, polynomials, and direct
 *        sums of closed symmetric operators.
 *
 * The operations below are pure extended arithmetic.  The operator-theoretic
 * hypotheses behind them (closedness, 0 in the field of regularity for
 * products, denseness of the domains of powers) cannot be certified by a
 * finite computation and are the caller's responsibility.
 */

#include <vector>

#include "defcalc/extended.hpp"
#include "defcalc/polynomial.hpp"

namespace defcalc {

/// Defect number of a product at 0: defe(T1 T2, 0) = defe(T1, 0) + defe(T2, 0).
/// Requires 0 in the field of regularity of both factors (not machine-checked).
inline ExtendedCount product_defect(ExtendedCount d1, ExtendedCount d2) { return d1 + d2; }

/// Deficiency indices of S^(2k):  n+ = n- = k (n+(S) + n-(S)).
inline DefectPair even_power_indices(const DefectPair& p, std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("even_power_indices: k must be >= 1");
    ExtendedCount both = k * (p.n_plus + p.n_minus);
    return {both, both};
}

/// Deficiency indices of S^(2k+1):  n± = k (n+(S) + n-(S)) + n±(S).
inline DefectPair odd_power_indices(const DefectPair& p, std::uint64_t k) {
    if (k == 0)
        throw std::invalid_argument("odd_power_indices: k must be >= 1 (power 1 is the identity)");
    ExtendedCount common = k * (p.n_plus + p.n_minus);
    return {common + p.n_plus, common + p.n_minus};
}

/// Deficiency indices of S^m, dispatching on parity.  m = 1 is the identity.
inline DefectPair power_indices(const DefectPair& p, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("power_indices: m must be >= 1");
    if (m == 1) return p;
    if (m % 2 == 0) return even_power_indices(p, m / 2);
    return odd_power_indices(p, (m - 1) / 2);
}

/// Deficiency indices of P(S) for a real polynomial P of degree m >= 1.
///
/// For positive leading coefficient this equals the indices of S^m.  A
/// negative leading coefficient swaps the pair (n±(-A) = n∓(A) for
/// symmetric A).
inline DefectPair polynomial_indices(const DefectPair& p, const RealPolynomial& poly) {
    DefectPair result = power_indices(p, static_cast<std::uint64_t>(poly.degree()));
    return poly.leading_coefficient() > 0 ? result : result.swapped();
}

/// Componentwise extended sum over a finite list of summands.  An infinite
/// direct sum whose tail is essentially self-adjoint is represented by the
/// finite prefix (the all-zero tail contributes nothing).
inline DefectPair direct_sum_indices(const std::vector<DefectPair>& parts) {
    DefectPair total{0, 0};
    for (const auto& p : parts) {
        total.n_plus = total.n_plus + p.n_plus;
        total.n_minus = total.n_minus + p.n_minus;
    }
    return total;
}

}  // namespace defcalc

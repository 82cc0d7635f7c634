#pragma once

/**
 * @file kernel_counts.hpp
 * @brief L^2 kernel dimensions for the Bessel-type family on (0,1).
 *
 * The kernel of the order-2 expression is spanned by u_b(x) = (1-x)^b with
 * b = 1/2 +- alpha; the order-4 kernel adds b = 5/2 +- alpha.  At alpha = 1
 * the exponents 1/2 + alpha and 5/2 - alpha collide and the fourth kernel
 * direction degenerates to (1-x)^{3/2} ln(1-x); its image under the order-2
 * expression is a nonzero multiple of the non-L^2 direction, so the counts
 * below remain valid across that degeneracy.
 *
 * Counts (alpha in [1,3)):
 *   order 2 kernel, L^2 members:                 1
 *   order 4 kernel, L^2 members:                 3   (the "limit-3" count)
 *   iterated order-2 (u and tau u both L^2):     2
 */

#include <cmath>
#include <stdexcept>
#include <vector>

#include "defcalc/expression.hpp"

namespace defcalc {

namespace detail {

inline bool l2_on_01(double exponent) { return exponent > -0.5; }

}  // namespace detail

/// Number of L^2((0,1)) members in the kernel of the order-2 (power = 2) or
/// order-4 (power = 4) Bessel-type expression.  Outside alpha in [1,3) the
/// count is still reported honestly for the given alpha.
inline int kernel_l2_count(int power, double alpha) {
    if (power != 2 && power != 4)
        throw std::invalid_argument("kernel_l2_count: power must be 2 or 4");
    if (!(alpha >= 1.0)) throw std::invalid_argument("kernel_l2_count: alpha must be >= 1");
    int count = 0;
    if (power == 2) {
        count += detail::l2_on_01(0.5 + alpha) ? 1 : 0;
        count += detail::l2_on_01(0.5 - alpha) ? 1 : 0;
        return count;
    }
    count += detail::l2_on_01(0.5 + alpha) ? 1 : 0;   // b1
    count += detail::l2_on_01(0.5 - alpha) ? 1 : 0;   // b2
    count += detail::l2_on_01(2.5 + alpha) ? 1 : 0;   // b3
    // b4 = 5/2 - alpha; at alpha = 1 it collides with b1 and the independent
    // direction is (1-x)^{3/2} ln(1-x), same integrability.
    count += detail::l2_on_01(2.5 - alpha) ? 1 : 0;
    return count;
}

/// Dimension of {y : tau4 y = 0, y in L^2, tau2 y in L^2} -- the kernel count
/// for the iterated order-2 minimal operator.  tau2 maps u_{b3} to a multiple
/// of u_{b1} (L^2) and u_{b4} to -4(1-alpha) u_{b2} (not L^2 unless the
/// coefficient vanishes, which happens exactly at the alpha = 1 degeneracy
/// where the direction is the log solution with tau2-image along u_{b2}).
inline int iterated_square_kernel_count(double alpha) {
    if (!(alpha >= 1.0))
        throw std::invalid_argument("iterated_square_kernel_count: alpha must be >= 1");
    int count = 0;
    const double b1 = 0.5 + alpha, b2 = 0.5 - alpha, b3 = 2.5 + alpha, b4 = 2.5 - alpha;
    // b1: tau2 u_{b1} = 0
    if (detail::l2_on_01(b1)) ++count;
    // b2: tau2 u_{b2} = 0 but u_{b2} itself is not L^2 for alpha >= 1
    if (detail::l2_on_01(b2)) ++count;
    // b3: tau2 u_{b3} = -4(1+alpha) u_{b1}
    if (detail::l2_on_01(b3) && detail::l2_on_01(b1)) ++count;
    // b4 (or the log direction at alpha = 1): tau2-image proportional to u_{b2}
    if (alpha == 1.0) {
        // log direction (1-x)^{3/2} ln(1-x): in L^2, image -2 u_{b2} not L^2
    } else if (detail::l2_on_01(b4) && detail::l2_on_01(b2)) {
        ++count;
    }
    return count;
}

/// Residual-based cross-check that the kernel exponents really annihilate the
/// expression: max |tau u_b| over the samples, relative to the scale of u_b''.
inline double kernel_residual(const Expression& e, double exponent,
                              const std::vector<double>& xs) {
    const auto u = make_u_beta(exponent, e.order() + 1);
    double worst = 0.0;
    for (double x : xs) {
        const double val = std::abs(apply(e, u, x));
        const double scale =
            1.0 + std::abs(u(x, e.order())) + std::abs(e.p.back()(x) * u(x, 0));
        worst = std::max(worst, val / scale);
    }
    return worst;
}

}  // namespace defcalc

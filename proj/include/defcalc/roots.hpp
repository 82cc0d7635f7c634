#pragma once

/**
 * @file roots.hpp
 * @brief Polynomial root finding: Aberth–Ehrlich simultaneous iteration with
 *        a companion-matrix fallback.
 *
 * Deterministic by construction: fixed initial guesses on a circle, fixed
 * iteration order, no randomness.  Degrees up to a few dozen are the target;
 * the companion-matrix route (Eigen eigenvalues) is also exposed separately
 * so it can serve as an independent cross-check.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "defcalc/polynomial.hpp"

namespace defcalc {

using Complex = std::complex<double>;

/// All roots of a polynomial, with multiplicity, plus the achieved residual.
struct RootSet {
    std::vector<Complex> roots;
    double residual_bound = 0.0;   ///< max |P(root)| / coefficient scale
    std::string method;            ///< "aberth" or "companion"
};

namespace detail {

inline Complex horner(const std::vector<Complex>& c, Complex z) {
    Complex acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

inline Complex horner_derivative(const std::vector<Complex>& c, Complex z) {
    Complex acc = 0.0;
    for (std::size_t k = c.size() - 1; k >= 1; --k)
        acc = acc * z + static_cast<double>(k) * c[k];
    return acc;
}

inline double coefficient_scale(const std::vector<Complex>& c) {
    double m = 0.0;
    for (const auto& v : c) m = std::max(m, std::abs(v));
    return m > 0 ? m : 1.0;
}

inline double root_bound(const std::vector<Complex>& c) {
    double m = 0.0;
    const std::size_t deg = c.size() - 1;
    for (std::size_t k = 0; k < deg; ++k) m = std::max(m, std::abs(c[k] / c[deg]));
    return 1.0 + m;
}

/// Roots as eigenvalues of the Frobenius companion matrix.
inline std::vector<Complex> companion_eigenvalues(const std::vector<Complex>& c) {
    const int m = static_cast<int>(c.size()) - 1;
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(m, m);
    for (int i = 1; i < m; ++i) A(i, i - 1) = 1.0;
    for (int i = 0; i < m; ++i) A(i, m - 1) = -c[i] / c[m];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(A, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("companion_eigenvalues: eigenvalue iteration failed");
    std::vector<Complex> roots(m);
    for (int i = 0; i < m; ++i) roots[i] = solver.eigenvalues()(i);
    return roots;
}

/// Aberth–Ehrlich iteration.  Returns true on convergence.
inline bool aberth(const std::vector<Complex>& c, std::vector<Complex>& z, int max_iter,
                   double tol) {
    const int m = static_cast<int>(c.size()) - 1;
    const double scale = coefficient_scale(c);
    for (int iter = 0; iter < max_iter; ++iter) {
        double worst = 0.0;
        for (int i = 0; i < m; ++i) {
            const Complex p = horner(c, z[i]);
            const Complex dp = horner_derivative(c, z[i]);
            Complex ratio;
            if (std::abs(dp) > 0) {
                ratio = p / dp;
            } else {
                // Derivative vanished exactly; nudge along a fixed direction.
                z[i] += Complex(tol, tol);
                worst = 1.0;
                continue;
            }
            Complex repulsion = 0.0;
            for (int j = 0; j < m; ++j) {
                if (j == i) continue;
                Complex diff = z[i] - z[j];
                if (std::abs(diff) < 1e-300) diff = Complex(1e-300, 0);
                repulsion += 1.0 / diff;
            }
            const Complex denom = 1.0 - ratio * repulsion;
            const Complex correction = (std::abs(denom) > 1e-300) ? ratio / denom : ratio;
            z[i] -= correction;
            worst = std::max(worst, std::abs(correction) / (1.0 + std::abs(z[i])));
        }
        if (worst < tol) {
            // Converged steps; accept if residuals are small too.
            double res = 0.0;
            for (int i = 0; i < m; ++i) res = std::max(res, std::abs(horner(c, z[i])));
            if (res / scale < std::sqrt(tol)) return true;
        }
    }
    return false;
}

/// Newton polish (a few steps per root, guarded against divergence).
inline void polish(const std::vector<Complex>& c, std::vector<Complex>& z) {
    for (auto& r : z) {
        for (int it = 0; it < 4; ++it) {
            const Complex p = horner(c, r);
            const Complex dp = horner_derivative(c, r);
            if (std::abs(dp) == 0.0) break;
            const Complex step = p / dp;
            if (!std::isfinite(std::abs(step)) || std::abs(step) > 0.5 * (1.0 + std::abs(r)))
                break;
            r -= step;
        }
    }
}

inline RootSet find_roots_complex(std::vector<Complex> c, double tol) {
    while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
    if (c.size() < 2) throw std::invalid_argument("find_roots: degree must be >= 1");
    const int m = static_cast<int>(c.size()) - 1;
    const double scale = coefficient_scale(c);

    // Fixed initialization on a circle slightly inside the root bound,
    // with an irrational angular offset so no guess starts on an axis.
    const double radius = 0.8 * root_bound(c) + 0.1;
    std::vector<Complex> z(m);
    for (int i = 0; i < m; ++i) {
        const double angle = 2.0 * std::numbers::pi * (static_cast<double>(i) + 0.3762) /
                             static_cast<double>(m);
        z[i] = radius * Complex(std::cos(angle), std::sin(angle));
    }

    RootSet out;
    if (aberth(c, z, /*max_iter=*/400, /*tol=*/1e-14)) {
        polish(c, z);
        out.method = "aberth";
    } else {
        z = companion_eigenvalues(c);
        polish(c, z);
        out.method = "companion";
    }

    double res = 0.0;
    for (const auto& r : z) res = std::max(res, std::abs(horner(c, r)));
    out.residual_bound = res / scale;
    out.roots = std::move(z);
    std::sort(out.roots.begin(), out.roots.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });

    if (out.residual_bound > tol) {
        char msg[160];
        std::snprintf(msg, sizeof(msg),
                      "find_roots: residual %.3e above tolerance %.3e (method %s)",
                      out.residual_bound, tol, out.method.c_str());
        throw std::runtime_error(msg);
    }
    return out;
}

/// Enforce exact conjugate pairing for roots of a real polynomial.
inline void symmetrize_conjugate_pairs(std::vector<Complex>& roots, double pair_tol) {
    std::vector<bool> used(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        if (std::abs(roots[i].imag()) <= pair_tol) {
            roots[i] = Complex(roots[i].real(), 0.0);
            used[i] = true;
            continue;
        }
        // Nearest unused candidate to the conjugate.
        std::size_t best = i;
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (j == i || used[j]) continue;
            const double d = std::abs(roots[j] - std::conj(roots[i]));
            if (d < best_dist) {
                best_dist = d;
                best = j;
            }
        }
        if (best != i && best_dist <= 4.0 * pair_tol * (1.0 + std::abs(roots[i]))) {
            const Complex w = 0.5 * (roots[i] + std::conj(roots[best]));
            roots[i] = w;
            roots[best] = std::conj(w);
            used[i] = used[best] = true;
        } else {
            used[i] = true;  // leave unpaired; residual bound already vouches for it
        }
    }
}

}  // namespace detail

/// All roots of a real polynomial.  Complex roots come in conjugate pairs.
inline RootSet find_roots(const RealPolynomial& p, double tol = 1e-8) {
    std::vector<Complex> c(p.coefficients().begin(), p.coefficients().end());
    RootSet out = detail::find_roots_complex(std::move(c), tol);
    const double pair_tol =
        std::max(out.residual_bound, 1e-14) * 10.0 * (1.0 + p.root_bound());
    detail::symmetrize_conjugate_pairs(out.roots, pair_tol);
    return out;
}

/// Roots of P(z) - w for complex w (used for the shifted polynomials P ∓ iε).
inline RootSet find_roots_shifted(const RealPolynomial& p, Complex w, double tol = 1e-8) {
    std::vector<Complex> c(p.coefficients().begin(), p.coefficients().end());
    c[0] -= w;
    return detail::find_roots_complex(std::move(c), tol);
}

/// Companion-matrix roots of P(z) - w; independent of the Aberth route.
inline std::vector<Complex> companion_roots_shifted(const RealPolynomial& p, Complex w) {
    std::vector<Complex> c(p.coefficients().begin(), p.coefficients().end());
    c[0] -= w;
    auto roots = detail::companion_eigenvalues(c);
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

}  // namespace defcalc

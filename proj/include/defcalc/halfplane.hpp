#pragma once

/**
 * @file halfplane.hpp
 * @brief Half-plane root counts of P ∓ iε and the first-order root shift.
 *
 * For a real polynomial P of degree m with simple roots and sufficiently
 * small ε > 0, the roots of P(z) - iε split between the open half-planes as
 * (k, k) for m = 2k and (k, k-1) for m = 2k-1; the sign convention `plus`
 * refers to P_ε^+ = P - iε, `minus` to P_ε^- = P + iε.  A simple real root
 * z0 moves to first order like z0 + iε / P'(z0).
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "defcalc/polynomial.hpp"
#include "defcalc/roots.hpp"

namespace defcalc {

enum class EpsilonSign { plus, minus };  ///< plus: P - iε, minus: P + iε

struct HalfPlaneCount {
    int in_upper = 0;
    int in_lower = 0;
    int on_axis = 0;
    double epsilon = 0.0;
};

/// Width of the band around the real axis inside which roots are reported
/// as on_axis rather than forced into a half-plane.
inline double axis_band(const RealPolynomial& p) { return 1e-12 * p.root_bound(); }

/// Complex roots of P ∓ iε classified by half-plane.
inline HalfPlaneCount halfplane_counts(const RealPolynomial& p, double epsilon, EpsilonSign sign,
                                       double tol = 1e-8) {
    if (!(epsilon > 0)) throw std::invalid_argument("halfplane_counts: epsilon must be > 0");
    const Complex shift = (sign == EpsilonSign::plus) ? Complex(0, epsilon) : Complex(0, -epsilon);
    const RootSet rs = find_roots_shifted(p, shift, tol);
    HalfPlaneCount out;
    out.epsilon = epsilon;
    const double band = axis_band(p);
    for (const auto& r : rs.roots) {
        if (r.imag() > band)
            ++out.in_upper;
        else if (r.imag() < -band)
            ++out.in_lower;
        else
            ++out.on_axis;
    }
    return out;
}

/// Predicted counts for a simple-rooted P with positive leading coefficient:
/// (k,k) for even degree, (k,k-1) resp. (k-1,k) for odd.
inline HalfPlaneCount predicted_counts(int degree, EpsilonSign sign, double epsilon) {
    HalfPlaneCount out;
    out.epsilon = epsilon;
    if (degree % 2 == 0) {
        out.in_upper = out.in_lower = degree / 2;
    } else {
        const int k = (degree + 1) / 2;
        if (sign == EpsilonSign::plus) {
            out.in_upper = k;
            out.in_lower = k - 1;
        } else {
            out.in_upper = k - 1;
            out.in_lower = k;
        }
    }
    return out;
}

/// Minimal pairwise distance of a root multiset.
inline double min_root_separation(const std::vector<Complex>& roots) {
    double sep = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            sep = std::min(sep, std::abs(roots[i] - roots[j]));
    return sep;
}

/// Computable surrogate for "ε sufficiently small":
///   ε_safe = ρ · min_j |P'(z_j)| · sep / 2,
/// with sep the minimal root separation and ρ a safety factor.  Below this
/// threshold the first-order shift ε/|P'| stays well inside each root's
/// separation disk, so no root can reach the axis or a neighbour.
inline double safe_epsilon(const RealPolynomial& p, double rho = 0.1) {
    const RootSet rs = find_roots(p);
    const double sep = min_root_separation(rs.roots);
    double min_dp = std::numeric_limits<double>::infinity();
    for (const auto& r : rs.roots) min_dp = std::min(min_dp, std::abs(p.derivative_at(r)));
    if (!(sep > 0) || !(min_dp > 0))
        throw std::domain_error("safe_epsilon: polynomial has (numerically) multiple roots");
    return rho * min_dp * sep / 2.0;
}

/// First-order predictor for the root of P - iε near a simple real root z0:
/// z0 + iε / P'(z0).  The true root differs by O(ε²).
inline Complex first_order_root_shift(const RealPolynomial& p, double z0, double epsilon,
                                      double tol = 1e-8) {
    const double scale = std::max(p.coefficient_scale(), 1.0);
    const double pz = p(z0);
    const double dpz = p.derivative_at(z0);
    if (std::abs(pz) > tol * scale)
        throw std::invalid_argument("first_order_root_shift: z0 is not a root (|P(z0)| = " +
                                    std::to_string(std::abs(pz)) + ")");
    if (std::abs(dpz) <= tol * scale)
        throw std::domain_error("first_order_root_shift: root is not simple (|P'(z0)| = " +
                                std::to_string(std::abs(dpz)) + ")");
    return Complex(z0, 0.0) + Complex(0.0, epsilon) / dpz;
}

/// Shift p by a constant so all roots become simple.  Returns (p + c, c);
/// c = 0 when p already has well-separated roots.
inline std::pair<RealPolynomial, double> make_simple(const RealPolynomial& p,
                                                     double separation_tol = 1e-4) {
    const double scale = p.root_bound();
    const double sep_needed = separation_tol * scale;
    auto acceptable = [&](const RealPolynomial& q) {
        try {
            const RootSet rs = find_roots(q, 1e-8);
            return min_root_separation(rs.roots) > sep_needed;
        } catch (const std::runtime_error&) {
            return false;  // root finder did not reach tolerance; try another shift
        }
    };
    if (acceptable(p)) return {p, 0.0};
    const double c0 = 1e-3 * std::max(p.coefficient_scale(), 1.0);
    for (int k = 0; k < 40; ++k) {
        for (double s : {+1.0, -1.0}) {
            const double c = s * c0 * std::pow(2.0, k);
            const RealPolynomial q = p.shifted(c);
            if (acceptable(q)) return {q, c};
        }
    }
    throw std::runtime_error("make_simple: no simplifying shift found within budget");
}

/// One tracked root path over an ε grid.
struct RootPath {
    std::vector<Complex> positions;  ///< one entry per grid point
    int initial_halfplane = 0;       ///< +1 upper, -1 lower
    bool stayed_in_halfplane = true;
};

struct TrackReport {
    std::vector<double> eps_grid;
    std::vector<RootPath> paths;
    bool all_confined = true;
};

/// Follow the roots of P ∓ iε across an increasing ε grid by
/// nearest-neighbour continuation, and record their half-planes.
///
/// Throws when two roots approach within the continuation tolerance, with a
/// grid-refinement suggestion; matching ties are broken by lexicographic
/// (Re, Im) order of the candidate roots.
inline TrackReport track_roots(const RealPolynomial& p, EpsilonSign sign,
                               const std::vector<double>& eps_grid) {
    if (eps_grid.empty()) throw std::invalid_argument("track_roots: empty grid");
    for (std::size_t i = 0; i < eps_grid.size(); ++i) {
        if (!(eps_grid[i] > 0) || (i > 0 && eps_grid[i] <= eps_grid[i - 1]))
            throw std::invalid_argument("track_roots: grid must be positive and increasing");
    }

    TrackReport report;
    report.eps_grid = eps_grid;
    const double band = axis_band(p);

    auto roots_at = [&](double eps) {
        const Complex shift =
            (sign == EpsilonSign::plus) ? Complex(0, eps) : Complex(0, -eps);
        return find_roots_shifted(p, shift).roots;  // already (Re, Im)-sorted
    };

    std::vector<Complex> current = roots_at(eps_grid[0]);
    report.paths.resize(current.size());
    for (std::size_t i = 0; i < current.size(); ++i) {
        report.paths[i].positions.push_back(current[i]);
        report.paths[i].initial_halfplane = current[i].imag() > 0 ? +1 : -1;
        if (std::abs(current[i].imag()) <= band)
            throw std::runtime_error(
                "track_roots: root on axis at the first grid point; start below the "
                "safe-epsilon threshold");
    }

    for (std::size_t g = 1; g < eps_grid.size(); ++g) {
        std::vector<Complex> next = roots_at(eps_grid[g]);
        const double cont_tol = 0.5 * min_root_separation(next);
        std::vector<bool> used(next.size(), false);
        for (std::size_t i = 0; i < current.size(); ++i) {
            std::size_t best = next.size();
            double best_d = std::numeric_limits<double>::infinity();
            double second_d = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < next.size(); ++j) {
                if (used[j]) continue;
                const double d = std::abs(next[j] - current[i]);
                if (d < best_d) {
                    second_d = best_d;
                    best_d = d;
                    best = j;
                } else if (d < second_d) {
                    second_d = d;
                }
            }
            if (best == next.size())
                throw std::runtime_error("track_roots: matching exhausted");
            if (best_d > cont_tol && second_d < 2.0 * best_d)
                throw std::runtime_error(
                    "track_roots: ambiguous continuation between eps = " +
                    std::to_string(eps_grid[g - 1]) + " and " + std::to_string(eps_grid[g]) +
                    "; refine the grid in this interval");
            used[best] = true;
            report.paths[i].positions.push_back(next[best]);
            const int hp = next[best].imag() > 0 ? +1 : -1;
            if (hp != report.paths[i].initial_halfplane) {
                report.paths[i].stayed_in_halfplane = false;
                report.all_confined = false;
            }
        }
        for (std::size_t i = 0; i < current.size(); ++i)
            current[i] = report.paths[i].positions.back();
    }
    return report;
}

}  // namespace defcalc

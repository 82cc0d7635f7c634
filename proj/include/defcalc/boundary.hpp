#pragma once

/**
 * @file boundary.hpp
 * @brief Generalized boundary values at singular endpoints.
 *
 * The boundary values are defined as endpoint limits against the two
 * distinguished solutions u1, u2 of the expression:
 *
 *   Bessel family at 0 (gamma in (0,1)):
 *       g~(0)  = lim g(x) / [(2 gamma)^{-1} x^{1/2-gamma}]
 *       g~'(0) = lim [g(x) - g~(0)(2 gamma)^{-1} x^{1/2-gamma}] / x^{1/2+gamma}
 *   gamma = 0:
 *       g~(0)  = lim g(x) / [x^{1/2} ln(1/x)]
 *       g~'(0) = lim [g(x) - g~(0) x^{1/2} ln(1/x)] / x^{1/2}
 *   Legendre at +-1:
 *       g~(+-1)  = lim g(x) / [2^{-1} ln((1-x)/(1+x))]
 *       g~'(+-1) = lim [g(x) - g~(+-1) 2^{-1} ln((1-x)/(1+x))]
 *
 * Near the endpoint g = g~ u1 + g~' u2 + o(u2), so the limits are exactly the
 * coefficients of g against (u1, u2).  They are computed by solving the 2x2
 * interpolation problem on consecutive points of a geometric approach
 * sequence and extrapolating the resulting coefficient sequences (iterated
 * Aitken), which converges at the rate of the o(u2) remainder; the raw
 * quotient of the displayed limit converges only logarithmically and is
 * useless in double precision.  Non-convergence is an error, never a guess.
 */

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace defcalc {

struct BoundaryValue {
    double value = 0.0;
    double error_estimate = 0.0;
};

struct GeneralizedBoundaryValues {
    BoundaryValue g;        ///< g~ at the endpoint
    BoundaryValue g_prime;  ///< g~' at the endpoint
};

namespace detail {

inline std::vector<double> aitken(const std::vector<double>& s) {
    if (s.size() < 3) return s;
    std::vector<double> out;
    for (std::size_t k = 0; k + 2 < s.size(); ++k) {
        const double d2 = s[k + 2] - 2.0 * s[k + 1] + s[k];
        if (d2 == 0.0)
            out.push_back(s[k + 2]);
        else
            out.push_back(s[k + 2] - (s[k + 2] - s[k + 1]) * (s[k + 2] - s[k + 1]) / d2);
    }
    return out;
}

inline BoundaryValue accelerate(const std::vector<double>& seq, double tol,
                                const char* what) {
    std::vector<double> acc = seq;
    for (int sweep = 0; sweep < 2 && acc.size() >= 3; ++sweep) acc = aitken(acc);
    const double value = acc.back();
    const double err = std::abs(acc.back() - acc[acc.size() - 2]);
    const double scale = 1.0 + std::abs(value);
    if (!(err <= tol * scale))
        throw std::runtime_error(std::string("boundary value: ") + what +
                                 " extrapolation did not converge (last delta " +
                                 std::to_string(err) + ")");
    return {value, err};
}

/// Coefficients of g against the model pair (u1, u2) from consecutive points
/// of the approach sequence, then extrapolated.
inline GeneralizedBoundaryValues extract_coefficients(
    const std::function<double(double)>& g, const std::function<double(double)>& u1,
    const std::function<double(double)>& u2, const std::vector<double>& points, double tol) {
    std::vector<double> c1_seq, c2_seq;
    for (std::size_t k = 0; k + 1 < points.size(); ++k) {
        const double xa = points[k], xb = points[k + 1];
        const double a11 = u1(xa), a12 = u2(xa), a21 = u1(xb), a22 = u2(xb);
        const double det = a11 * a22 - a12 * a21;
        if (det == 0.0 || !std::isfinite(det))
            throw std::runtime_error("boundary value: model pair degenerate on the sequence");
        const double ga = g(xa), gb = g(xb);
        if (!std::isfinite(ga) || !std::isfinite(gb))
            throw std::runtime_error("boundary value: non-finite sample near the endpoint");
        c1_seq.push_back((ga * a22 - a12 * gb) / det);
        c2_seq.push_back((a11 * gb - ga * a21) / det);
    }
    GeneralizedBoundaryValues out;
    out.g = accelerate(c1_seq, tol, "g~");
    out.g_prime = accelerate(c2_seq, tol, "g~'");
    return out;
}

inline std::vector<double> geometric_points(double x0, double ratio, int count) {
    std::vector<double> pts;
    double x = x0;
    for (int k = 0; k < count; ++k) {
        pts.push_back(x);
        x *= ratio;
    }
    return pts;
}

}  // namespace detail

/// Boundary values for the Bessel family at x = 0, gamma in [0,1).
inline GeneralizedBoundaryValues boundary_values_bessel(
    const std::function<double(double)>& g, double gamma, double x0 = 1e-2, double tol = 1e-6) {
    if (!(gamma >= 0.0 && gamma < 1.0))
        throw std::invalid_argument("boundary_values_bessel: gamma must lie in [0,1)");
    const auto points = detail::geometric_points(x0, 0.5, 26);
    if (gamma == 0.0) {
        return detail::extract_coefficients(
            g, [](double x) { return std::sqrt(x) * std::log(1.0 / x); },
            [](double x) { return std::sqrt(x); }, points, tol);
    }
    return detail::extract_coefficients(
        g, [gamma](double x) { return std::pow(x, 0.5 - gamma) / (2.0 * gamma); },
        [gamma](double x) { return std::pow(x, 0.5 + gamma); }, points, tol);
}

/// Boundary values for the Legendre expression at +1 or -1.
inline GeneralizedBoundaryValues boundary_values_legendre(
    const std::function<double(double)>& g, int endpoint_sign, double delta0 = 1e-2,
    double tol = 1e-6) {
    if (endpoint_sign != 1 && endpoint_sign != -1)
        throw std::invalid_argument("boundary_values_legendre: endpoint must be +1 or -1");
    const auto deltas = detail::geometric_points(delta0, 0.5, 26);
    std::vector<double> points;
    for (double d : deltas) points.push_back(endpoint_sign > 0 ? 1.0 - d : -1.0 + d);
    return detail::extract_coefficients(
        g, [](double x) { return 0.5 * std::log((1.0 - x) / (1.0 + x)); },
        [](double) { return 1.0; }, points, tol);
}

}  // namespace defcalc

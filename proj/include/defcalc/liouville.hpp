#pragma once

/**
 * @file liouville.hpp
 * @brief Liouville–Green transform of the Chaudhuri–Everitt expression
 *        -d/dx (1/6)(x+1)^4 d/dx + (x+1)^2 on [0,infty) to Schrödinger normal
 *        form, and transport of its solutions.
 *
 * The change of variables
 *     t(x) = 6^{1/2} [1 - (x+1)^{-1}],      u~(t) = 6^{-1/4} (x+1) u(x)
 * maps t(0) = 0, t(infty) = 6^{1/2} and turns tau u = z u into
 *     -u~'' + 8 (6^{1/2} - t)^{-2} u~ = z u~   on [0, 6^{1/2}).
 * The further scaling s = t / 6^{1/2} identifies the result with the
 * Bessel-type expression at alpha = sqrt(33)/2 (alpha^2 - 1/4 = 8) with the
 * spectral parameter scaled by 6.
 */

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "defcalc/expression.hpp"
#include "defcalc/ode.hpp"

namespace defcalc {

struct LiouvilleGreenMap {
    double sqrt6 = std::sqrt(6.0);

    double t_of_x(double x) const { return sqrt6 * (1.0 - 1.0 / (x + 1.0)); }
    double x_of_t(double t) const { return sqrt6 / (sqrt6 - t) - 1.0; }
    double amplitude(double x) const { return std::pow(6.0, -0.25) * (x + 1.0); }

    double t_at_zero() const { return t_of_x(0.0); }
    double t_limit_infinity() const { return sqrt6; }

    /// alpha with alpha^2 - 1/4 equal to the normal-form potential strength 8.
    double alpha_identified() const { return std::sqrt(33.0) / 2.0; }
    double spectral_scale() const { return 6.0; }

    /// The normal-form expression -d^2/dt^2 + 8 (sqrt6 - t)^{-2} on [0, sqrt6).
    /// In the scaled variable s = t/sqrt6 this is bessel_alpha(sqrt(33)/2).
    Expression normal_form() const {
        Expression e;
        e.name = "liouville_green(chaudhuri_everitt)";
        e.n = 1;
        // 8 (sqrt6 - t)^{-2} = (8/6) (1 - t/sqrt6)^{-2}; expressed directly via
        // a callback since the symbolic class carries (1-x) rather than
        // (sqrt6 - t) factors.
        const double s6 = sqrt6;
        e.p = {Coefficient::one(),
               Coefficient([s6](double t) { return 8.0 / ((s6 - t) * (s6 - t)); }, 0)};
        e.interval = {0.0, s6, EndpointKind::regular, EndpointKind::singular};
        return e;
    }
};

inline LiouvilleGreenMap liouville_green(const Expression& source) {
    if (source.name != "chaudhuri_everitt")
        throw std::invalid_argument("liouville_green: expects the chaudhuri_everitt builder");
    return LiouvilleGreenMap{};
}

struct TransportCheck {
    std::vector<double> s_grid;                    ///< scaled variable s = t/sqrt6
    std::vector<std::complex<double>> transported; ///< u~(s) from the CE solution
    std::vector<std::complex<double>> reference;   ///< independent bessel_alpha solve
    double max_residual = 0.0;                     ///< max |transported - reference| / scale
};

namespace detail {

/// Solve -v'' + q v = lambda v with q from an order-2 expression (p0 = 1),
/// reporting v on the given grid; initial data (v, v') at grid.front().
inline std::vector<std::array<std::complex<double>, 2>> solve_schroedinger(
    const Expression& e, std::complex<double> lambda, const std::vector<double>& grid,
    std::complex<double> v0, std::complex<double> dv0, double rtol = 1e-12) {
    std::vector<std::array<std::complex<double>, 2>> out;
    OdeState y;
    y.dim = 2;
    y[0] = v0;
    y[1] = dv0;
    out.push_back({y[0], y[1]});
    auto rhs = [&](double x, const OdeState& s, OdeState& ds) {
        ds[0] = s[1];
        ds[1] = (e.p[1](x) - lambda * e.weight(x)) * s[0];
    };
    for (std::size_t k = 1; k < grid.size(); ++k) {
        integrate_dopri5(rhs, grid[k - 1], grid[k], y, rtol, 1e-14);
        out.push_back({y[0], y[1]});
    }
    return out;
}

}  // namespace detail

/// Solve the Chaudhuri–Everitt equation tau u = z u from x = 0, transport the
/// solution through the Liouville–Green map onto the s-grid, and compare with
/// an independent integration of the bessel_alpha(sqrt33/2) equation at
/// spectral parameter 6z started from the transported initial data.
inline TransportCheck transport_solution(std::complex<double> z, double x_max = 40.0,
                                         int grid_points = 60,
                                         std::complex<double> u0 = 1.0,
                                         std::complex<double> du0 = 0.0) {
    const Expression ce = chaudhuri_everitt();
    const LiouvilleGreenMap map = liouville_green(ce);

    // Geometric-ish x grid: dense early, stretching to x_max.
    std::vector<double> xs;
    for (int k = 0; k < grid_points; ++k) {
        const double f = static_cast<double>(k) / (grid_points - 1);
        xs.push_back(std::expm1(f * std::log1p(x_max)));
    }

    // CE integration: state (u, u'); -(1/6)((x+1)^4 u')' + (x+1)^2 u = z u.
    OdeState y;
    y.dim = 2;
    y[0] = u0;
    y[1] = du0;
    auto rhs = [&](double x, const OdeState& s, OdeState& ds) {
        const double xp = x + 1.0;
        const double p0 = xp * xp * xp * xp / 6.0;
        const double dp0 = 4.0 * xp * xp * xp / 6.0;
        ds[0] = s[1];
        ds[1] = ((xp * xp - z) * s[0] - dp0 * s[1]) / p0;
    };

    TransportCheck check;
    std::vector<std::complex<double>> u_vals, du_vals;
    u_vals.push_back(y[0]);
    du_vals.push_back(y[1]);
    for (std::size_t k = 1; k < xs.size(); ++k) {
        integrate_dopri5(rhs, xs[k - 1], xs[k], y, 1e-12, 1e-14);
        u_vals.push_back(y[0]);
        du_vals.push_back(y[1]);
    }

    // Transport: u~(t) = 6^{-1/4}(x+1)u; d u~/dt = 6^{-3/4}(x+1)^2 [u + (x+1)u'].
    const double s6 = map.sqrt6;
    std::vector<std::complex<double>> ut(xs.size()), dut(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const double xp = xs[k] + 1.0;
        ut[k] = std::pow(6.0, -0.25) * xp * u_vals[k];
        dut[k] = std::pow(6.0, -0.75) * xp * xp * (u_vals[k] + xp * du_vals[k]);
        check.s_grid.push_back(map.t_of_x(xs[k]) / s6);
    }
    check.transported = ut;

    // Independent reference: bessel_alpha(sqrt33/2) at spectral parameter 6z,
    // in the scaled variable s (d/dt = (1/sqrt6) d/ds).
    const Expression bessel = bessel_alpha(map.alpha_identified());
    const auto ref = detail::solve_schroedinger(bessel, 6.0 * z, check.s_grid, ut[0],
                                                s6 * dut[0]);
    double scale = 0.0;
    for (const auto& v : ut) scale = std::max(scale, std::abs(v));
    check.reference.reserve(ref.size());
    for (std::size_t k = 0; k < ref.size(); ++k) {
        check.reference.push_back(ref[k][0]);
        check.max_residual =
            std::max(check.max_residual, std::abs(ref[k][0] - ut[k]) / scale);
    }
    return check;
}

}  // namespace defcalc

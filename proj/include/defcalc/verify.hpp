#pragma once

/**
 * @file verify.hpp
 * @brief The reproduction suite: every published index/coefficient fact this
 *        library computes, organized as filterable claims with expected and
 *        observed values.
 *
 * Each claim produces one or more check rows; failures are collected, never
 * fatal mid-run.  All randomness is seeded, so repeated runs are identical.
 */

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "defcalc/boundary.hpp"
#include "defcalc/channels.hpp"
#include "defcalc/expression.hpp"
#include "defcalc/halfplane.hpp"
#include "defcalc/index_calculus.hpp"
#include "defcalc/kernel_counts.hpp"
#include "defcalc/liouville.hpp"
#include "defcalc/power_expansion.hpp"
#include "defcalc/report.hpp"
#include "defcalc/stirling.hpp"
#include "defcalc/weyl.hpp"

namespace defcalc::verify {

struct Claim {
    std::string id;
    std::string summary;
    std::function<std::vector<CheckRow>()> run;
};

namespace detail {

/// Multiplier applied to every numeric tolerance (the CLI --tol override).
inline double& tolerance_scale() {
    static double scale = 1.0;
    return scale;
}

inline CheckRow row(std::string claim, std::string expected, std::string observed,
                    double tol = 0.0) {
    CheckRow r;
    r.claim = std::move(claim);
    r.expected = std::move(expected);
    r.observed = std::move(observed);
    r.tolerance = tol;
    r.pass = r.expected == r.observed;
    return r;
}

inline CheckRow row_num(std::string claim, double expected, double observed, double tol) {
    CheckRow r;
    r.claim = std::move(claim);
    r.expected = format_double(expected, 6);
    r.observed = format_double(observed, 6);
    r.tolerance = tol * tolerance_scale();
    r.pass = std::abs(observed - expected) <= r.tolerance;
    return r;
}

inline CheckRow row_bound(std::string claim, double observed, double bound) {
    CheckRow r;
    r.claim = std::move(claim);
    const double b = bound * tolerance_scale();
    r.expected = "<= " + format_double(b, 6);
    r.observed = format_double(observed, 6);
    r.tolerance = b;
    r.pass = observed <= b;
    return r;
}

inline std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

inline const double kAlpha33 = std::sqrt(33.0) / 2.0;

/// Deficiency indices plus the worst exponent-fit confidence halfwidth over
/// the finite endpoints (the pure-power regime where the threshold applies).
struct IndexRun {
    DefectPair indices{0, 0};
    double max_finite_ci = 0.0;
};

inline IndexRun run_indices(const Expression& e) {
    const ClassificationReport rep = deficiency_indices_minimal(e);
    IndexRun out;
    out.indices = rep.indices;
    const auto scan = [&](const EndpointClassification& cls, bool infinite) {
        if (infinite) return;
        for (const auto& v : cls.verdicts)
            out.max_finite_ci = std::max(out.max_finite_ci, v.evidence.ci_halfwidth);
    };
    scan(rep.left, e.interval.a_infinite());
    scan(rep.right, e.interval.b_infinite());
    return out;
}

// --- claim bodies -----------------------------------------------------------

inline std::vector<CheckRow> claim_limit3() {
    std::vector<CheckRow> rows;
    const std::vector<double> xs = [] {
        std::vector<double> v;
        for (int i = 0; i < 16; ++i) v.push_back(0.05 + 0.85 * i / 15.0);
        return v;
    }();
    for (double alpha : {1.0, 2.0, 2.5, kAlpha33}) {
        const std::string tag = "limit3/alpha=" + fmt(alpha);
        rows.push_back(row(tag + "/order2-kernel", "1", std::to_string(kernel_l2_count(2, alpha))));
        rows.push_back(row(tag + "/order4-kernel", "3", std::to_string(kernel_l2_count(4, alpha))));
        rows.push_back(row(tag + "/iterated-square", "2",
                           std::to_string(iterated_square_kernel_count(alpha))));
        // numeric cross-validation: the kernel exponents annihilate the expression
        const Expression e4 = bessel4_alpha(alpha);
        double worst = 0.0;
        for (const auto& ke : bessel_kernel_exponents(4, alpha)) {
            if (alpha == 1.0 && ke.exponent == 1.5) continue;  // degenerate double exponent
            worst = std::max(worst, kernel_residual(e4, ke.exponent, xs));
        }
        rows.push_back(row_bound(tag + "/kernel-residual", worst, 1e-8));
    }
    return rows;
}

inline std::vector<CheckRow> claim_legendre_indices() {
    const IndexRun r = run_indices(legendre());
    return {row("legendre-indices", "(2,2)", r.indices.str()),
            row_bound("legendre-indices/fit-ci", r.max_finite_ci, 0.2)};
}

inline std::vector<CheckRow> claim_hermite_indices() {
    const IndexRun r = run_indices(hermite());
    return {row("hermite-indices", "(0,0)", r.indices.str())};
}

inline std::vector<CheckRow> claim_laguerre_table() {
    std::vector<CheckRow> rows;
    for (double alpha : {-0.5, 0.0, 0.5, 1.0, 2.0}) {
        const IndexRun r = run_indices(laguerre(alpha));
        const std::string expected = alpha < 1.0 ? "(1,1)" : "(0,0)";
        rows.push_back(row("laguerre-table/alpha=" + fmt(alpha), expected, r.indices.str()));
        rows.push_back(
            row_bound("laguerre-table/alpha=" + fmt(alpha) + "/fit-ci", r.max_finite_ci, 0.2));
    }
    return rows;
}

inline std::vector<CheckRow> claim_bessel_gamma_table() {
    std::vector<CheckRow> rows;
    for (double gamma : {0.0, 0.5, 0.99, 1.0, 2.0}) {
        const IndexRun r = run_indices(bessel_gamma(gamma));
        const std::string expected = gamma < 1.0 ? "(1,1)" : "(0,0)";
        rows.push_back(row("bessel-gamma-table/gamma=" + fmt(gamma), expected, r.indices.str()));
        rows.push_back(
            row_bound("bessel-gamma-table/gamma=" + fmt(gamma) + "/fit-ci", r.max_finite_ci, 0.2));
    }
    return rows;
}

inline std::vector<CheckRow> claim_jacobi_table() {
    std::vector<CheckRow> rows;
    for (double alpha : {-0.5, 0.5, 2.0}) {
        for (double beta : {-0.5, 0.5, 2.0}) {
            const int expected = (alpha < 1.0 ? 1 : 0) + (beta < 1.0 ? 1 : 0);
            const IndexRun r = run_indices(jacobi(alpha, beta));
            const std::string tag =
                "jacobi-table/alpha=" + fmt(alpha) + ",beta=" + fmt(beta);
            rows.push_back(row(tag,
                               DefectPair{static_cast<std::uint64_t>(expected),
                                          static_cast<std::uint64_t>(expected)}
                                   .str(),
                               r.indices.str()));
            rows.push_back(row_bound(tag + "/fit-ci", r.max_finite_ci, 0.2));
        }
    }
    return rows;
}

inline std::vector<CheckRow> claim_power_formulas() {
    std::vector<CheckRow> rows;
    struct Case {
        std::string name;
        Expression expr;
        std::uint64_t displayed_base;  ///< displayed m-power indices are m * this
    };
    // the full roster of the index tables
    std::vector<Case> cases;
    cases.push_back({"legendre", legendre(), 2});
    cases.push_back({"hermite", hermite(), 0});
    for (double alpha : {-0.5, 0.0, 0.5, 1.0, 2.0})
        cases.push_back({"laguerre(" + fmt(alpha) + ")", laguerre(alpha),
                         alpha < 1.0 ? 1ull : 0ull});
    for (double gamma : {0.0, 0.5, 0.99, 1.0, 2.0})
        cases.push_back({"bessel-gamma(" + fmt(gamma) + ")", bessel_gamma(gamma),
                         gamma < 1.0 ? 1ull : 0ull});
    for (double alpha : {-0.5, 0.5, 2.0})
        for (double beta : {-0.5, 0.5, 2.0})
            cases.push_back(
                {"jacobi(" + fmt(alpha) + "," + fmt(beta) + ")", jacobi(alpha, beta),
                 static_cast<std::uint64_t>((alpha < 1.0 ? 1 : 0) + (beta < 1.0 ? 1 : 0))});
    for (const auto& c : cases) {
        const DefectPair base = run_indices(c.expr).indices;
        for (std::uint64_t m = 1; m <= 5; ++m)
            rows.push_back(row("power-formulas/" + c.name + "/m=" + std::to_string(m),
                               DefectPair{m * c.displayed_base, m * c.displayed_base}.str(),
                               power_indices(base, m).str()));
    }
    // synthetic limit-circle/limit-circle cases of order 2n
    for (std::uint64_t n : {1ull, 2ull}) {
        const DefectPair base{2 * n, 2 * n};
        for (std::uint64_t m = 1; m <= 5; ++m)
            rows.push_back(row("power-formulas/synthetic-order" + std::to_string(2 * n) +
                                   "/m=" + std::to_string(m),
                               DefectPair{2 * m * n, 2 * m * n}.str(),
                               power_indices(base, m).str()));
    }
    return rows;
}

inline std::vector<CheckRow> claim_halfplane_counts() {
    std::vector<CheckRow> rows;
    std::mt19937 rng(20240828);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    std::uniform_int_distribution<int> deg(2, 12);
    int count_ok = 0, companion_ok = 0, total = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int m = deg(rng);
        std::vector<double> c(static_cast<std::size_t>(m) + 1);
        for (auto& v : c) v = coef(rng);
        if (std::abs(c.back()) < 0.2) c.back() = c.back() < 0 ? -1.0 : 1.0;
        RealPolynomial p(std::move(c));
        if (p.leading_coefficient() < 0) {
            auto cs = p.coefficients();
            for (auto& v : cs) v = -v;
            p = RealPolynomial(std::move(cs));
        }
        const auto [simple, shift] = make_simple(p);
        const double eps = 0.5 * safe_epsilon(simple);
        ++total;
        const auto plus = halfplane_counts(simple, eps, EpsilonSign::plus);
        const auto minus = halfplane_counts(simple, eps, EpsilonSign::minus);
        const auto want_plus = predicted_counts(simple.degree(), EpsilonSign::plus, eps);
        const auto want_minus = predicted_counts(simple.degree(), EpsilonSign::minus, eps);
        if (plus.in_upper == want_plus.in_upper && plus.in_lower == want_plus.in_lower &&
            plus.on_axis == 0 && minus.in_upper == want_minus.in_upper &&
            minus.in_lower == want_minus.in_lower && minus.on_axis == 0)
            ++count_ok;
        // independent companion-matrix count
        const auto oracle = companion_roots_shifted(simple, Complex(0, eps));
        int up = 0, down = 0;
        const double band = axis_band(simple);
        for (const auto& r : oracle) (r.imag() > band ? up : down)++;
        if (up == want_plus.in_upper && down == want_plus.in_lower) ++companion_ok;
    }
    rows.push_back(row("halfplane-counts/predictions", std::to_string(total) + "/200 ok",
                       std::to_string(count_ok) + "/200 ok"));
    rows.push_back(row("halfplane-counts/companion", std::to_string(total) + "/200 ok",
                       std::to_string(companion_ok) + "/200 ok"));

    // quadratic decay of the first-order shift predictor
    std::mt19937 rng2(1123581321);
    std::uniform_real_distribution<double> rootd(-2.5, 2.5);
    int ratio_cases = 0, ratio_ok = 0;
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<double> roots(4);
        for (auto& r : roots) r = rootd(rng2);
        std::sort(roots.begin(), roots.end());
        bool separated = true;
        for (std::size_t i = 0; i + 1 < roots.size(); ++i)
            if (roots[i + 1] - roots[i] < 0.3) separated = false;
        if (!separated) continue;
        const RealPolynomial p = RealPolynomial::from_roots(roots);
        const double eps0 = 0.02 * safe_epsilon(p);
        for (double z0 : roots) {
            // skip near-inflection roots: the eps^2 term would vanish
            const double curvature = std::abs(p.derivative().derivative_at(z0));
            if (curvature < 1e-3) continue;
            double err0 = 0.0, err1 = 0.0;
            for (int half : {0, 1}) {
                const double eps = half ? eps0 / 2.0 : eps0;
                const Complex predicted = first_order_root_shift(p, z0, eps);
                const auto rs = find_roots_shifted(p, Complex(0, eps), 1e-8);
                double best = 1e300;
                for (const auto& r : rs.roots) best = std::min(best, std::abs(r - predicted));
                (half ? err1 : err0) = best;
            }
            if (err1 < 1e-13) continue;  // beneath the numerical floor
            ++ratio_cases;
            const double ratio = err0 / err1;
            if (ratio > 2.0 && ratio < 8.0) ++ratio_ok;
        }
    }
    rows.push_back(row("halfplane-counts/shift-quadratic",
                       std::to_string(ratio_cases) + " ratios in [2,8]",
                       std::to_string(ratio_ok) + " ratios in [2,8]"));
    rows.push_back(row("halfplane-counts/shift-sample-size",
                       "at least 30 usable ratios",
                       ratio_cases >= 30 ? "at least 30 usable ratios"
                                         : std::to_string(ratio_cases) + " usable ratios"));
    return rows;
}

inline std::vector<CheckRow> claim_stirling_oracles() {
    std::vector<CheckRow> rows;
    {
        std::vector<std::vector<Rational>> rec(21, std::vector<Rational>(22, 0));
        rec[1][1] = 1;
        for (unsigned m = 2; m <= 20; ++m)
            for (unsigned j = 1; j <= m; ++j)
                rec[m][j] = Rational(static_cast<int>(j)) * rec[m - 1][j] + rec[m - 1][j - 1];
        bool ok = true;
        for (unsigned m = 1; m <= 20 && ok; ++m)
            for (unsigned j = 1; j <= m && ok; ++j)
                ok = stirling2(m, j) == rec[m][j] && is_integer(stirling2(m, j));
        rows.push_back(row("stirling-oracles/classical-m20", "sum == recurrence",
                           ok ? "sum == recurrence" : "mismatch"));
    }
    {
        std::vector<std::vector<Rational>> rec(16, std::vector<Rational>(17, 0));
        rec[1][1] = 1;
        for (unsigned m = 2; m <= 15; ++m)
            for (unsigned j = 1; j <= m; ++j)
                rec[m][j] = Rational(static_cast<int>(j * (j + 1))) * rec[m - 1][j] +
                            rec[m - 1][j - 1];
        bool ok = true;
        for (unsigned m = 1; m <= 15 && ok; ++m)
            for (unsigned j = 1; j <= m && ok; ++j)
                ok = legendre_stirling(m, j) == rec[m][j] && is_integer(legendre_stirling(m, j));
        rows.push_back(row("stirling-oracles/legendre-m15", "sum == recurrence",
                           ok ? "sum == recurrence" : "mismatch"));
    }
    {
        bool ok = true;
        for (unsigned n = 1; n <= 10 && ok; ++n)
            for (unsigned j = 1; j <= n && ok; ++j)
                ok = jacobi_stirling(n, j, 0, 0) == legendre_stirling(n, j);
        rows.push_back(row("stirling-oracles/jacobi-at-origin",
                           "PS^(0,0)(n,j) == PS(n,j) for n <= 10",
                           ok ? "PS^(0,0)(n,j) == PS(n,j) for n <= 10" : "mismatch"));
    }
    return rows;
}

inline std::vector<CheckRow> claim_mfold_oracle() {
    std::vector<CheckRow> rows;
    struct Fixture {
        ClassicalFamily family;
        const char* name;
        Rational alpha, beta;
        double lo, hi;
    };
    const std::vector<Fixture> fixtures{
        {ClassicalFamily::legendre, "legendre", 0, 0, -0.9, 0.9},
        {ClassicalFamily::laguerre, "laguerre(1/2)", Rational(1, 2), 0, 0.3, 8.0},
        {ClassicalFamily::hermite, "hermite", 0, 0, -2.5, 2.5},
        {ClassicalFamily::jacobi, "jacobi(1/2,3/2)", Rational(1, 2), Rational(3, 2), -0.9, 0.9},
    };
    const std::vector<std::vector<double>> polys{
        {1, 1}, {0, 0, 1}, {0, -1, 0, 1}, {0, 0, 0, 0, 1}, {0, 0, -1, 0, 0, 1}};
    for (const auto& fx : fixtures) {
        double worst = 0.0;
        for (unsigned m : {2u, 3u, 4u}) {
            const Expression base = base_expression(fx.family, static_cast<double>(fx.alpha),
                                                    static_cast<double>(fx.beta));
            const PowerExpansion pe = power_expansion(fx.family, m, fx.alpha, fx.beta);
            for (const auto& coeffs : polys) {
                std::vector<ExpMonomial> terms;
                for (std::size_t k = 0; k < coeffs.size(); ++k)
                    if (coeffs[k] != 0.0)
                        terms.push_back({coeffs[k], static_cast<double>(k), 0, 0, 0, 0});
                const SymFunc iterated = apply_symbolic_power(base, SymFunc(terms), m);
                const auto fd = make_polynomial(coeffs, static_cast<int>(2 * m));
                for (int i = 0; i < 20; ++i) {
                    const double x = fx.lo + (fx.hi - fx.lo) * (i + 0.5) / 20.0;
                    const double a = apply_expansion(pe, fd, x);
                    const double b = iterated.evaluate(x);
                    worst = std::max(worst, std::abs(a - b) / (1.0 + std::abs(b)));
                }
            }
        }
        rows.push_back(
            row_bound(std::string("mfold-oracle/") + fx.name + "/m234", worst, 1e-8));
    }
    return rows;
}

inline std::vector<CheckRow> claim_compose_square() {
    std::vector<CheckRow> rows;
    for (double alpha : {1.0, 1.5, 2.0, kAlpha33}) {
        const Expression sq = compose_square(bessel_alpha(alpha));
        const Expression closed = bessel4_alpha(alpha);
        double worst = 0.0;
        for (int i = 1; i <= 50; ++i) {
            const double x = i / 51.0 * 0.95;
            for (int k = 0; k <= 2; ++k) {
                const double a = sq.p[static_cast<std::size_t>(k)](x);
                const double b = closed.p[static_cast<std::size_t>(k)](x);
                worst = std::max(worst, std::abs(a - b) / (1.0 + std::abs(b)));
            }
        }
        rows.push_back(row_bound("compose-square/alpha=" + fmt(alpha), worst, 1e-12));
    }
    return rows;
}

inline std::vector<CheckRow> claim_liouville_green() {
    std::vector<CheckRow> rows;
    const LiouvilleGreenMap map = liouville_green(chaudhuri_everitt());
    rows.push_back(row_num("liouville-green/t(0)", 0.0, map.t_of_x(0.0), 1e-10));
    rows.push_back(row_num("liouville-green/t(inf)", std::sqrt(6.0), map.t_of_x(1e12),
                           1e-10 * std::sqrt(6.0)));
    rows.push_back(
        row_num("liouville-green/alpha", kAlpha33, map.alpha_identified(), 1e-14));
    for (const std::complex<double> z : {std::complex<double>(0, 1), std::complex<double>(2.5, 0)}) {
        const TransportCheck check = transport_solution(z);
        std::ostringstream tag;
        tag << "liouville-green/transport-z=" << z.real() << "+" << z.imag() << "i";
        rows.push_back(row_bound(tag.str(), check.max_residual, 1e-6));
    }
    return rows;
}

inline std::vector<CheckRow> claim_pde_decomposition() {
    std::vector<CheckRow> rows;
    const auto rep = decompose(3, 2, 0.0, 3);
    rows.push_back(row("pde-decomposition/total", "(3,3)", rep.total.str()));
    rows.push_back(row("pde-decomposition/m=2", "(6,6)", rep.power_table[1].second.str()));
    rows.push_back(row("pde-decomposition/m=3", "(9,9)", rep.power_table[2].second.str()));
    for (int dim : {2, 3}) {
        for (int big_l : {0, 1}) {
            for (int ell = 0; ell <= big_l + 1; ++ell) {
                const ChannelSpec spec{dim, ell, big_l, 0.0};
                const auto numeric = deficiency_indices_minimal(channel_expression(spec)).indices;
                rows.push_back(row("pde-decomposition/channel-n" + std::to_string(dim) + "-l" +
                                       std::to_string(ell) + "-L" + std::to_string(big_l),
                                   channel_indices(spec).str(), numeric.str()));
            }
        }
    }
    return rows;
}

inline std::vector<CheckRow> claim_dirichlet_powers() {
    std::vector<CheckRow> rows;
    for (std::uint64_t m = 1; m <= 5; ++m)
        rows.push_back(row("dirichlet-powers/m=" + std::to_string(m),
                           DefectPair{m, m}.str(), dirichlet_perturbation_indices(m).str()));
    return rows;
}

inline std::vector<CheckRow> claim_solution_facts() {
    std::vector<CheckRow> rows;
    for (double alpha : {1.0, 2.0, kAlpha33}) {
        const Expression e = bessel_alpha(alpha);
        const auto ub1 = make_u_beta(0.5 + alpha);
        const auto ub2 = make_u_beta(0.5 - alpha);
        const auto ub3 = make_u_beta(2.5 + alpha);
        const auto ub4 = make_u_beta(2.5 - alpha);
        double worst3 = 0.0, worst4 = 0.0;
        for (int i = 0; i < 20; ++i) {
            const double x = 0.04 + 0.9 * (i + 0.5) / 20.0;
            const double want3 = -4.0 * (1 + alpha) * ub1(x, 0);
            const double want4 = -4.0 * (1 - alpha) * ub2(x, 0);
            worst3 = std::max(worst3, std::abs(apply(e, ub3, x) - want3) /
                                          (1.0 + std::abs(want3)));
            worst4 = std::max(worst4, std::abs(apply(e, ub4, x) - want4) /
                                          (1.0 + std::abs(want4)));
        }
        rows.push_back(row_bound("solution-facts/alpha=" + fmt(alpha) + "/b3", worst3, 1e-10));
        rows.push_back(row_bound("solution-facts/alpha=" + fmt(alpha) + "/b4", worst4, 1e-10));
    }
    return rows;
}

}  // namespace detail

/// All claims, sorted by id.
inline const std::vector<Claim>& registry() {
    static const std::vector<Claim> claims = [] {
        std::vector<Claim> c{
            {"bessel-gamma-table", "Bessel family indices over the gamma grid",
             detail::claim_bessel_gamma_table},
            {"compose-square", "symbolic square of the Bessel expression vs closed form",
             detail::claim_compose_square},
            {"dirichlet-powers", "powers of the rank-one Dirichlet restriction",
             detail::claim_dirichlet_powers},
            {"halfplane-counts", "half-plane root counts and the first-order shift",
             detail::claim_halfplane_counts},
            {"hermite-indices", "Hermite minimal operator indices",
             detail::claim_hermite_indices},
            {"jacobi-table", "Jacobi indices over the 3x3 parameter grid",
             detail::claim_jacobi_table},
            {"laguerre-table", "Laguerre indices over the alpha grid",
             detail::claim_laguerre_table},
            {"legendre-indices", "Legendre minimal operator indices",
             detail::claim_legendre_indices},
            {"limit3", "kernel counts of the Bessel-type expressions on (0,1)",
             detail::claim_limit3},
            {"liouville-green", "normal-form transform of the Chaudhuri-Everitt expression",
             detail::claim_liouville_green},
            {"mfold-oracle", "power expansions equal iterated application",
             detail::claim_mfold_oracle},
            {"pde-decomposition", "spherical channel decomposition and cross-validation",
             detail::claim_pde_decomposition},
            {"power-formulas", "deficiency indices of operator powers",
             detail::claim_power_formulas},
            {"solution-facts", "Bessel kernel-adjacent image identities",
             detail::claim_solution_facts},
            {"stirling-oracles", "explicit sums vs recurrences, Jacobi-Legendre identity",
             detail::claim_stirling_oracles},
        };
        return c;
    }();
    return claims;
}

/// Run all claims whose id contains `filter` (all claims when empty).
/// `tol_scale` multiplies every numeric tolerance.
inline RunReport run_verify(const std::string& filter = "", double tol_scale = 1.0) {
    detail::tolerance_scale() = tol_scale;
    RunReport report;
    report.command = "verify";
    report.parameters.emplace_back("filter", filter);
    if (tol_scale != 1.0)
        report.parameters.emplace_back("tol_scale", format_double(tol_scale, 6));
    int claims_run = 0;
    for (const auto& claim : registry()) {
        if (!filter.empty() && claim.id.find(filter) == std::string::npos) continue;
        ++claims_run;
        try {
            auto rows = claim.run();
            report.checks.insert(report.checks.end(), rows.begin(), rows.end());
        } catch (const std::exception& ex) {
            CheckRow r;
            r.claim = claim.id + "/exception";
            r.expected = "no exception";
            r.observed = ex.what();
            r.pass = false;
            report.checks.push_back(r);
        }
    }
    report.results.set("claims_run", Json::integer(claims_run));
    report.results.set("checks_run", Json::integer(static_cast<long long>(report.checks.size())));
    int failures = 0;
    for (const auto& c : report.checks)
        if (!c.pass) ++failures;
    report.results.set("failures", Json::integer(failures));
    detail::tolerance_scale() = 1.0;
    return report;
}

}  // namespace defcalc::verify

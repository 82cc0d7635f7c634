#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "defcalc/expression.hpp"
#include "defcalc/kernel_counts.hpp"
#include "defcalc/liouville.hpp"
#include "defcalc/power_expansion.hpp"

using namespace defcalc;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<double> interior_samples(double lo, double hi, int count = 20) {
    std::vector<double> xs;
    for (int i = 0; i < count; ++i)
        xs.push_back(lo + (hi - lo) * (i + 0.5) / count);
    return xs;
}

const double kSqrt33Half = std::sqrt(33.0) / 2.0;

}  // namespace

TEST_CASE("classical builders carry the stated data") {
    const Expression b = bessel_alpha(2.0);
    CHECK(b.order() == 2);
    CHECK(b.interval.a == 0.0);
    CHECK(b.interval.b == 1.0);
    CHECK(b.p[0](0.3) == 1.0);
    CHECK_THAT(b.p[1](0.5), WithinAbs((4.0 - 0.25) / 0.25, 1e-12));
    CHECK(b.interval.a_kind == EndpointKind::regular);
    CHECK(b.interval.b_kind == EndpointKind::singular);

    const Expression leg = legendre();
    CHECK_THAT(leg.p[0](0.5), WithinAbs(0.75, 1e-15));
    CHECK(leg.weight(0.3) == 1.0);

    const Expression her = hermite();
    CHECK_THAT(her.weight(1.5), WithinAbs(std::exp(-2.25), 1e-15));
    CHECK(her.interval.a_infinite());
    CHECK(her.interval.b_infinite());

    const Expression lag = laguerre(0.5);
    CHECK_THAT(lag.weight(2.0), WithinAbs(std::pow(2.0, 0.5) * std::exp(-2.0), 1e-15));
    CHECK_THAT(lag.p[0](2.0), WithinAbs(std::pow(2.0, 1.5) * std::exp(-2.0), 1e-15));

    CHECK_THROWS_AS(bessel_alpha(0.5), std::invalid_argument);
    CHECK_THROWS_AS(laguerre(-1.5), std::invalid_argument);
    CHECK_THROWS_AS(jacobi(0.5, -2.0), std::invalid_argument);
    CHECK_THROWS_AS(build_classical("unknown"), std::invalid_argument);
}

TEST_CASE("quasi-derivative ladder of the fourth-order family") {
    const double alpha = 1.7;
    const Expression e = bessel4_alpha(alpha);
    const auto g = make_polynomial({0, 0, 0, 1}, 8);  // g = x^3
    const double x = 0.4;
    const auto ladder = quasi_derivatives(e, g, x);
    REQUIRE(ladder.size() == 5);
    CHECK_THAT(ladder[0], WithinAbs(x * x * x, 1e-14));
    CHECK_THAT(ladder[1], WithinAbs(3 * x * x, 1e-14));
    CHECK_THAT(ladder[2], WithinAbs(6 * x, 1e-14));
    const double expected3 =
        (2 * alpha * alpha - 0.5) / ((1 - x) * (1 - x)) * (3 * x * x) - 6.0;
    CHECK_THAT(ladder[3], WithinAbs(expected3, 1e-12));
}

TEST_CASE("Legendre ladder on constants and the identity") {
    const Expression leg = legendre();
    const auto one = make_polynomial({1}, 4);
    const auto ladder = quasi_derivatives(leg, one, 0.2);
    CHECK_THAT(ladder[0], WithinAbs(1.0, 1e-15));
    CHECK_THAT(ladder[1], WithinAbs(0.0, 1e-15));
    CHECK_THAT(ladder[2], WithinAbs(0.0, 1e-15));

    const auto ident = make_polynomial({0, 1}, 4);
    CHECK_THAT(apply(leg, ident, 0.3), WithinAbs(0.6, 1e-13));
}

TEST_CASE("Bessel-type kernel relations") {
    for (double alpha : {1.0, 2.0, kSqrt33Half}) {
        const Expression e2 = bessel_alpha(alpha);
        const auto xs = interior_samples(0.05, 0.9);
        const auto ub1 = make_u_beta(0.5 + alpha);
        const auto ub2 = make_u_beta(0.5 - alpha);
        const auto ub3 = make_u_beta(2.5 + alpha);
        const auto ub4 = make_u_beta(2.5 - alpha);
        for (double x : xs) {
            const double scale = std::pow(1.0 - x, alpha - 1.5);
            CHECK_THAT(apply(e2, ub1, x) / scale, WithinAbs(0.0, 1e-11));
            CHECK_THAT(apply(e2, ub3, x), WithinAbs(-4.0 * (1 + alpha) * ub1(x, 0), 1e-10));
            CHECK_THAT(apply(e2, ub4, x), WithinAbs(-4.0 * (1 - alpha) * ub2(x, 0),
                                                    1e-10 * (1.0 + std::abs(ub2(x, 0)))));
        }
        // all four exponents annihilate the fourth-order expression
        const Expression e4 = bessel4_alpha(alpha);
        for (double b : {0.5 + alpha, 0.5 - alpha, 2.5 + alpha, 2.5 - alpha}) {
            CHECK(kernel_residual(e4, b, xs) < 1e-10);
        }
    }
    // degenerate direction at alpha = 1: (1-x)^{3/2} ln(1-x)
    const Expression e4 = bessel4_alpha(1.0);
    const auto ulog = make_u_beta_log(1.5);
    for (double x : interior_samples(0.05, 0.9)) {
        const double scale = 1.0 + std::abs(ulog(x, 4));
        CHECK_THAT(apply(e4, ulog, x) / scale, WithinAbs(0.0, 1e-10));
    }
}

TEST_CASE("Hermite annihilates constants") {
    const Expression her = hermite();
    const auto one = make_polynomial({1}, 4);
    for (double x : interior_samples(-2.0, 2.0))
        CHECK_THAT(apply(her, one, x), WithinAbs(0.0, 1e-13));
}

TEST_CASE("ladder route equals the expanded-sum route") {
    const auto xs = interior_samples(0.05, 0.9, 12);
    const auto f = make_polynomial({1, -2, 0, 1, 0.5}, 8);
    for (const Expression& e :
         {bessel_alpha(1.5), bessel4_alpha(2.0), legendre(), laguerre(0.5), hermite(),
          jacobi(0.5, 1.5), chaudhuri_everitt()}) {
        for (double x : xs) {
            if (x <= e.interval.a || x >= e.interval.b) continue;
            const double a = apply(e, f, x);
            const double b = apply_expanded(e, f, x);
            CHECK_THAT(a - b, WithinAbs(0.0, 1e-10 * (1.0 + std::abs(a))));
        }
    }
}

TEST_CASE("missing derivative data is rejected") {
    const Expression e = bessel4_alpha(1.5);
    const auto f = make_polynomial({0, 1}, 2);  // only two derivatives supplied
    CHECK_THROWS_AS(quasi_derivatives(e, f, 0.5), std::invalid_argument);
}

TEST_CASE("symbolic square of the Bessel expression reproduces the closed form") {
    for (double alpha : {1.0, 1.5, 2.0, kSqrt33Half}) {
        const Expression sq = compose_square(bessel_alpha(alpha));
        const Expression closed = bessel4_alpha(alpha);
        for (int i = 1; i <= 50; ++i) {
            const double x = i / 51.0 * 0.95;
            for (int k = 0; k <= 2; ++k) {
                const double a = sq.p[static_cast<std::size_t>(k)](x);
                const double b = closed.p[static_cast<std::size_t>(k)](x);
                CHECK_THAT(a - b, WithinAbs(0.0, 1e-12 * (1.0 + std::abs(b))));
            }
        }
    }
}

TEST_CASE("square of the free expression is the fourth derivative") {
    Expression free;
    free.name = "free";
    free.n = 1;
    free.p = {Coefficient::one(), Coefficient::zero()};
    free.interval = {0.0, 1.0};
    const Expression sq = compose_square(free);
    CHECK_THAT(sq.p[0](0.3), WithinAbs(1.0, 1e-15));
    CHECK_THAT(sq.p[1](0.3), WithinAbs(0.0, 1e-15));
    CHECK_THAT(sq.p[2](0.3), WithinAbs(0.0, 1e-15));
    // two-fold check: the symbolic square applied once equals the base
    // expression applied twice
    const auto u = make_polynomial({0, 1, 2, 3, 4, 0.25}, 8);
    const SymFunc uf({{1, 1, 0, 0, 0, 0},
                      {2, 2, 0, 0, 0, 0},
                      {3, 3, 0, 0, 0, 0},
                      {4, 4, 0, 0, 0, 0},
                      {0.25, 5, 0, 0, 0, 0}});
    const Expression ce = chaudhuri_everitt();
    const Expression ce2 = compose_square(ce);
    for (double x : interior_samples(0.2, 3.0, 10)) {
        const double direct = apply(ce2, u, x);
        const double twofold = apply_symbolic_power(ce, uf, 2).evaluate(x);
        CHECK_THAT(direct - twofold, WithinAbs(0.0, 1e-8 * (1.0 + std::abs(twofold))));
    }
}

TEST_CASE("power expansion coefficients for small m") {
    const auto leg1 = power_expansion(ClassicalFamily::legendre, 1);
    REQUIRE(leg1.terms.size() == 1);
    CHECK(leg1.terms[0].coefficient == 1);

    const auto leg2 = power_expansion(ClassicalFamily::legendre, 2);
    CHECK(leg2.terms[0].coefficient == 2);
    CHECK(leg2.terms[1].coefficient == 1);

    const auto her2 = power_expansion(ClassicalFamily::hermite, 2);
    CHECK(her2.terms[0].coefficient == 2);  // S(2,1) * 2^(2-1)
    CHECK(her2.terms[1].coefficient == 1);  // S(2,2) * 2^0
}

namespace {

struct FamilyFixture {
    ClassicalFamily family;
    Rational alpha, beta;
    double lo, hi;
};

void check_m_fold(const FamilyFixture& fx, unsigned m, double tol) {
    const Expression base =
        base_expression(fx.family, static_cast<double>(fx.alpha), static_cast<double>(fx.beta));
    const PowerExpansion pe = power_expansion(fx.family, m, fx.alpha, fx.beta);
    const std::vector<std::vector<double>> polys{
        {1, 1}, {0, 0, 1}, {0, -1, 0, 1}, {0, 0, 0, 0, 1}, {0, 0, -1, 0, 0, 1}};
    for (const auto& coeffs : polys) {
        std::vector<ExpMonomial> terms;
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            if (coeffs[k] != 0.0)
                terms.push_back({coeffs[k], static_cast<double>(k), 0, 0, 0, 0});
        const SymFunc f(terms);
        const SymFunc iterated = apply_symbolic_power(base, f, m);
        const auto fd = make_polynomial(coeffs, static_cast<int>(2 * m));
        for (double x : interior_samples(fx.lo, fx.hi)) {
            const double via_expansion = apply_expansion(pe, fd, x);
            const double via_iteration = iterated.evaluate(x);
            CHECK_THAT(via_expansion - via_iteration,
                       WithinAbs(0.0, tol * (1.0 + std::abs(via_iteration))));
        }
    }
}

}  // namespace

TEST_CASE("m-fold oracle fixes every Stirling convention") {
    const std::vector<FamilyFixture> fixtures{
        {ClassicalFamily::legendre, 0, 0, -0.9, 0.9},
        {ClassicalFamily::laguerre, Rational(1, 2), 0, 0.3, 8.0},
        {ClassicalFamily::hermite, 0, 0, -2.5, 2.5},
        {ClassicalFamily::jacobi, Rational(1, 2), Rational(3, 2), -0.9, 0.9},
    };
    for (const auto& fx : fixtures)
        for (unsigned m : {2u, 3u, 4u}) check_m_fold(fx, m, 1e-8);
}

TEST_CASE("Laguerre weight powers must grow with j (fixed-weight variant fails)") {
    // Variant with W_j = x^(alpha+1) e^-x for every j; the oracle rejects it.
    const double alpha = 0.5;
    const Expression base = laguerre(alpha);
    PowerExpansion wrong = power_expansion(ClassicalFamily::laguerre, 2, Rational(1, 2));
    for (auto& t : wrong.terms) t.weight = SymFunc::term(1.0, alpha + 1.0, 0, 0, -1.0, 0);
    const SymFunc f({{1, 2, 0, 0, 0, 0}});  // f = x^2
    const SymFunc iterated = apply_symbolic_power(base, f, 2);
    const auto fd = make_polynomial({0, 0, 1}, 4);
    double worst = 0.0;
    for (double x : interior_samples(0.3, 8.0)) {
        const double got = apply_expansion(wrong, fd, x);
        const double want = iterated.evaluate(x);
        worst = std::max(worst, std::abs(got - want) / (1.0 + std::abs(want)));
    }
    CHECK(worst > 1e-2);
}

TEST_CASE("kernel exponent flags") {
    const auto k4a2 = bessel_kernel_exponents(4, 2.0);
    REQUIRE(k4a2.size() == 4);
    CHECK(k4a2[0].exponent == 2.5);
    CHECK(k4a2[0].square_integrable);
    CHECK(k4a2[1].exponent == -1.5);
    CHECK_FALSE(k4a2[1].square_integrable);
    CHECK(k4a2[2].exponent == 4.5);
    CHECK(k4a2[2].square_integrable);
    CHECK(k4a2[3].exponent == 0.5);
    CHECK(k4a2[3].square_integrable);

    const auto k2a1 = bessel_kernel_exponents(2, 1.0);
    CHECK(k2a1[1].exponent == -0.5);
    CHECK_FALSE(k2a1[1].square_integrable);  // boundary exponent, log divergence

    const auto k4a4 = bessel_kernel_exponents(4, 4.0);
    CHECK_FALSE(k4a4[1].square_integrable);  // -7/2
    CHECK_FALSE(k4a4[3].square_integrable);  // -3/2

    CHECK_THROWS_AS(bessel_kernel_exponents(3, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(bessel_kernel_exponents(2, 0.5), std::invalid_argument);
}

TEST_CASE("kernel L2 counts across the parameter window") {
    for (double alpha : {1.0, 2.0, 2.5, kSqrt33Half}) {
        CHECK(kernel_l2_count(2, alpha) == 1);
        CHECK(kernel_l2_count(4, alpha) == 3);
        CHECK(iterated_square_kernel_count(alpha) == 2);
    }
    // outside [1,3) the counts change and are reported honestly
    CHECK(kernel_l2_count(4, 4.0) == 2);
    CHECK(iterated_square_kernel_count(4.0) == 2);
}

TEST_CASE("vanishing quasi-derivatives at the regular endpoint match classical ones") {
    // Joint equivalence through the triangular relation between
    // (g, g', g'', g''') and (g^[0], ..., g^[3]) at x = 0.
    const Expression e = bessel4_alpha(1.9);
    for (int j = 0; j < 4; ++j) {
        std::vector<double> coeffs(4, 0.0);
        coeffs[static_cast<std::size_t>(j)] = 1.0;
        const auto g = make_polynomial(coeffs, 4);
        const auto ladder = quasi_derivatives(e, g, 0.0);
        // classical derivatives at 0
        std::vector<double> classical(4);
        for (int k = 0; k < 4; ++k) classical[static_cast<std::size_t>(k)] = g(0.0, k);
        // if every classical derivative vanishes, so must every quasi one, and
        // vice versa (triangular with nonvanishing diagonal)
        bool all_classical_zero = true, all_quasi_zero = true;
        for (int k = 0; k < 4; ++k) {
            if (std::abs(classical[static_cast<std::size_t>(k)]) > 1e-14) all_classical_zero = false;
            if (std::abs(ladder[static_cast<std::size_t>(k)]) > 1e-14) all_quasi_zero = false;
        }
        CHECK(all_classical_zero == all_quasi_zero);
    }
}

TEST_CASE("Liouville-Green endpoint maps and parameter identification") {
    const LiouvilleGreenMap map = liouville_green(chaudhuri_everitt());
    CHECK_THAT(map.t_of_x(0.0), WithinAbs(0.0, 1e-15));
    CHECK_THAT(map.t_of_x(1e12) - std::sqrt(6.0), WithinAbs(0.0, 1e-10));
    CHECK(map.t_limit_infinity() == std::sqrt(6.0));
    // alpha^2 - 1/4 = 8
    CHECK_THAT(map.alpha_identified() * map.alpha_identified() - 0.25, WithinAbs(8.0, 1e-12));
    CHECK_THAT(map.alpha_identified(), WithinAbs(kSqrt33Half, 1e-15));
    CHECK(map.spectral_scale() == 6.0);
    // round trip of the variable change
    for (double x : {0.0, 0.5, 2.0, 17.0})
        CHECK_THAT(map.x_of_t(map.t_of_x(x)) - x, WithinAbs(0.0, 1e-10 * (1.0 + x)));
    CHECK_THROWS_AS(liouville_green(legendre()), std::invalid_argument);
}

TEST_CASE("transported solutions solve the Bessel normal form") {
    for (const std::complex<double> z : {std::complex<double>(0, 1), std::complex<double>(2.5, 0)}) {
        const TransportCheck check = transport_solution(z);
        CHECK(check.max_residual < 1e-6);
        // the transported grid covers most of [0,1)
        CHECK(check.s_grid.front() == 0.0);
        CHECK(check.s_grid.back() > 0.9);
    }
}

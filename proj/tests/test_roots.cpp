#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "defcalc/halfplane.hpp"
#include "defcalc/roots.hpp"

using namespace defcalc;
using Catch::Matchers::WithinAbs;

namespace {

/// Greedy nearest matching distance between two root multisets.
double matched_distance(std::vector<Complex> a, std::vector<Complex> b) {
    REQUIRE(a.size() == b.size());
    double worst = 0.0;
    for (const auto& r : a) {
        auto best = std::min_element(b.begin(), b.end(), [&](Complex u, Complex v) {
            return std::abs(u - r) < std::abs(v - r);
        });
        worst = std::max(worst, std::abs(*best - r));
        b.erase(best);
    }
    return worst;
}

}  // namespace

TEST_CASE("simple factorizations") {
    const RootSet r1 = find_roots(RealPolynomial({-1, 0, 1}));  // t^2 - 1
    REQUIRE(r1.roots.size() == 2);
    CHECK_THAT(std::abs(r1.roots[0] - Complex(-1, 0)), WithinAbs(0.0, 1e-12));
    CHECK_THAT(std::abs(r1.roots[1] - Complex(1, 0)), WithinAbs(0.0, 1e-12));

    const RootSet r2 = find_roots(RealPolynomial({1, 0, 1}));  // t^2 + 1
    REQUIRE(r2.roots.size() == 2);
    CHECK_THAT(std::abs(r2.roots[0] - Complex(0, -1)), WithinAbs(0.0, 1e-12));
    CHECK_THAT(std::abs(r2.roots[1] - Complex(0, 1)), WithinAbs(0.0, 1e-12));
    // conjugate pairing is exact
    CHECK(r2.roots[0] == std::conj(r2.roots[1]));
}

TEST_CASE("shifted cubic keeps a small residual") {
    const RealPolynomial p({0, -1, 0, 1});  // t^3 - t
    const RootSet rs = find_roots_shifted(p, Complex(0, 1e-3), 1e-12);
    REQUIRE(rs.roots.size() == 3);
    CHECK(rs.residual_bound <= 1e-12);
    for (const auto& r : rs.roots)
        CHECK_THAT(std::abs(p(r) - Complex(0, 1e-3)), WithinAbs(0.0, 1e-12));
}

TEST_CASE("random polynomials match the companion-matrix oracle") {
    std::mt19937 rng(24601);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    std::uniform_int_distribution<int> deg(2, 12);
    int aberth_used = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int m = deg(rng);
        std::vector<double> c(static_cast<std::size_t>(m) + 1);
        for (auto& v : c) v = coef(rng);
        if (std::abs(c.back()) < 0.1) c.back() = 1.0;
        const RealPolynomial p(c);
        const RootSet mine = find_roots(p, 1e-7);
        const std::vector<Complex> oracle = companion_roots_shifted(p, 0.0);
        CHECK(matched_distance(mine.roots, oracle) < 1e-8 * p.root_bound());
        if (mine.method == "aberth") ++aberth_used;
    }
    // the simultaneous iteration, not the fallback, must be doing the work
    CHECK(aberth_used > 90);
}

TEST_CASE("half-plane counts for the spec quadratic, linear, and cubic") {
    const auto q = halfplane_counts(RealPolynomial({-1, 0, 1}), 1e-3, EpsilonSign::plus);
    CHECK(q.in_upper == 1);
    CHECK(q.in_lower == 1);
    CHECK(q.on_axis == 0);

    const auto l = halfplane_counts(RealPolynomial({0, 1}), 1e-3, EpsilonSign::plus);
    CHECK(l.in_upper == 1);
    CHECK(l.in_lower == 0);

    const auto c = halfplane_counts(RealPolynomial({0, -1, 0, 1}), 1e-3, EpsilonSign::plus);
    CHECK(c.in_upper == 2);
    CHECK(c.in_lower == 1);
    CHECK(c.on_axis == 0);

    CHECK_THROWS_AS(halfplane_counts(RealPolynomial({0, 1}), 0.0, EpsilonSign::plus),
                    std::invalid_argument);
}

TEST_CASE("conjugation symmetry of the half-plane counts") {
    std::mt19937 rng(5150);
    std::uniform_real_distribution<double> coef(-1.5, 1.5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> c(7);
        for (auto& v : c) v = coef(rng);
        if (std::abs(c.back()) < 0.1) c.back() = 1.0;
        const RealPolynomial p(c);
        const auto plus = halfplane_counts(p, 0.37, EpsilonSign::plus);
        const auto minus = halfplane_counts(p, 0.37, EpsilonSign::minus);
        CHECK(plus.in_upper == minus.in_lower);
        CHECK(plus.in_lower == minus.in_upper);
        CHECK(plus.on_axis == minus.on_axis);
    }
}

TEST_CASE("first-order root shift") {
    const RealPolynomial p({-1, 0, 1});
    const Complex shift = first_order_root_shift(p, 1.0, 1e-3);
    CHECK_THAT(std::abs(shift - Complex(1.0, 5e-4)), WithinAbs(0.0, 1e-15));

    const Complex lin = first_order_root_shift(RealPolynomial({0, 1}), 0.0, 0.25);
    CHECK_THAT(std::abs(lin - Complex(0.0, 0.25)), WithinAbs(0.0, 1e-15));

    const RealPolynomial cubic({0, -1, 0, 1});
    const Complex c = first_order_root_shift(cubic, -1.0, 1e-3);
    CHECK_THAT(std::abs(c - Complex(-1.0, 5e-4)), WithinAbs(0.0, 1e-15));

    CHECK_THROWS_AS(first_order_root_shift(p, 0.5, 1e-3), std::invalid_argument);
    // double root of t^2 at 0: P'(0) = 0
    CHECK_THROWS_AS(first_order_root_shift(RealPolynomial({0, 0, 1}), 0.0, 1e-3),
                    std::domain_error);
}

TEST_CASE("the sign of P' alternates along descending real roots") {
    // roots 3 > 1 > -2, positive leading coefficient
    const RealPolynomial p = RealPolynomial::from_roots({3.0, 1.0, -2.0});
    CHECK(p.derivative_at(3.0) > 0);
    CHECK(p.derivative_at(1.0) < 0);
    CHECK(p.derivative_at(-2.0) > 0);
}

TEST_CASE("predictor error decays quadratically in epsilon") {
    const RealPolynomial p = RealPolynomial::from_roots({-1.3, 0.2, 0.9, 2.4});
    const double eps0 = 1e-3;
    for (double z0 : {-1.3, 0.2, 0.9, 2.4}) {
        double prev_err = 0.0;
        std::vector<double> errs;
        for (int k = 0; k < 6; ++k) {
            const double eps = eps0 / std::pow(2.0, k);
            const Complex predicted = first_order_root_shift(p, z0, eps);
            const RootSet rs = find_roots_shifted(p, Complex(0, eps), 1e-12);
            const auto nearest = *std::min_element(
                rs.roots.begin(), rs.roots.end(), [&](Complex a, Complex b) {
                    return std::abs(a - predicted) < std::abs(b - predicted);
                });
            errs.push_back(std::abs(nearest - predicted));
        }
        for (std::size_t k = 0; k + 1 < errs.size(); ++k) {
            if (errs[k + 1] < 1e-14) continue;  // below numerical floor
            const double ratio = errs[k] / errs[k + 1];
            CHECK(ratio > 2.0);
            CHECK(ratio < 8.0);
        }
        (void)prev_err;
    }
}

TEST_CASE("make_simple leaves simple polynomials alone and separates multiple roots") {
    const auto [same, c0] = make_simple(RealPolynomial({-1, 0, 1}));
    CHECK(c0 == 0.0);

    const auto [shifted, c1] = make_simple(RealPolynomial({0, 0, 1}));  // t^2
    CHECK(c1 != 0.0);
    const RootSet rs = find_roots(shifted);
    CHECK(min_root_separation(rs.roots) > 1e-4 * shifted.root_bound());

    // (t-1)^2 (t+1)
    const RealPolynomial dbl = RealPolynomial::from_roots({1.0, 1.0, -1.0});
    const auto [fixed, c2] = make_simple(dbl);
    CHECK(min_root_separation(find_roots(fixed).roots) > 1e-4 * fixed.root_bound());
}

TEST_CASE("safe epsilon keeps full off-axis counts") {
    std::mt19937 rng(8080);
    std::uniform_real_distribution<double> rootd(-3.0, 3.0);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<double> roots(5);
        for (auto& r : roots) r = rootd(rng);
        std::sort(roots.begin(), roots.end());
        bool ok = true;
        for (std::size_t i = 0; i + 1 < roots.size(); ++i)
            if (roots[i + 1] - roots[i] < 0.1) ok = false;
        if (!ok) continue;
        const RealPolynomial p = RealPolynomial::from_roots(roots);
        const double eps = 0.5 * safe_epsilon(p);
        const auto hp = halfplane_counts(p, eps, EpsilonSign::plus);
        CHECK(hp.on_axis == 0);
        CHECK(hp.in_upper == 3);
        CHECK(hp.in_lower == 2);
    }
}

TEST_CASE("tracked roots never change half-planes") {
    const std::vector<double> grid{1e-3, 1e-2, 1e-1, 1.0, 10.0};
    const auto quad = track_roots(RealPolynomial({-1, 0, 1}), EpsilonSign::plus, grid);
    CHECK(quad.all_confined);

    const auto lin = track_roots(RealPolynomial({0, 1}), EpsilonSign::plus, grid);
    CHECK(lin.all_confined);
    for (const auto& pos : lin.paths[0].positions) CHECK(pos.imag() > 0);

    // t^4 - 5 t^2 + 4 on a dyadic grid up to 100
    std::vector<double> dyadic;
    for (double e = 1e-3; e <= 100.0; e *= 2.0) dyadic.push_back(e);
    const auto quartic =
        track_roots(RealPolynomial({4, 0, -5, 0, 1}), EpsilonSign::plus, dyadic);
    CHECK(quartic.all_confined);
    for (std::size_t g = 0; g < dyadic.size(); ++g) {
        int up = 0, down = 0;
        for (const auto& path : quartic.paths)
            (path.positions[g].imag() > 0 ? up : down)++;
        CHECK(up == 2);
        CHECK(down == 2);
    }

    CHECK_THROWS_AS(track_roots(RealPolynomial({-1, 0, 1}), EpsilonSign::plus, {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        track_roots(RealPolynomial({-1, 0, 1}), EpsilonSign::plus, {1.0, 0.5}),
        std::invalid_argument);
}

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "defcalc/boundary.hpp"
#include "defcalc/channels.hpp"
#include "defcalc/expression.hpp"
#include "defcalc/power_expansion.hpp"
#include "defcalc/weyl.hpp"

using namespace defcalc;
using Catch::Matchers::WithinAbs;

TEST_CASE("analytic regularity detection") {
    CHECK(classify_endpoint(bessel_alpha(2.0), endpoint_of(bessel_alpha(2.0), WhichEnd::left))
              .kind == EndpointVerdictKind::regular);
    CHECK(classify_endpoint(chaudhuri_everitt(), endpoint_of(chaudhuri_everitt(), WhichEnd::left))
              .kind == EndpointVerdictKind::regular);
    // gamma = 1/2 removes the potential entirely; 0 becomes regular
    CHECK(classify_endpoint(bessel_gamma(0.5), endpoint_of(bessel_gamma(0.5), WhichEnd::left))
              .kind == EndpointVerdictKind::regular);
    // Jacobi with negative parameter is regular at the matching endpoint
    CHECK(classify_endpoint(jacobi(-0.5, 0.5), endpoint_of(jacobi(-0.5, 0.5), WhichEnd::right))
              .kind == EndpointVerdictKind::regular);
    // Legendre endpoints are singular
    CHECK(classify_endpoint(legendre(), endpoint_of(legendre(), WhichEnd::right)).kind !=
          EndpointVerdictKind::regular);
}

TEST_CASE("limit circle and limit point classification of the Bessel family at zero") {
    for (double gamma : {0.0, 0.25, 0.5, 0.75, 0.99}) {
        const Expression e = bessel_gamma(gamma);
        const auto cls = classify_endpoint(e, endpoint_of(e, WhichEnd::left));
        INFO("gamma = " << gamma);
        CHECK(cls.l2_solution_count == 2);
    }
    for (double gamma : {1.0, 1.5, 3.0}) {
        const Expression e = bessel_gamma(gamma);
        const auto cls = classify_endpoint(e, endpoint_of(e, WhichEnd::left));
        INFO("gamma = " << gamma);
        CHECK(cls.kind == EndpointVerdictKind::limit_point);
    }
}

TEST_CASE("the Bessel family is limit point at infinity") {
    for (double gamma : {0.0, 0.5, 2.0}) {
        const Expression e = bessel_gamma(gamma);
        const auto cls = classify_endpoint(e, endpoint_of(e, WhichEnd::right));
        CHECK(cls.kind == EndpointVerdictKind::limit_point);
    }
}

TEST_CASE("deficiency indices of the classical minimal operators") {
    CHECK(deficiency_indices_minimal(legendre()).indices == DefectPair{2, 2});
    CHECK(deficiency_indices_minimal(hermite()).indices == DefectPair{0, 0});
    CHECK(deficiency_indices_minimal(laguerre(0.5)).indices == DefectPair{1, 1});
    CHECK(deficiency_indices_minimal(laguerre(2.0)).indices == DefectPair{0, 0});
    CHECK(deficiency_indices_minimal(jacobi(0.5, 2.0)).indices == DefectPair{1, 1});
    CHECK(deficiency_indices_minimal(bessel_alpha(2.0)).indices == DefectPair{1, 1});
}

TEST_CASE("evidence quality for a pure power endpoint") {
    const Expression e = bessel_gamma(0.75);
    const auto cls = classify_endpoint(e, endpoint_of(e, WhichEnd::left));
    REQUIRE(cls.verdicts.size() == 2);
    for (const auto& v : cls.verdicts) {
        CHECK(v.evidence.ci_halfwidth < 0.2);
        CHECK(v.is_square_integrable);
    }
    // dominant direction behaves like x^{1/2-gamma}: integrand exponent 1-2*gamma
    CHECK_THAT(cls.verdicts[0].evidence.fitted_exponent, WithinAbs(1.0 - 2 * 0.75, 0.05));
    // subdominant like x^{1/2+gamma}: integrand exponent 1+2*gamma
    CHECK_THAT(cls.verdicts[1].evidence.fitted_exponent, WithinAbs(1.0 + 2 * 0.75, 0.05));
}

TEST_CASE("classification is z-independent on the regularity field") {
    const Expression e = laguerre(0.5);
    const Endpoint ep = endpoint_of(e, WhichEnd::left);
    const auto at_i = classify_endpoint(e, ep, {0.0, 1.0});
    const auto at_2i = classify_endpoint(e, ep, {0.0, 2.0});
    const auto at_minus_i = classify_endpoint(e, ep, {0.0, -1.0});
    CHECK(at_i.l2_solution_count == at_2i.l2_solution_count);
    CHECK(at_i.l2_solution_count == at_minus_i.l2_solution_count);
}

TEST_CASE("order-4 Bessel expression has the limit-3 count at the singular endpoint") {
    const Expression e = bessel4_alpha(2.0);
    const auto cls = classify_endpoint(e, endpoint_of(e, WhichEnd::right));
    CHECK(cls.l2_solution_count == 3);
    CHECK(cls.kind == EndpointVerdictKind::intermediate);
    const auto rep = deficiency_indices_minimal(e);
    CHECK(rep.indices == DefectPair{3, 3});
}

TEST_CASE("order-4 limit-circle/limit-circle case has indices (4,4)") {
    // the square of the Legendre expression, via its exact divergence form
    const Expression leg2 = expansion_as_expression(ClassicalFamily::legendre);
    const auto rep = deficiency_indices_minimal(leg2);
    CHECK(rep.indices == DefectPair{4, 4});
}

TEST_CASE("Chaudhuri-Everitt expression has indices (1,1) like its Bessel image") {
    const auto ce = deficiency_indices_minimal(chaudhuri_everitt());
    CHECK(ce.indices == DefectPair{1, 1});
    const auto bess = deficiency_indices_minimal(bessel_alpha(std::sqrt(33.0) / 2.0));
    CHECK(bess.indices == DefectPair{1, 1});
    // same verdict at the transformed singular endpoint
    const auto ce_inf =
        classify_endpoint(chaudhuri_everitt(), endpoint_of(chaudhuri_everitt(), WhichEnd::right));
    const auto bess_one = classify_endpoint(bessel_alpha(std::sqrt(33.0) / 2.0),
                                            endpoint_of(bessel_alpha(2.9), WhichEnd::right));
    CHECK(ce_inf.kind == bess_one.kind);
}

TEST_CASE("integrate_toward_endpoint produces a full filtered basis") {
    const Expression e = legendre();
    const auto basis = integrate_toward_endpoint(e, {0.0, 1.0}, endpoint_of(e, WhichEnd::right));
    REQUIRE(basis.solutions.size() == 2);
    for (const auto& s : basis.solutions) {
        CHECK(s.x.size() > 20);
        CHECK(s.distance.back() <= 1.5e-8);
        const auto v = l2_test(s, basis.endpoint);
        CHECK(v.is_square_integrable);
    }
    // growth ordering: first solution dominates
    CHECK(basis.solutions[0].log_scale.back() >= basis.solutions[1].log_scale.back());
}

TEST_CASE("solution samples satisfy the equation (integrator convergence)") {
    // Integrating at two tolerances must give the same filtered growth data.
    const Expression e = bessel_alpha(1.5);
    IntegrationControls tight;
    tight.rtol = 1e-12;
    IntegrationControls loose;
    loose.rtol = 1e-8;
    const auto a = integrate_toward_endpoint(e, {0.0, 1.0}, endpoint_of(e, WhichEnd::right), tight);
    const auto b = integrate_toward_endpoint(e, {0.0, 1.0}, endpoint_of(e, WhichEnd::right), loose);
    REQUIRE(a.solutions.size() == b.solutions.size());
    for (std::size_t j = 0; j < a.solutions.size(); ++j) {
        const auto& sa = a.solutions[j];
        const auto& sb = b.solutions[j];
        REQUIRE(sa.x.size() == sb.x.size());
        for (std::size_t k = 0; k < sa.x.size(); ++k) {
            const double fa = sa.log_integrand[k], fb = sb.log_integrand[k];
            if (fa < -1e29 || fb < -1e29) continue;
            CHECK_THAT(fa - fb, WithinAbs(0.0, 1e-5 * (1.0 + std::abs(fa))));
        }
    }
}

namespace {

SolutionSample synthetic_power_sample(double integrand_exponent) {
    SolutionSample s;
    s.z = {0.0, 1.0};
    s.anchor = 0.5;
    for (int k = 0; k < 14; ++k) {
        const double delta = std::pow(0.5, k + 2);
        s.x.push_back(1.0 - delta);
        s.distance.push_back(delta);
        s.log_scale.push_back(0.0);
        s.unit_state.push_back({});
        s.log_integrand.push_back(integrand_exponent * std::log(delta));
    }
    return s;
}

}  // namespace

TEST_CASE("square-integrability verdicts on model tails") {
    const Endpoint ep{1.0, false, WhichEnd::right};
    // u = (1-x)^{5/2}: |u|^2 has exponent 5, integrable
    const auto v1 = l2_test(synthetic_power_sample(5.0), ep);
    CHECK(v1.is_square_integrable);
    CHECK_THAT(v1.evidence.fitted_exponent, WithinAbs(5.0, 1e-9));
    // u = (1-x)^{-1/2}: exponent -1, the boundary log case diverges
    const auto v2 = l2_test(synthetic_power_sample(-1.0), ep);
    CHECK_FALSE(v2.is_square_integrable);
    // u == 1 near a finite endpoint
    const auto v3 = l2_test(synthetic_power_sample(0.0), ep);
    CHECK(v3.is_square_integrable);
}

TEST_CASE("inconclusive evidence is reported, not guessed") {
    // Integrand exponent -1 + 0.007: inside the fit margin (integrable) but
    // inside the stricter tail-decay margin (not decidably convergent).
    SolutionSample s;
    s.z = {0.0, 1.0};
    s.anchor = 0.5;
    for (int k = 0; k < 12; ++k) {
        const double delta = std::pow(0.5, k + 2);
        s.x.push_back(1.0 - delta);
        s.distance.push_back(delta);
        s.log_scale.push_back(0.0);
        s.unit_state.push_back({});
        s.log_integrand.push_back(-0.993 * std::log(delta));
    }
    CHECK_THROWS_AS(l2_test(s, Endpoint{1.0, false, WhichEnd::right}), InconclusiveError);
}

TEST_CASE("generalized boundary values for the Bessel family") {
    // g(x) = x^{1/2+gamma}: g~ = 0, g~' = 1
    const double gamma = 0.5;
    auto g1 = [gamma](double x) { return std::pow(x, 0.5 + gamma); };
    const auto bv1 = boundary_values_bessel(g1, gamma);
    CHECK_THAT(bv1.g.value, WithinAbs(0.0, 1e-8));
    CHECK_THAT(bv1.g_prime.value, WithinAbs(1.0, 1e-8));

    // g(x) = (2 gamma)^{-1} x^{1/2-gamma}: g~ = 1, g~' = 0
    auto g2 = [gamma](double x) { return std::pow(x, 0.5 - gamma) / (2.0 * gamma); };
    const auto bv2 = boundary_values_bessel(g2, gamma);
    CHECK_THAT(bv2.g.value, WithinAbs(1.0, 1e-8));
    CHECK_THAT(bv2.g_prime.value, WithinAbs(0.0, 1e-8));

    // gamma = 0 pair: x^{1/2} ln(1/x) and x^{1/2}
    auto g3 = [](double x) { return std::sqrt(x) * std::log(1.0 / x); };
    const auto bv3 = boundary_values_bessel(g3, 0.0);
    CHECK_THAT(bv3.g.value, WithinAbs(1.0, 1e-6));
    CHECK_THAT(bv3.g_prime.value, WithinAbs(0.0, 1e-6));

    CHECK_THROWS_AS(boundary_values_bessel(g1, 1.5), std::invalid_argument);
}

TEST_CASE("generalized boundary values for the Legendre expression") {
    auto one = [](double) { return 1.0; };
    const auto bv = boundary_values_legendre(one, +1);
    CHECK_THAT(bv.g.value, WithinAbs(0.0, 1e-8));
    CHECK_THAT(bv.g_prime.value, WithinAbs(1.0, 1e-8));

    // u2 itself has g~ = 1, g~' = 0
    auto u2 = [](double x) { return 0.5 * std::log((1.0 - x) / (1.0 + x)); };
    const auto bv2 = boundary_values_legendre(u2, +1);
    CHECK_THAT(bv2.g.value, WithinAbs(1.0, 1e-8));
    CHECK_THAT(bv2.g_prime.value, WithinAbs(0.0, 1e-6));
}

TEST_CASE("non-convergent boundary extrapolation is an error") {
    // grows faster than both model solutions: no boundary values exist
    auto bad = [](double x) { return 1.0 / (1.0 - x); };
    CHECK_THROWS_AS(boundary_values_legendre(bad, +1), std::runtime_error);
}

TEST_CASE("free equation near a finite endpoint: both solutions square integrable") {
    // with the potential gone the origin is a regular endpoint; the basis
    // integration still produces two directions with finite tails
    const Expression e = bessel_gamma(0.5);
    const auto basis = integrate_toward_endpoint(e, {0.0, 1.0}, endpoint_of(e, WhichEnd::left));
    REQUIRE(basis.solutions.size() == 2);
    for (const auto& s : basis.solutions) CHECK(l2_test(s, basis.endpoint).is_square_integrable);
}

TEST_CASE("channel expressions match the displayed index rule numerically") {
    for (int dim : {2, 3}) {
        for (int big_l : {0, 1}) {
            for (int ell = 0; ell <= big_l + 1; ++ell) {
                const ChannelSpec spec{dim, ell, big_l, 0.0};
                const Expression e = channel_expression(spec);
                const auto cls = classify_endpoint(e, endpoint_of(e, WhichEnd::left));
                INFO("n=" << dim << " l=" << ell << " L=" << big_l);
                const bool expect_circle = ell <= big_l;
                if (expect_circle)
                    CHECK(cls.l2_solution_count == 2);
                else
                    CHECK(cls.kind == EndpointVerdictKind::limit_point);
                const auto inf_cls = classify_endpoint(e, endpoint_of(e, WhichEnd::right));
                CHECK(inf_cls.kind == EndpointVerdictKind::limit_point);
                // numeric indices equal the displayed rule
                const auto rep = deficiency_indices_minimal(e);
                CHECK(rep.indices == channel_indices(spec));
            }
        }
    }
}

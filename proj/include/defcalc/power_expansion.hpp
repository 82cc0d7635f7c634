#pragma once

/**
 * @file power_expansion.hpp
 * @brief Integer powers of the classical second-order expressions in
 *        divergence form,
 *
 *            tau^m = w^{-1} sum_{j=1}^m (-1)^j c_j D^j W_j(x) D^j,
 *
 * with exact Stirling-type coefficients c_j:
 *
 *   Legendre:  c_j = PS(m,j),                 W_j = (1-x^2)^j
 *   Laguerre:  c_j = S(m,j),                  W_j = x^(alpha+j) e^-x
 *   Hermite:   c_j = S(m,j) 2^(m-j),          W_j = e^(-x^2)
 *   Jacobi:    c_j = PS^(a,b)(m,j),           W_j = (1-x)^(alpha+j) (1+x)^(beta+j)
 *
 * The binding correctness check is the m-fold oracle: applying the expansion
 * to a test function must reproduce m successive applications of the base
 * expression.  That oracle fixes the weight-power and 2^(m-j) conventions.
 */

#include <stdexcept>
#include <string>
#include <vector>

#include "defcalc/expression.hpp"
#include "defcalc/rational.hpp"
#include "defcalc/stirling.hpp"

namespace defcalc {

enum class ClassicalFamily { legendre, laguerre, hermite, jacobi };

struct PowerTerm {
    unsigned j = 1;
    Rational coefficient;  ///< exact value of c_j
    SymFunc weight;        ///< W_j(x)
};

struct PowerExpansion {
    ClassicalFamily family;
    unsigned m = 1;
    std::vector<PowerTerm> terms;
    SymFunc outer_weight;  ///< w(x); the operator is w^{-1} sum (...)
};

/// Exact expansion of the m-th power.  Parameters are exact rationals so the
/// Jacobi coefficients stay exact; evaluation uses their double images.
inline PowerExpansion power_expansion(ClassicalFamily family, unsigned m,
                                      const Rational& alpha = 0, const Rational& beta = 0) {
    if (m < 1) throw std::invalid_argument("power_expansion: m must be >= 1");
    const double a = static_cast<double>(alpha);
    const double b = static_cast<double>(beta);
    if (family == ClassicalFamily::laguerre && !(a > -1.0))
        throw std::invalid_argument("power_expansion: laguerre needs alpha > -1");
    if (family == ClassicalFamily::jacobi && !(a > -1.0 && b > -1.0))
        throw std::invalid_argument("power_expansion: jacobi needs alpha, beta > -1");

    PowerExpansion out;
    out.family = family;
    out.m = m;
    switch (family) {
        case ClassicalFamily::legendre:
            out.outer_weight = SymFunc::constant(1.0);
            break;
        case ClassicalFamily::laguerre:
            out.outer_weight = SymFunc::term(1.0, a, 0, 0, -1.0, 0);
            break;
        case ClassicalFamily::hermite:
            out.outer_weight = SymFunc::term(1.0, 0, 0, 0, 0, -1.0);
            break;
        case ClassicalFamily::jacobi:
            out.outer_weight = SymFunc::term(1.0, 0, a, b);
            break;
    }
    for (unsigned j = 1; j <= m; ++j) {
        PowerTerm term;
        term.j = j;
        switch (family) {
            case ClassicalFamily::legendre:
                term.coefficient = legendre_stirling(m, j);
                term.weight = SymFunc::term(1.0, 0, static_cast<double>(j),
                                            static_cast<double>(j));
                break;
            case ClassicalFamily::laguerre:
                term.coefficient = stirling2(m, j);
                term.weight = SymFunc::term(1.0, a + j, 0, 0, -1.0, 0);
                break;
            case ClassicalFamily::hermite:
                term.coefficient = stirling2(m, j) * Rational(ipow(BigInt(2), m - j));
                term.weight = SymFunc::term(1.0, 0, 0, 0, 0, -1.0);
                break;
            case ClassicalFamily::jacobi:
                term.coefficient = jacobi_stirling(m, j, alpha, beta);
                term.weight = SymFunc::term(1.0, 0, a + j, b + j);
                break;
        }
        out.terms.push_back(std::move(term));
    }
    return out;
}

/// Evaluate (tau^m f)(x) from the expansion.  Needs f-derivatives to order 2m.
inline double apply_expansion(const PowerExpansion& pe, const FunctionWithDerivatives& f,
                              double x) {
    if (f.max_order < static_cast<int>(2 * pe.m))
        throw std::invalid_argument("apply_expansion: f must supply derivatives to order 2m");
    double total = 0.0;
    for (const auto& term : pe.terms) {
        const int j = static_cast<int>(term.j);
        // D^j (W_j f^(j)) = sum_r C(j,r) W_j^(j-r) f^(j+r)
        double val = 0.0;
        for (int r = 0; r <= j; ++r)
            val += detail::binom(j, r) * term.weight.derivative(j - r).evaluate(x) * f(x, j + r);
        total += (term.j % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(term.coefficient) * val;
    }
    return total / pe.outer_weight.evaluate(x);
}

/// The expansion as a symbolic operator applied to a symbolic function
/// (used by the oracle tests for exact comparisons).
inline SymFunc apply_expansion_symbolic(const PowerExpansion& pe, const SymFunc& f) {
    SymFunc total;
    for (const auto& term : pe.terms) {
        const int j = static_cast<int>(term.j);
        const SymFunc inner = term.weight * f.derivative(j);
        total = total + ((term.j % 2 == 0 ? 1.0 : -1.0) *
                         static_cast<double>(term.coefficient)) *
                            inner.derivative(j);
    }
    return SymFunc::monomial(pe.outer_weight.terms()[0]).reciprocal() * total;
}

/// Base expression matching a family tag (used to drive the m-fold oracle).
inline Expression base_expression(ClassicalFamily family, double alpha = 0, double beta = 0) {
    switch (family) {
        case ClassicalFamily::legendre: return legendre();
        case ClassicalFamily::laguerre: return laguerre(alpha);
        case ClassicalFamily::hermite: return hermite();
        case ClassicalFamily::jacobi: return jacobi(alpha, beta);
    }
    throw std::logic_error("base_expression: unreachable");
}

/// The m = 2 expansion as an order-4 Expression (higher powers are handled
/// through the expansion terms directly).
inline Expression expansion_as_expression(ClassicalFamily family, const Rational& alpha = 0,
                                          const Rational& beta = 0) {
    const PowerExpansion pe = power_expansion(family, 2, alpha, beta);
    const Expression base = base_expression(family, static_cast<double>(alpha),
                                            static_cast<double>(beta));
    Expression out;
    out.name = "power2(" + base.name + ")";
    out.n = 2;
    // D^2 W_2 D^2 - c_1 D W_1 D + 0 in divergence form
    out.p = {Coefficient(static_cast<double>(pe.terms[1].coefficient) * pe.terms[1].weight),
             Coefficient(static_cast<double>(pe.terms[0].coefficient) * pe.terms[0].weight),
             Coefficient::zero()};
    out.weight = base.weight;
    out.interval = base.interval;
    return out;
}

}  // namespace defcalc

#pragma once

/**
 * @file stirling.hpp
 * @brief Classical, Legendre–Stirling, and Jacobi–Stirling numbers as exact
 *        rationals.
 *
 * These are the coefficients of the Lagrangian symmetric forms of integer
 * powers of the classical second-order expressions (Laguerre/Hermite use the
 * classical numbers, Legendre and Jacobi their own families).  The sums have
 * large alternating terms, so everything is evaluated in exact rational
 * arithmetic; the Gamma ratio in the Jacobi family is computed as a finite
 * Pochhammer product, never through a floating Gamma function.
 */

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "defcalc/rational.hpp"

namespace defcalc {

/// Classical Stirling number of the second kind,
///   S(m, j) = sum_{i=0..j} (-1)^{i+j} C(j,i) i^m / j!.
/// Zero for j > m; integer-valued for 1 <= j <= m.
inline Rational stirling2(unsigned m, unsigned j) {
    if (m < 1 || j < 1) throw std::invalid_argument("stirling2: m, j must be >= 1");
    Rational sum = 0;
    for (unsigned i = 0; i <= j; ++i) {
        const BigInt term = binomial(j, i) * ipow(BigInt(i), m);
        if ((i + j) % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum / Rational(factorial(j));
}

/// Legendre–Stirling number,
///   PS(m, j) = sum_{k=1..j} (-1)^{k+j} (2k+1) (k^2+k)^m / ((k+j+1)! (j-k)!).
inline Rational legendre_stirling(unsigned m, unsigned j) {
    if (m < 1 || j < 1) throw std::invalid_argument("legendre_stirling: m, j must be >= 1");
    Rational sum = 0;
    for (unsigned k = 1; k <= j; ++k) {
        const BigInt num = BigInt(2 * k + 1) * ipow(BigInt(k) * BigInt(k + 1), m);
        const BigInt den = factorial(k + j + 1) * factorial(j - k);
        const Rational term(num, den);
        if ((k + j) % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

/// Jacobi–Stirling number for rational parameters,
///   PS^{(a,b)}(n, j) = sum_{r=1..j} (-1)^{r+j} (a+b+2r+1) (r^2+(a+b)r+r)^{n-1}
///                      / ((r-1)! (j-r)!) * G(r, j),
/// where G(r, j) = Gamma(a+b+r+2)/Gamma(a+b+j+r+2)
///              = 1 / prod_{t=0..j-1} (a+b+r+2+t).
///
/// At a = b = 0 the Pochhammer product supplies exactly one extra factor
/// r^2 + r relative to the Legendre family, so PS^{(0,0)}(n, j) equals
/// legendre_stirling(n, j) despite the different displayed exponents.
inline Rational jacobi_stirling(unsigned n, unsigned j, const Rational& alpha,
                                const Rational& beta) {
    if (n < 1 || j < 1) throw std::invalid_argument("jacobi_stirling: n, j must be >= 1");
    const Rational s = alpha + beta;
    Rational sum = 0;
    for (unsigned r = 1; r <= j; ++r) {
        Rational pochhammer = 1;
        for (unsigned t = 0; t < j; ++t) {
            const Rational factor = s + Rational(static_cast<int>(r + t) + 2);
            if (factor == 0)
                throw std::domain_error(
                    "jacobi_stirling: Gamma-ratio pole at r = " + std::to_string(r) +
                    " (alpha+beta+r+2+t vanishes for t = " + std::to_string(t) + ")");
            pochhammer *= factor;
        }
        const Rational base = Rational(static_cast<int>(r)) * Rational(static_cast<int>(r)) +
                              s * Rational(static_cast<int>(r)) + Rational(static_cast<int>(r));
        Rational term = (s + Rational(2 * static_cast<int>(r) + 1)) * rational_pow(base, n - 1);
        term /= Rational(factorial(r - 1) * factorial(j - r));
        term /= pochhammer;
        if ((r + j) % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

/// High-precision floating evaluation for irrational parameters.  The result
/// is flagged approximate; exactness claims are reserved for rationals.
struct ApproximateValue {
    double value = 0.0;
    bool approximate = true;
};

inline ApproximateValue jacobi_stirling_approx(unsigned n, unsigned j, double alpha,
                                               double beta) {
    using Float50 = boost::multiprecision::cpp_bin_float_50;
    if (n < 1 || j < 1) throw std::invalid_argument("jacobi_stirling_approx: n, j must be >= 1");
    const Float50 s = Float50(alpha) + Float50(beta);
    Float50 sum = 0;
    for (unsigned r = 1; r <= j; ++r) {
        Float50 pochhammer = 1;
        for (unsigned t = 0; t < j; ++t) {
            const Float50 factor = s + Float50(static_cast<int>(r + t) + 2);
            if (factor == 0)
                throw std::domain_error("jacobi_stirling_approx: Gamma-ratio pole at r = " +
                                        std::to_string(r));
            pochhammer *= factor;
        }
        const Float50 base = Float50(r) * Float50(r) + s * Float50(r) + Float50(r);
        Float50 term = (s + Float50(2 * r + 1)) * pow(base, static_cast<int>(n - 1));
        term /= Float50(factorial(r - 1) * factorial(j - r));
        term /= pochhammer;
        if ((r + j) % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return {static_cast<double>(sum), true};
}

enum class StirlingFamily { classical, legendre, jacobi };

/// Frozen table of entries (m, j) -> value for one family.  Tables are built
/// single-threaded and immutable afterwards.
class StirlingTable {
public:
    static StirlingTable classical(unsigned max_m) {
        StirlingTable t(StirlingFamily::classical, 0, 0);
        for (unsigned m = 1; m <= max_m; ++m)
            for (unsigned j = 1; j <= m; ++j) t.entries_[{m, j}] = stirling2(m, j);
        return t;
    }

    static StirlingTable legendre(unsigned max_m) {
        StirlingTable t(StirlingFamily::legendre, 0, 0);
        for (unsigned m = 1; m <= max_m; ++m)
            for (unsigned j = 1; j <= m; ++j) t.entries_[{m, j}] = legendre_stirling(m, j);
        return t;
    }

    static StirlingTable jacobi(unsigned max_m, const Rational& alpha, const Rational& beta) {
        StirlingTable t(StirlingFamily::jacobi, alpha, beta);
        for (unsigned m = 1; m <= max_m; ++m)
            for (unsigned j = 1; j <= m; ++j)
                t.entries_[{m, j}] = jacobi_stirling(m, j, alpha, beta);
        return t;
    }

    StirlingFamily family() const { return family_; }
    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }

    const Rational& at(unsigned m, unsigned j) const {
        auto it = entries_.find({m, j});
        if (it == entries_.end())
            throw std::out_of_range("StirlingTable: entry (" + std::to_string(m) + ", " +
                                    std::to_string(j) + ") not populated");
        return it->second;
    }

private:
    StirlingTable(StirlingFamily f, Rational a, Rational b)
        : family_(f), alpha_(std::move(a)), beta_(std::move(b)) {}

    StirlingFamily family_;
    Rational alpha_, beta_;
    std::map<std::pair<unsigned, unsigned>, Rational> entries_;
};

}  // namespace defcalc

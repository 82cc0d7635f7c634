#pragma once

/**
 * @file polynomial.hpp
 * @brief Real-coefficient polynomials in one variable.
 */

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace defcalc {

/// Dense real polynomial a0 + a1 t + ... + am t^m with am != 0.
class RealPolynomial {
public:
    /// Coefficients by increasing power.  Trailing zeros are stripped;
    /// a zero or constant polynomial is rejected (degree must be >= 1).
    explicit RealPolynomial(std::vector<double> coefficients)
        : coeffs_(std::move(coefficients)) {
        while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
        if (coeffs_.size() < 2)
            throw std::invalid_argument("RealPolynomial: degree must be at least 1");
        for (double c : coeffs_)
            if (!std::isfinite(c))
                throw std::invalid_argument("RealPolynomial: coefficients must be finite");
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    double leading_coefficient() const { return coeffs_.back(); }
    const std::vector<double>& coefficients() const { return coeffs_; }

    double operator()(double t) const {
        double acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    std::complex<double> operator()(std::complex<double> z) const {
        std::complex<double> acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    RealPolynomial derivative() const {
        if (degree() == 1) throw std::domain_error("derivative of a linear polynomial is constant");
        std::vector<double> d(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            d[k - 1] = static_cast<double>(k) * coeffs_[k];
        return RealPolynomial(std::move(d));
    }

    /// Derivative value, valid for any degree (including linear).
    double derivative_at(double t) const {
        double acc = 0.0;
        for (std::size_t k = coeffs_.size() - 1; k >= 1; --k)
            acc = acc * t + static_cast<double>(k) * coeffs_[k];
        return acc;
    }

    std::complex<double> derivative_at(std::complex<double> z) const {
        std::complex<double> acc = 0.0;
        for (std::size_t k = coeffs_.size() - 1; k >= 1; --k)
            acc = acc * z + static_cast<double>(k) * coeffs_[k];
        return acc;
    }

    /// Polynomial with constant term shifted by c.
    RealPolynomial shifted(double c) const {
        std::vector<double> s = coeffs_;
        s[0] += c;
        return RealPolynomial(std::move(s));
    }

    /// Largest coefficient magnitude (used for residual scaling).
    double coefficient_scale() const {
        double m = 0.0;
        for (double c : coeffs_) m = std::max(m, std::abs(c));
        return m;
    }

    /// Cauchy bound: all roots satisfy |z| <= 1 + max |a_k / a_m|.
    double root_bound() const {
        double m = 0.0;
        for (int k = 0; k < degree(); ++k)
            m = std::max(m, std::abs(coeffs_[k] / coeffs_.back()));
        return 1.0 + m;
    }

    /// Product of monic linear factors (t - r_k) times `leading`.
    static RealPolynomial from_roots(const std::vector<double>& roots, double leading = 1.0) {
        std::vector<double> c{1.0};
        for (double r : roots) {
            std::vector<double> next(c.size() + 1, 0.0);
            for (std::size_t k = 0; k < c.size(); ++k) {
                next[k + 1] += c[k];
                next[k] -= r * c[k];
            }
            c = std::move(next);
        }
        for (double& v : c) v *= leading;
        return RealPolynomial(std::move(c));
    }

private:
    std::vector<double> coeffs_;
};

}  // namespace defcalc

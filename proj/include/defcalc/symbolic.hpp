#pragma once

/**
 * @file symbolic.hpp
 * @brief Closed symbolic class for the coefficient functions of the classical
 *        differential expressions: finite sums of terms
 *
 *            c * x^a * (1-x)^b * (1+x)^d * exp(g*x + h*x^2).
 *
 * The class is closed under addition, multiplication, and differentiation,
 * which is all the expression algebra needs (powers of the classical
 * expressions applied to polynomials stay inside it).  Not a general CAS.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace defcalc {

struct ExpMonomial {
    double c = 0.0;   ///< scalar coefficient
    double px = 0.0;  ///< exponent of x
    double pm = 0.0;  ///< exponent of (1-x)
    double pp = 0.0;  ///< exponent of (1+x)
    double g = 0.0;   ///< linear exponential rate
    double h = 0.0;   ///< quadratic exponential rate

    double evaluate(double x) const {
        double v = c;
        if (px != 0.0) v *= std::pow(x, px);
        if (pm != 0.0) v *= std::pow(1.0 - x, pm);
        if (pp != 0.0) v *= std::pow(1.0 + x, pp);
        if (g != 0.0 || h != 0.0) v *= std::exp(g * x + h * x * x);
        return v;
    }

    /// log |value| together with the sign of the value (underflow-safe).
    std::pair<double, int> log_evaluate(double x) const {
        if (c == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
        int sign = c > 0 ? 1 : -1;
        double lv = std::log(std::abs(c));
        auto add_factor = [&](double base, double expo) {
            if (expo == 0.0) return;
            if (base < 0.0) {
                // negative base needs an integral exponent
                const double r = std::round(expo);
                if (std::abs(expo - r) > 1e-9)
                    throw std::domain_error("ExpMonomial: fractional power of a negative base");
                if (static_cast<long long>(r) % 2 != 0) sign = -sign;
                lv += expo * std::log(-base);
            } else {
                lv += expo * std::log(base);
            }
        };
        add_factor(x, px);
        add_factor(1.0 - x, pm);
        add_factor(1.0 + x, pp);
        lv += g * x + h * x * x;
        return {lv, sign};
    }
};

class SymFunc {
public:
    SymFunc() = default;
    explicit SymFunc(std::vector<ExpMonomial> terms) : terms_(std::move(terms)) { combine(); }

    static SymFunc constant(double c) {
        if (c == 0.0) return SymFunc{};
        return SymFunc({ExpMonomial{c}});
    }
    static SymFunc monomial(ExpMonomial m) { return SymFunc({m}); }

    /// c * x^a * (1-x)^b * (1+x)^d * exp(g x + h x^2)
    static SymFunc term(double c, double a = 0, double b = 0, double d = 0, double g = 0,
                        double h = 0) {
        return SymFunc({ExpMonomial{c, a, b, d, g, h}});
    }

    const std::vector<ExpMonomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_single_term() const { return terms_.size() == 1; }

    double evaluate(double x) const {
        double v = 0.0;
        for (const auto& t : terms_) v += t.evaluate(x);
        return v;
    }

    double operator()(double x) const { return evaluate(x); }

    friend SymFunc operator+(const SymFunc& a, const SymFunc& b) {
        std::vector<ExpMonomial> t = a.terms_;
        t.insert(t.end(), b.terms_.begin(), b.terms_.end());
        return SymFunc(std::move(t));
    }

    friend SymFunc operator-(const SymFunc& a, const SymFunc& b) { return a + (-1.0) * b; }

    friend SymFunc operator*(double s, const SymFunc& a) {
        std::vector<ExpMonomial> t = a.terms_;
        for (auto& m : t) m.c *= s;
        return SymFunc(std::move(t));
    }

    friend SymFunc operator*(const SymFunc& a, const SymFunc& b) {
        std::vector<ExpMonomial> t;
        t.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& u : a.terms_)
            for (const auto& v : b.terms_)
                t.push_back(ExpMonomial{u.c * v.c, u.px + v.px, u.pm + v.pm, u.pp + v.pp,
                                        u.g + v.g, u.h + v.h});
        return SymFunc(std::move(t));
    }

    SymFunc derivative() const {
        std::vector<ExpMonomial> t;
        for (const auto& m : terms_) {
            if (m.px != 0.0) t.push_back({m.c * m.px, m.px - 1, m.pm, m.pp, m.g, m.h});
            if (m.pm != 0.0) t.push_back({-m.c * m.pm, m.px, m.pm - 1, m.pp, m.g, m.h});
            if (m.pp != 0.0) t.push_back({m.c * m.pp, m.px, m.pm, m.pp - 1, m.g, m.h});
            if (m.g != 0.0) t.push_back({m.c * m.g, m.px, m.pm, m.pp, m.g, m.h});
            if (m.h != 0.0) t.push_back({2.0 * m.c * m.h, m.px + 1, m.pm, m.pp, m.g, m.h});
        }
        return SymFunc(std::move(t));
    }

    SymFunc derivative(int order) const {
        SymFunc d = *this;
        for (int k = 0; k < order; ++k) d = d.derivative();
        return d;
    }

    /// Reciprocal; defined for a single-term function only.
    SymFunc reciprocal() const {
        if (terms_.size() != 1)
            throw std::domain_error("SymFunc::reciprocal: only single-term functions");
        const auto& m = terms_[0];
        if (m.c == 0.0) throw std::domain_error("SymFunc::reciprocal: zero function");
        return SymFunc({ExpMonomial{1.0 / m.c, -m.px, -m.pm, -m.pp, -m.g, -m.h}});
    }

    SymFunc pow_int(unsigned n) const {
        SymFunc result = constant(1.0);
        SymFunc base = *this;
        while (n > 0) {
            if (n & 1u) result = result * base;
            base = base * base;
            n >>= 1;
        }
        return result;
    }

    /// Local power-law exponent at a finite endpoint: the smallest exponent of
    /// (x - e) (up to sign) over all terms, i.e. the dominant local behaviour.
    /// Endpoints other than 0 and ±1 see only smooth nonvanishing factors.
    double endpoint_exponent(double endpoint) const {
        if (terms_.empty()) return std::numeric_limits<double>::infinity();
        double e = std::numeric_limits<double>::infinity();
        for (const auto& m : terms_) {
            double local = 0.0;
            if (endpoint == 0.0) local = m.px;
            else if (endpoint == 1.0) local = m.pm;
            else if (endpoint == -1.0) local = m.pp;
            e = std::min(e, local);
        }
        return e;
    }

    /// log |f(x)| and sign, exact for single-term functions; multi-term
    /// functions are combined through scaled summation.
    std::pair<double, int> log_evaluate(double x) const {
        if (terms_.empty()) return {-std::numeric_limits<double>::infinity(), 0};
        if (terms_.size() == 1) return terms_[0].log_evaluate(x);
        double max_lv = -std::numeric_limits<double>::infinity();
        std::vector<std::pair<double, int>> parts;
        parts.reserve(terms_.size());
        for (const auto& t : terms_) {
            parts.push_back(t.log_evaluate(x));
            max_lv = std::max(max_lv, parts.back().first);
        }
        double acc = 0.0;
        for (const auto& [lv, s] : parts) acc += s * std::exp(lv - max_lv);
        if (acc == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
        return {max_lv + std::log(std::abs(acc)), acc > 0 ? 1 : -1};
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& m : terms_) {
            if (!first) os << (m.c >= 0 ? " + " : " - ");
            else if (m.c < 0)
                os << "-";
            first = false;
            os << std::abs(m.c);
            auto factor = [&](const char* base, double e) {
                if (e == 0.0) return;
                os << "*" << base;
                if (e != 1.0) os << "^" << e;
            };
            factor("x", m.px);
            factor("(1-x)", m.pm);
            factor("(1+x)", m.pp);
            if (m.g != 0.0 || m.h != 0.0) {
                os << "*exp(";
                if (m.g != 0.0) os << m.g << "x";
                if (m.h != 0.0) os << (m.g != 0.0 ? std::string(m.h > 0 ? "+" : "") : std::string())
                                   << m.h << "x^2";
                os << ")";
            }
        }
        return os.str();
    }

private:
    void combine() {
        if (terms_.empty()) return;
        auto key = [](const ExpMonomial& m) {
            auto grid = [](double v) { return static_cast<long long>(std::llround(v * 1e9)); };
            return std::array<long long, 5>{grid(m.px), grid(m.pm), grid(m.pp), grid(m.g),
                                            grid(m.h)};
        };
        std::map<std::array<long long, 5>, ExpMonomial> grouped;
        for (const auto& m : terms_) {
            auto [it, inserted] = grouped.try_emplace(key(m), m);
            if (!inserted) it->second.c += m.c;
        }
        double max_c = 0.0;
        for (const auto& [k, m] : grouped) max_c = std::max(max_c, std::abs(m.c));
        terms_.clear();
        for (const auto& [k, m] : grouped)
            if (std::abs(m.c) > 1e-13 * max_c) terms_.push_back(m);
    }

    std::vector<ExpMonomial> terms_;
};

}  // namespace defcalc

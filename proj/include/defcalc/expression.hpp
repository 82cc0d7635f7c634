#pragma once

/**
 * @file expression.hpp
 * @brief Quasi-differential expressions of even order 2n:
 *
 *     tau u = sum_{k=0}^{n} (-1)^{n-k} (p_k u^{(n-k)})^{(n-k)},
 *
 * together with the quasi-derivative ladder
 *
 *     u^[k]   = u^(k),            0 <= k <= n-1,
 *     u^[n]   = p_0 u^(n),
 *     u^[n+k] = p_k u^[n-k] - (u^[n+k-1])',   1 <= k <= n,
 *
 * so that tau u = u^[2n].  Weighted families act as w^{-1} tau in L^2(w dx).
 *
 * Coefficient functions carry a closed symbolic form where one exists (all
 * classical builders); generic numeric coefficients fall back to central
 * differences with step h = eps^(1/3) * scale.
 */

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "defcalc/symbolic.hpp"

namespace defcalc {

/// A coefficient function on the expression's interval.  Evaluation is always
/// available; differentiation uses the symbolic form when present.
class Coefficient {
public:
    Coefficient() : Coefficient(SymFunc::constant(0.0)) {}

    Coefficient(SymFunc symbolic)  // NOLINT: implicit by design
        : symbolic_(std::move(symbolic)) {}

    Coefficient(std::function<double(double)> eval, int derivative_orders_available)
        : eval_(std::move(eval)), fd_orders_(derivative_orders_available) {}

    static Coefficient one() { return Coefficient(SymFunc::constant(1.0)); }
    static Coefficient zero() { return Coefficient(SymFunc::constant(0.0)); }

    bool has_symbolic() const { return symbolic_.has_value(); }
    const SymFunc& symbolic() const {
        if (!symbolic_) throw std::domain_error("Coefficient: no symbolic form");
        return *symbolic_;
    }

    bool is_zero() const { return symbolic_ && symbolic_->is_zero(); }

    double operator()(double x) const { return symbolic_ ? symbolic_->evaluate(x) : eval_(x); }

    Coefficient derivative() const {
        if (symbolic_) return Coefficient(symbolic_->derivative());
        if (fd_orders_ < 1)
            throw std::domain_error("Coefficient: derivative not available for this coefficient");
        auto f = eval_;
        const double h0 = std::cbrt(std::numeric_limits<double>::epsilon());
        return Coefficient(
            [f, h0](double x) {
                const double h = h0 * (1.0 + std::abs(x));
                return (f(x + h) - f(x - h)) / (2.0 * h);
            },
            fd_orders_ - 1);
    }

    friend Coefficient operator*(const Coefficient& a, const Coefficient& b) {
        if (a.symbolic_ && b.symbolic_) return Coefficient(*a.symbolic_ * *b.symbolic_);
        return Coefficient([a, b](double x) { return a(x) * b(x); },
                           std::min(a.fd_orders_, b.fd_orders_));
    }

    friend Coefficient operator+(const Coefficient& a, const Coefficient& b) {
        if (a.symbolic_ && b.symbolic_) return Coefficient(*a.symbolic_ + *b.symbolic_);
        return Coefficient([a, b](double x) { return a(x) + b(x); },
                           std::min(a.fd_orders_, b.fd_orders_));
    }

    friend Coefficient operator*(double s, const Coefficient& a) {
        if (a.symbolic_) return Coefficient(s * *a.symbolic_);
        return Coefficient([s, a](double x) { return s * a(x); }, a.fd_orders_);
    }

private:
    std::optional<SymFunc> symbolic_;
    std::function<double(double)> eval_;
    int fd_orders_ = std::numeric_limits<int>::max();
};

enum class EndpointKind { regular, singular, unknown };

struct Interval {
    double a = 0.0;
    double b = 1.0;  ///< +-inf allowed
    EndpointKind a_kind = EndpointKind::unknown;
    EndpointKind b_kind = EndpointKind::unknown;

    bool a_infinite() const { return std::isinf(a); }
    bool b_infinite() const { return std::isinf(b); }

    /// Canonical interior anchor point.
    double anchor() const {
        if (!a_infinite() && !b_infinite()) return 0.5 * (a + b);
        if (a_infinite() && b_infinite()) return 0.0;
        if (a_infinite()) return b - 1.0;
        return a + 1.0;
    }
};

/// Carrier for a test function with explicitly supplied derivatives.
struct FunctionWithDerivatives {
    std::function<double(double, int)> d;  ///< (x, order) -> value
    int max_order = 0;

    double operator()(double x, int order = 0) const {
        if (order > max_order)
            throw std::invalid_argument("FunctionWithDerivatives: derivative order " +
                                        std::to_string(order) + " not supplied");
        return d(x, order);
    }
};

/// Test function from a closed symbolic form (derivatives exact).
inline FunctionWithDerivatives make_function(const SymFunc& f, int max_order) {
    auto derivs = std::make_shared<std::vector<SymFunc>>();
    derivs->push_back(f);
    for (int k = 1; k <= max_order; ++k) derivs->push_back(derivs->back().derivative());
    return {[derivs](double x, int k) { return (*derivs)[static_cast<std::size_t>(k)].evaluate(x); },
            max_order};
}

/// Polynomial test function a0 + a1 x + ... (derivatives exact).
inline FunctionWithDerivatives make_polynomial(const std::vector<double>& coeffs, int max_order) {
    std::vector<ExpMonomial> terms;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0.0) terms.push_back({coeffs[k], static_cast<double>(k), 0, 0, 0, 0});
    return make_function(SymFunc(std::move(terms)), max_order);
}

/// u_beta(x) = (1-x)^beta.
inline FunctionWithDerivatives make_u_beta(double beta, int max_order = 8) {
    return make_function(SymFunc::term(1.0, 0, beta, 0), max_order);
}

/// (1-x)^beta * ln(1-x); shows up as the degenerate kernel direction when two
/// Frobenius exponents collide.
inline FunctionWithDerivatives make_u_beta_log(double beta, int max_order = 8) {
    // k-th derivative has the form (1-x)^(beta-k) (a_k ln(1-x) + b_k).
    auto coeffs = std::make_shared<std::vector<std::pair<double, double>>>();
    coeffs->push_back({1.0, 0.0});
    for (int k = 1; k <= max_order; ++k) {
        const auto [a, b] = coeffs->back();
        const double e = beta - (k - 1);
        coeffs->push_back({-e * a, -e * b - a});
    }
    return {[coeffs, beta](double x, int k) {
                const auto [a, b] = (*coeffs)[static_cast<std::size_t>(k)];
                const double p = std::pow(1.0 - x, beta - k);
                return p * (a * std::log(1.0 - x) + b);
            },
            max_order};
}

/// A formally symmetric quasi-differential expression of order 2n.
struct Expression {
    std::string name;
    int n = 1;                      ///< half-order; order is 2n
    std::vector<Coefficient> p;     ///< p[0..n]; p[0] is the leading coefficient
    Coefficient weight = Coefficient::one();
    Interval interval;

    int order() const { return 2 * n; }
    bool weighted() const {
        return !(weight.has_symbolic() && weight.symbolic().is_single_term() &&
                 weight.symbolic().terms()[0].c == 1.0 && weight.symbolic().terms()[0].px == 0 &&
                 weight.symbolic().terms()[0].pm == 0 && weight.symbolic().terms()[0].pp == 0 &&
                 weight.symbolic().terms()[0].g == 0 && weight.symbolic().terms()[0].h == 0);
    }
};

namespace detail {

/// Differential operator as a list of coefficient functions by derivative
/// order: op(u) = sum_i coeff[i] * u^(i).
using OperatorCoeffs = std::vector<Coefficient>;

inline OperatorCoeffs derive_operator(const OperatorCoeffs& op) {
    OperatorCoeffs out(op.size() + 1, Coefficient::zero());
    for (std::size_t i = 0; i < op.size(); ++i) {
        out[i] = out[i] + op[i].derivative();
        out[i + 1] = out[i + 1] + op[i];
    }
    return out;
}

inline OperatorCoeffs scale_operator(const Coefficient& c, const OperatorCoeffs& op) {
    OperatorCoeffs out;
    out.reserve(op.size());
    for (const auto& ci : op) out.push_back(c * ci);
    return out;
}

/// The full quasi-derivative ladder of an expression as operators on u:
/// entry k gives u^[k] = sum_i coeff[i] u^(i).
inline std::vector<OperatorCoeffs> ladder_operators(const Expression& e) {
    const int n = e.n;
    std::vector<OperatorCoeffs> L(static_cast<std::size_t>(2 * n) + 1);
    for (int k = 0; k < n; ++k) {
        L[k] = OperatorCoeffs(static_cast<std::size_t>(k) + 1, Coefficient::zero());
        L[k][static_cast<std::size_t>(k)] = Coefficient::one();
    }
    L[n] = OperatorCoeffs(static_cast<std::size_t>(n) + 1, Coefficient::zero());
    L[n][static_cast<std::size_t>(n)] = e.p[0];
    for (int k = 1; k <= n; ++k) {
        OperatorCoeffs d = derive_operator(L[static_cast<std::size_t>(n + k - 1)]);
        OperatorCoeffs s = scale_operator(e.p[static_cast<std::size_t>(k)],
                                          L[static_cast<std::size_t>(n - k)]);
        OperatorCoeffs out(std::max(d.size(), s.size()), Coefficient::zero());
        for (std::size_t i = 0; i < s.size(); ++i) out[i] = out[i] + s[i];
        for (std::size_t i = 0; i < d.size(); ++i) out[i] = out[i] + (-1.0 * d[i]);
        L[static_cast<std::size_t>(n + k)] = std::move(out);
    }
    return L;
}

inline double evaluate_operator(const OperatorCoeffs& op, const FunctionWithDerivatives& u,
                                double x) {
    double v = 0.0;
    for (std::size_t i = 0; i < op.size(); ++i)
        v += op[i](x) * u(x, static_cast<int>(i));
    return v;
}

inline double binom(int n, int k) {
    double b = 1.0;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

}  // namespace detail

/// The values u^[0](x), ..., u^[2n](x); the last entry equals (tau u)(x)
/// (unweighted, i.e. the formal expression).
inline std::vector<double> quasi_derivatives(const Expression& e,
                                             const FunctionWithDerivatives& u, double x) {
    if (u.max_order < e.order())
        throw std::invalid_argument("quasi_derivatives: function must supply derivatives to order " +
                                    std::to_string(e.order()));
    const auto L = detail::ladder_operators(e);
    std::vector<double> values;
    values.reserve(L.size());
    for (const auto& op : L) values.push_back(detail::evaluate_operator(op, u, x));
    return values;
}

/// (tau u)(x) through the ladder, divided by the weight for weighted families
/// (the operator action in L^2(w dx)).
inline double apply(const Expression& e, const FunctionWithDerivatives& u, double x) {
    const auto values = quasi_derivatives(e, u, x);
    return values.back() / e.weight(x);
}

inline std::vector<double> apply(const Expression& e, const FunctionWithDerivatives& u,
                                 const std::vector<double>& xs) {
    std::vector<double> out;
    out.reserve(xs.size());
    for (double x : xs) out.push_back(apply(e, u, x));
    return out;
}

/// (tau u)(x) through the expanded sum (-1)^(n-k) (p_k u^(n-k))^(n-k),
/// weight-divided.  Algebraically identical to the ladder route; kept as an
/// independent evaluation path.
inline double apply_expanded(const Expression& e, const FunctionWithDerivatives& u, double x) {
    const int n = e.n;
    if (u.max_order < 2 * n)
        throw std::invalid_argument("apply_expanded: insufficient derivative data");
    double total = 0.0;
    for (int k = 0; k <= n; ++k) {
        const int d = n - k;  // outer derivative order
        // Leibniz: (p_k u^(d))^(d) = sum_r C(d,r) p_k^(d-r) u^(d+r)
        std::vector<Coefficient> pk_derivs{e.p[static_cast<std::size_t>(k)]};
        for (int r = 0; r < d; ++r) pk_derivs.push_back(pk_derivs.back().derivative());
        double term = 0.0;
        for (int r = 0; r <= d; ++r)
            term += detail::binom(d, r) * pk_derivs[static_cast<std::size_t>(d - r)](x) *
                    u(x, d + r);
        total += ((n - k) % 2 == 0 ? 1.0 : -1.0) * term;
    }
    return total / e.weight(x);
}

/// Apply the formal expression to a symbolic function, returning the symbolic
/// result divided by the weight.  Requires symbolic coefficients and a
/// single-term weight.  This is the engine behind the m-fold power oracle.
inline SymFunc apply_symbolic(const Expression& e, const SymFunc& f) {
    const int n = e.n;
    SymFunc total;
    for (int k = 0; k <= n; ++k) {
        if (!e.p[static_cast<std::size_t>(k)].has_symbolic())
            throw std::domain_error("apply_symbolic: non-symbolic coefficient");
        const SymFunc inner = e.p[static_cast<std::size_t>(k)].symbolic() * f.derivative(n - k);
        const SymFunc term = inner.derivative(n - k);
        total = total + (((n - k) % 2 == 0) ? 1.0 : -1.0) * term;
    }
    if (!e.weight.has_symbolic())
        throw std::domain_error("apply_symbolic: non-symbolic weight");
    return e.weight.symbolic().reciprocal() * total;
}

inline SymFunc apply_symbolic_power(const Expression& e, SymFunc f, unsigned m) {
    for (unsigned i = 0; i < m; ++i) f = apply_symbolic(e, f);
    return f;
}

// ---------------------------------------------------------------------------
// Classical builders
// ---------------------------------------------------------------------------

/// -d^2/dx^2 + (alpha^2 - 1/4)/(1-x)^2 on [0,1); regular at 0, singular at 1.
inline Expression bessel_alpha(double alpha) {
    if (!(alpha >= 1.0)) throw std::invalid_argument("bessel_alpha: alpha must be >= 1");
    Expression e;
    e.name = "bessel_alpha(" + std::to_string(alpha) + ")";
    e.n = 1;
    e.p = {Coefficient::one(), Coefficient(SymFunc::term(alpha * alpha - 0.25, 0, -2, 0))};
    e.interval = {0.0, 1.0, EndpointKind::regular, EndpointKind::singular};
    return e;
}

/// The square of bessel_alpha in closed form (order 4).
inline Expression bessel4_alpha(double alpha) {
    if (!(alpha >= 1.0)) throw std::invalid_argument("bessel4_alpha: alpha must be >= 1");
    const double a2 = alpha * alpha;
    Expression e;
    e.name = "bessel4_alpha(" + std::to_string(alpha) + ")";
    e.n = 2;
    e.p = {Coefficient::one(), Coefficient(SymFunc::term(2.0 * a2 - 0.5, 0, -2, 0)),
           Coefficient(SymFunc::term(a2 * a2 - 6.5 * a2 + 25.0 / 16.0, 0, -4, 0))};
    e.interval = {0.0, 1.0, EndpointKind::regular, EndpointKind::singular};
    return e;
}

/// -d^2/dx^2 + (gamma^2 - 1/4)/x^2 on (0,infty).
inline Expression bessel_gamma(double gamma) {
    if (!(gamma >= 0.0)) throw std::invalid_argument("bessel_gamma: gamma must be >= 0");
    Expression e;
    e.name = "bessel_gamma(" + std::to_string(gamma) + ")";
    e.n = 1;
    e.p = {Coefficient::one(),
           Coefficient(SymFunc::term(gamma * gamma - 0.25, -2, 0, 0))};
    e.interval = {0.0, std::numeric_limits<double>::infinity(),
                  gamma == 0.5 ? EndpointKind::regular : EndpointKind::singular,
                  EndpointKind::singular};
    return e;
}

/// Radial channel expression -d^2/dr^2 + (l(l+n-2) - L(L+n-2))/r^2 on (0,infty).
inline Expression bessel_channel(int dim, int ell, int big_l, double alpha) {
    if (dim < 2 || ell < 0 || big_l < 0 || !(alpha >= -0.25 && alpha < 0.75))
        throw std::invalid_argument("bessel_channel: parameters out of range");
    const double c = static_cast<double>(ell) * (ell + dim - 2) -
                     static_cast<double>(big_l) * (big_l + dim - 2);
    Expression e;
    e.name = "bessel_channel(n=" + std::to_string(dim) + ",l=" + std::to_string(ell) +
             ",L=" + std::to_string(big_l) + ",alpha=" + std::to_string(alpha) + ")";
    e.n = 1;
    e.p = {Coefficient::one(), Coefficient(SymFunc::term(c, -2, 0, 0))};
    e.interval = {0.0, std::numeric_limits<double>::infinity(), EndpointKind::unknown,
                  EndpointKind::singular};
    return e;
}

/// -d/dx (1-x^2) d/dx on (-1,1); singular (limit circle) at both endpoints.
inline Expression legendre() {
    Expression e;
    e.name = "legendre";
    e.n = 1;
    e.p = {Coefficient(SymFunc::term(1.0, 0, 1, 1)), Coefficient::zero()};
    e.interval = {-1.0, 1.0, EndpointKind::singular, EndpointKind::singular};
    return e;
}

/// Laguerre expression in L^2((0,infty); x^alpha e^-x dx).
inline Expression laguerre(double alpha) {
    if (!(alpha > -1.0)) throw std::invalid_argument("laguerre: alpha must be > -1");
    Expression e;
    e.name = "laguerre(" + std::to_string(alpha) + ")";
    e.n = 1;
    e.p = {Coefficient(SymFunc::term(1.0, alpha + 1.0, 0, 0, -1.0, 0)), Coefficient::zero()};
    e.weight = Coefficient(SymFunc::term(1.0, alpha, 0, 0, -1.0, 0));
    e.interval = {0.0, std::numeric_limits<double>::infinity(),
                  alpha < 0.0 ? EndpointKind::regular : EndpointKind::singular,
                  EndpointKind::singular};
    return e;
}

/// Hermite expression in L^2(R; e^{-x^2} dx).
inline Expression hermite() {
    Expression e;
    e.name = "hermite";
    e.n = 1;
    e.p = {Coefficient(SymFunc::term(1.0, 0, 0, 0, 0, -1.0)), Coefficient::zero()};
    e.weight = Coefficient(SymFunc::term(1.0, 0, 0, 0, 0, -1.0));
    e.interval = {-std::numeric_limits<double>::infinity(),
                  std::numeric_limits<double>::infinity(), EndpointKind::singular,
                  EndpointKind::singular};
    return e;
}

/// Jacobi expression in L^2((-1,1); (1-x)^alpha (1+x)^beta dx).
inline Expression jacobi(double alpha, double beta) {
    if (!(alpha > -1.0 && beta > -1.0))
        throw std::invalid_argument("jacobi: alpha, beta must be > -1");
    Expression e;
    e.name = "jacobi(" + std::to_string(alpha) + "," + std::to_string(beta) + ")";
    e.n = 1;
    e.p = {Coefficient(SymFunc::term(1.0, 0, alpha + 1.0, beta + 1.0)), Coefficient::zero()};
    e.weight = Coefficient(SymFunc::term(1.0, 0, alpha, beta));
    e.interval = {-1.0, 1.0, beta < 0.0 ? EndpointKind::regular : EndpointKind::singular,
                  alpha < 0.0 ? EndpointKind::regular : EndpointKind::singular};
    return e;
}

/// -d/dx (1/6)(x+1)^4 d/dx + (x+1)^2 on [0,infty).
inline Expression chaudhuri_everitt() {
    Expression e;
    e.name = "chaudhuri_everitt";
    e.n = 1;
    e.p = {Coefficient(SymFunc::term(1.0 / 6.0, 0, 0, 4)),
           Coefficient(SymFunc::term(1.0, 0, 0, 2))};
    e.interval = {0.0, std::numeric_limits<double>::infinity(), EndpointKind::regular,
                  EndpointKind::singular};
    return e;
}

/// Named lookup used by the CLI.
inline Expression build_classical(const std::string& name, const std::vector<double>& params = {}) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("build_classical: '" + name + "' takes " +
                                        std::to_string(k) + " parameter(s)");
    };
    if (name == "bessel_alpha") { need(1); return bessel_alpha(params[0]); }
    if (name == "bessel4_alpha") { need(1); return bessel4_alpha(params[0]); }
    if (name == "bessel_gamma") { need(1); return bessel_gamma(params[0]); }
    if (name == "bessel_channel") {
        need(4);
        return bessel_channel(static_cast<int>(params[0]), static_cast<int>(params[1]),
                              static_cast<int>(params[2]), params[3]);
    }
    if (name == "legendre") { need(0); return legendre(); }
    if (name == "laguerre") { need(1); return laguerre(params[0]); }
    if (name == "hermite") { need(0); return hermite(); }
    if (name == "jacobi") { need(2); return jacobi(params[0], params[1]); }
    if (name == "chaudhuri_everitt") { need(0); return chaudhuri_everitt(); }
    throw std::invalid_argument("build_classical: unknown expression '" + name + "'");
}

// ---------------------------------------------------------------------------
// Symbolic squaring
// ---------------------------------------------------------------------------

namespace detail {

/// Raw-derivative form of a second-order expression: c0 + c1 D + c2 D^2.
inline std::vector<SymFunc> raw_second_order(const Expression& e) {
    if (e.n != 1) throw std::invalid_argument("raw_second_order: order-2 expression required");
    for (const auto& c : e.p)
        if (!c.has_symbolic())
            throw std::domain_error("raw_second_order: symbolic coefficients required");
    const SymFunc p0 = e.p[0].symbolic();
    const SymFunc p1 = e.p[1].symbolic();
    // -(p0 u')' + p1 u = -p0' u' - p0 u'' + p1 u
    return {p1, (-1.0) * p0.derivative(), (-1.0) * p0};
}

/// Composition of raw-derivative operators via Leibniz.
inline std::vector<SymFunc> compose_raw(const std::vector<SymFunc>& a,
                                        const std::vector<SymFunc>& b) {
    std::vector<SymFunc> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        // a_i D^i (b_j u^(j)) = a_i sum_r C(i,r) b_j^(i-r) u^(j+r)
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            for (std::size_t r = 0; r <= i; ++r) {
                const double c = binom(static_cast<int>(i), static_cast<int>(r));
                out[j + r] = out[j + r] +
                             c * (a[i] * b[j].derivative(static_cast<int>(i - r)));
            }
        }
    }
    return out;
}

}  // namespace detail

/// Symbolic square of an order-2 expression, returned in Lagrangian symmetric
/// form D^2 A D^2 - D B D + C.  Throws if the raw square fails the symmetry
/// identities c3 = 2A' and c1 = -B' (checked at interior samples).
inline Expression compose_square(const Expression& e, double check_tol = 1e-9) {
    auto raw = detail::compose_raw(detail::raw_second_order(e), detail::raw_second_order(e));
    // Lagrangian extraction: A u'''' + 2A'u''' + (A''-B)u'' - B'u' + C u.
    const SymFunc A = (raw[4].is_zero() ? SymFunc::constant(0.0) : raw[4]);
    const SymFunc B = A.derivative(2) - raw[2];
    const SymFunc C = raw[0];

    const SymFunc sym3 = raw[3] - 2.0 * A.derivative();
    const SymFunc sym1 = raw[1] + B.derivative();
    const Interval iv = e.interval;
    const double lo = iv.a_infinite() ? iv.anchor() - 2.0 : iv.a;
    const double hi = iv.b_infinite() ? iv.anchor() + 2.0 : iv.b;
    for (int i = 1; i <= 7; ++i) {
        const double x = lo + (hi - lo) * i / 8.0;
        const double scale = 1.0 + std::abs(A.derivative()(x)) + std::abs(B.derivative()(x));
        if (std::abs(sym3.evaluate(x)) > check_tol * scale ||
            std::abs(sym1.evaluate(x)) > check_tol * scale)
            throw std::runtime_error("compose_square: raw square is not Lagrangian symmetric");
    }

    Expression out;
    out.name = "square(" + e.name + ")";
    out.n = 2;
    out.p = {Coefficient(A), Coefficient(B), Coefficient(C)};
    out.weight = e.weight;
    out.interval = e.interval;
    return out;
}

// ---------------------------------------------------------------------------
// Kernel exponents of the Bessel-type family on (0,1)
// ---------------------------------------------------------------------------

struct KernelExponent {
    double exponent;      ///< b with u(x) = (1-x)^b
    bool square_integrable;  ///< on (0,1): b > -1/2 (b = -1/2 diverges logarithmically)
};

/// Exponents b_j with tau u_{b_j} = 0; power 2 gives {1/2 +- alpha}, power 4
/// additionally {5/2 +- alpha}.
inline std::vector<KernelExponent> bessel_kernel_exponents(int power, double alpha) {
    if (power != 2 && power != 4)
        throw std::invalid_argument("bessel_kernel_exponents: power must be 2 or 4");
    if (!(alpha >= 1.0)) throw std::invalid_argument("bessel_kernel_exponents: alpha must be >= 1");
    auto flag = [](double b) { return KernelExponent{b, b > -0.5}; };
    std::vector<KernelExponent> out{flag(0.5 + alpha), flag(0.5 - alpha)};
    if (power == 4) {
        out.push_back(flag(2.5 + alpha));
        out.push_back(flag(2.5 - alpha));
    }
    return out;
}

}  // namespace defcalc

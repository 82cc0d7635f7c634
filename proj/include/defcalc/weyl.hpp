#pragma once

/**
 * @file weyl.hpp
 * @brief Numerical endpoint classification (regular / limit circle / limit
 *        point) and deficiency indices of minimal operators.
 *
 * Strategy.  For each endpoint, a full basis of 2n solutions of tau y = z w y
 * (z = i by default) is integrated from an interior anchor toward the
 * endpoint in the log-distance coordinate xi = ln(distance), over a geometric
 * sequence of checkpoints.  At every checkpoint the basis is re-orthonormalized
 * (modified Gram–Schmidt with per-column log-scale bookkeeping), which orders
 * the columns by growth and keeps the solution matrix well conditioned; each
 * column remains an exact solution since only column operations are applied.
 * The per-column log scales accumulate the triangular growth factors, so the
 * j-th column tracks the j-th growth rate of the solution space even when the
 * state directions nearly collapse.  Segments are cut early whenever the
 * growth spread or the weight drifts too far, and the run is truncated once
 * coefficient values leave the representable range (the growth data gathered
 * by then is decisive in every such case).
 *
 * For every filtered direction the classifier records the weighted integrand
 * F = |y|^2 w at the checkpoints.  Square integrability near the endpoint is
 * then decided twice:
 *
 *   (a) a local power-exponent fit of log F against log(distance) over the
 *       last decade of checkpoints, with a least-squares confidence interval;
 *   (b) decay of the tail-quadrature segment integrals (trapezoid sums of the
 *       recorded integrand), extrapolated geometrically.
 *
 * A verdict is issued only when both tests agree with a margin; disagreement
 * raises InconclusiveError rather than guessing.  The number d of square-
 * integrable directions gives the classification (d = 2n limit circle,
 * d = n limit point) and the deficiency indices n+ = n- = d_a + d_b - 2n.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "defcalc/expression.hpp"
#include "defcalc/extended.hpp"
#include "defcalc/ode.hpp"

namespace defcalc {

struct InconclusiveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IntegrationControls {
    double rtol = 1e-10;
    double atol = 1e-32;
    double endpoint_gap = 1e-8;     ///< closest approach distance (finite endpoints)
    double infinite_cutoff = 48.0;  ///< farthest reach (infinite endpoints)
    int fit_points = 10;            ///< checkpoints in the exponent-fit window
    double exponent_margin = 5e-3;  ///< minimal decision margin on the integrand exponent
    double quad_margin = 1e-2;      ///< minimal decision margin on the tail-decay slope
    double rescale_threshold = 25.0;    ///< |ln norm| triggering a column rescale
    double segment_drift_limit = 45.0;  ///< log-range forcing an early checkpoint
    double representable_log = 550.0;   ///< |ln| bound on coefficients before truncation
    double trust_gap = 30.0;  ///< growth gap to the dominant direction beyond which a
                              ///< subdominant column is below rounding and its records
                              ///< are discarded
    long max_steps = 400000;
};

enum class WhichEnd { left, right };

struct Endpoint {
    double location = 0.0;  ///< +-inf for infinite endpoints
    bool infinite = false;
    WhichEnd side = WhichEnd::right;
};

inline Endpoint endpoint_of(const Expression& e, WhichEnd side) {
    if (side == WhichEnd::left) return {e.interval.a, e.interval.a_infinite(), side};
    return {e.interval.b, e.interval.b_infinite(), side};
}

/// One filtered basis direction, sampled along the approach to the endpoint.
struct SolutionSample {
    std::complex<double> z;
    double anchor = 0.0;
    std::vector<double> x;          ///< positions of the records
    std::vector<double> distance;   ///< |x - endpoint| (finite) or |x - anchor| (infinite)
    std::vector<double> log_scale;  ///< per-record log magnitude of the direction
    std::vector<std::array<std::complex<double>, 4>> unit_state;  ///< scaled quasi-derivatives
    std::vector<double> log_integrand;  ///< ln(|y|^2 w) at the records
};

struct BasisIntegration {
    std::vector<SolutionSample> solutions;  ///< 2n directions, dominant first
    Endpoint endpoint;
    std::complex<double> z;
};

struct L2Evidence {
    double fitted_exponent = 0.0;  ///< slope of log F vs log(distance)
    double ci_halfwidth = 0.0;     ///< ~95% halfwidth of the slope estimate
    double tail_slope = 0.0;       ///< decay slope of the tail-quadrature integrals
    double tail_ci = 0.0;
    std::vector<double> log_tail_integrals;  ///< trapezoid segment integrals (log)
    bool fit_integrable = false;
    bool quad_integrable = false;
    bool endpoint_infinite = false;
};

struct L2Verdict {
    bool is_square_integrable = false;
    L2Evidence evidence;
};

enum class EndpointVerdictKind { regular, limit_circle, limit_point, intermediate };

inline std::string to_string(EndpointVerdictKind k) {
    switch (k) {
        case EndpointVerdictKind::regular: return "regular";
        case EndpointVerdictKind::limit_circle: return "limit_circle";
        case EndpointVerdictKind::limit_point: return "limit_point";
        case EndpointVerdictKind::intermediate: return "intermediate";
    }
    return "?";
}

struct EndpointClassification {
    EndpointVerdictKind kind = EndpointVerdictKind::regular;
    int l2_solution_count = 0;  ///< d, in [n, 2n]
    std::complex<double> z_used;
    std::vector<L2Verdict> verdicts;  ///< empty for analytically regular endpoints
};

namespace detail {

/// ln w(x), underflow-safe for symbolic weights.
inline double log_weight(const Coefficient& w, double x) {
    if (w.has_symbolic()) {
        const auto [lv, sign] = w.symbolic().log_evaluate(x);
        if (sign <= 0) throw std::domain_error("weight must be positive on the interior");
        return lv;
    }
    const double v = w(x);
    if (!(v > 0)) throw std::domain_error("weight must be positive on the interior");
    return std::log(v);
}

/// ln |c(x)| for a coefficient, +-inf-safe; used for the representability cap.
inline double log_magnitude(const Coefficient& c, double x) {
    if (c.is_zero()) return 0.0;
    if (c.has_symbolic()) return c.symbolic().log_evaluate(x).first;
    const double v = std::abs(c(x));
    return v > 0 ? std::log(v) : -std::numeric_limits<double>::infinity();
}

/// Analytic regularity test at a finite endpoint: 1/p0, p1..pn and w all have
/// local power exponent > -1 (symbolic coefficients only).
inline bool analytically_regular(const Expression& e, const Endpoint& ep) {
    if (ep.infinite) return false;
    for (const auto& c : e.p)
        if (!c.has_symbolic()) return false;
    if (!e.weight.has_symbolic()) return false;
    const double loc = ep.location;
    const SymFunc& p0 = e.p[0].symbolic();
    if (!p0.is_single_term()) return false;
    if (!(p0.reciprocal().endpoint_exponent(loc) > -1.0)) return false;
    for (std::size_t k = 1; k < e.p.size(); ++k) {
        const SymFunc& pk = e.p[k].symbolic();
        if (pk.is_zero()) continue;
        if (!(pk.endpoint_exponent(loc) > -1.0)) return false;
    }
    if (!(e.weight.symbolic().endpoint_exponent(loc) > -1.0)) return false;
    return true;
}

struct FitResult {
    double slope = 0.0;
    double ci = 0.0;  ///< 2 * standard error
    int points = 0;
};

inline FitResult fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
    const int n = static_cast<int>(xs.size());
    FitResult r;
    r.points = n;
    if (n < 3) throw InconclusiveError("exponent fit: fewer than 3 usable checkpoints");
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    double xspread = 0.0;
    for (double v : xs) xspread = std::max(xspread, std::abs(v - mx));
    if (xspread < 1e-6) throw InconclusiveError("exponent fit: degenerate abscissae");
    r.slope = sxy / sxx;
    double ss = 0.0;
    for (int i = 0; i < n; ++i) {
        const double resid = ys[i] - my - r.slope * (xs[i] - mx);
        ss += resid * resid;
    }
    const double sigma2 = (n > 2) ? ss / (n - 2) : 0.0;
    r.ci = 2.0 * std::sqrt(sigma2 / sxx);
    return r;
}

/// State layout: 2n columns of 2n quasi-derivative components.
class BasisIntegrator {
public:
    BasisIntegrator(const Expression& e, std::complex<double> z, Endpoint ep,
                    const IntegrationControls& controls)
        : e_(e), z_(z), ep_(ep), c_(controls), dim_(2 * e.n) {
        const double anchor = e_.interval.anchor();
        if (ep_.infinite) {
            base_ = anchor;
            sgn_ = (ep_.side == WhichEnd::right) ? +1.0 : -1.0;
            xi_start_ = 0.0;  // first record at distance 1 from the anchor
            xi_end_ = std::log(c_.infinite_cutoff);
        } else {
            base_ = ep_.location;
            sgn_ = (ep_.side == WhichEnd::right) ? -1.0 : +1.0;
            const double d0 = std::abs(ep_.location - anchor);
            xi_start_ = std::log(d0);
            xi_end_ = std::log(c_.endpoint_gap);
        }
        anchor_ = base_ + sgn_ * std::exp(xi_start_);
    }

    BasisIntegration run() {
        const int m = dim_;
        OdeState y;
        y.dim = static_cast<std::size_t>(m * m);
        for (int col = 0; col < m; ++col)
            for (int i = 0; i < m; ++i) y[idx(col, i)] = (i == col) ? 1.0 : 0.0;

        lambda_.assign(m, 0.0);
        samples_.assign(m, SolutionSample{});
        for (auto& s : samples_) {
            s.z = z_;
            s.anchor = anchor_;
        }

        const double dir = (xi_end_ > xi_start_) ? +1.0 : -1.0;
        double xi = xi_start_;

        // one checkpoint per factor 2 in distance; denser at infinite
        // endpoints, where the subdominant directions are observable only
        // over the first stretch of the run
        const double step = ep_.infinite ? std::log(2.0) / 3.0 : std::log(2.0);
        std::vector<double> planned;
        for (double v = xi_start_ + dir * step; dir * (xi_end_ - v) > -1e-12; v += dir * step)
            planned.push_back(v);
        if (planned.empty() || dir * (xi_end_ - planned.back()) > 1e-12)
            planned.push_back(xi_end_);

        checkpoint(xi, y);  // anchor record (identity basis; growth reference)

        auto rhs = [this](double xi_val, const OdeState& s, OdeState& ds) {
            rhs_eval(xi_val, s, ds);
        };

        bool truncated = false;
        for (double target : planned) {
            while (!truncated && dir * (target - xi) > 1e-12) {
                auto observer = [this](double xi_now, OdeState& state) {
                    rescale_columns(state);
                    return drift_exceeded(xi_now, state) || !representable(x_of(xi_now))
                               ? StepAction::stop
                               : StepAction::proceed;
                };
                OdeResult r = integrate_dopri5(rhs, xi, target, y, c_.rtol, c_.atol, observer,
                                               c_.max_steps);
                xi = r.reached;
                checkpoint(xi, y);
                // Stop when coefficients leave the representable range or the
                // growth spread exhausts the floating-point budget: beyond
                // that horizon the subdominant directions carry no
                // information and the dominant verdict is long decided.
                truncated = !representable(x_of(xi)) ||
                            lambda_.front() - lambda_.back() > c_.trust_gap + 15.0;
            }
            if (truncated) break;
        }

        BasisIntegration out;
        out.solutions = std::move(samples_);
        out.endpoint = ep_;
        out.z = z_;
        return out;
    }

private:
    int idx(int col, int comp) const { return col * dim_ + comp; }
    double x_of(double xi) const { return base_ + sgn_ * std::exp(xi); }

    bool representable(double x) const {
        if (std::abs(log_magnitude(e_.p[0], x)) > c_.representable_log) return false;
        if (std::abs(log_weight(e_.weight, x)) > c_.representable_log) return false;
        return true;
    }

    void rhs_eval(double xi, const OdeState& s, OdeState& ds) const {
        const double x = x_of(xi);
        const double dxdxi = sgn_ * std::exp(xi);
        const int n = e_.n;
        const int m = dim_;
        std::array<double, 3> p{};
        for (int k = 0; k <= n; ++k)
            p[static_cast<std::size_t>(k)] = e_.p[static_cast<std::size_t>(k)](x);
        if (p[0] == 0.0)
            throw std::runtime_error("leading coefficient vanished at x = " + std::to_string(x));
        const double w = e_.weight(x);

        for (int col = 0; col < m; ++col) {
            const std::complex<double>* u = &s.v[static_cast<std::size_t>(idx(col, 0))];
            std::complex<double>* du = &ds.v[static_cast<std::size_t>(idx(col, 0))];
            if (n == 1) {
                du[0] = u[1] / p[0];
                du[1] = (p[1] - z_ * w) * u[0];
            } else {
                du[0] = u[1];
                du[1] = u[2] / p[0];
                du[2] = p[1] * u[1] - u[3];
                du[3] = (p[2] - z_ * w) * u[0];
            }
            for (int i = 0; i < m; ++i) du[i] *= dxdxi;
        }
    }

    void rescale_columns(OdeState& y) {
        for (int col = 0; col < dim_; ++col) {
            double nrm = 0.0;
            for (int i = 0; i < dim_; ++i) nrm = std::max(nrm, std::abs(y[idx(col, i)]));
            if (nrm == 0.0 || !std::isfinite(nrm)) continue;
            const double ln_nrm = std::log(nrm);
            if (std::abs(ln_nrm) > c_.rescale_threshold) {
                for (int i = 0; i < dim_; ++i) y[idx(col, i)] /= nrm;
                lambda_[static_cast<std::size_t>(col)] += ln_nrm;
            }
        }
    }

    double column_growth(const OdeState& y, int col) const {
        double nrm = 0.0;
        for (int i = 0; i < dim_; ++i) nrm = std::max(nrm, std::abs(y[idx(col, i)]));
        return lambda_[static_cast<std::size_t>(col)] + (nrm > 0 ? std::log(nrm) : -1e30);
    }

    /// Cut the segment when, since the last checkpoint, any column grew or
    /// shrank too much, the columns drifted apart too far (conditioning), or
    /// the weight changed by too many orders of magnitude.
    bool drift_exceeded(double xi, const OdeState& y) const {
        const double x = x_of(xi);
        if (std::abs(detail::log_weight(e_.weight, x) - lnw_ref_) > c_.segment_drift_limit)
            return true;
        double rmin = 1e300, rmax = -1e300;
        for (int col = 0; col < dim_; ++col) {
            const double rel =
                column_growth(y, col) - seg_growth_ref_[static_cast<std::size_t>(col)];
            if (std::abs(rel) > c_.segment_drift_limit) return true;
            rmin = std::min(rmin, rel);
            rmax = std::max(rmax, rel);
        }
        return rmax - rmin > c_.segment_drift_limit;
    }

    /// Re-orthonormalize (dominant first) and append one record per column.
    void checkpoint(double xi, OdeState& y) {
        const int m = dim_;
        const double x = x_of(xi);
        const double lnw = detail::log_weight(e_.weight, x);

        std::vector<int> order(m);
        std::iota(order.begin(), order.end(), 0);
        std::vector<double> growth(m);
        for (int col = 0; col < m; ++col)
            growth[static_cast<std::size_t>(col)] = column_growth(y, col);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return growth[static_cast<std::size_t>(a)] > growth[static_cast<std::size_t>(b)];
        });

        std::vector<std::array<std::complex<double>, 4>> cols(m);
        std::vector<double> lam(m);
        for (int j = 0; j < m; ++j) {
            const int src = order[static_cast<std::size_t>(j)];
            for (int i = 0; i < m; ++i)
                cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = y[idx(src, i)];
            lam[static_cast<std::size_t>(j)] = lambda_[static_cast<std::size_t>(src)];
        }

        for (int j = 0; j < m; ++j) {
            auto& v = cols[static_cast<std::size_t>(j)];
            for (int i = 0; i < j; ++i) {
                const auto& q = cols[static_cast<std::size_t>(i)];
                std::complex<double> proj = 0.0;
                for (int kk = 0; kk < m; ++kk)
                    proj += std::conj(q[static_cast<std::size_t>(kk)]) *
                            v[static_cast<std::size_t>(kk)];
                for (int kk = 0; kk < m; ++kk)
                    v[static_cast<std::size_t>(kk)] -= proj * q[static_cast<std::size_t>(kk)];
            }
            double nrm = 0.0;
            for (int kk = 0; kk < m; ++kk) nrm += std::norm(v[static_cast<std::size_t>(kk)]);
            nrm = std::sqrt(nrm);
            if (!(nrm > 0.0) || !std::isfinite(nrm))
                throw InconclusiveError("basis degenerated during integration");
            for (int kk = 0; kk < m; ++kk) v[static_cast<std::size_t>(kk)] /= nrm;
            lam[static_cast<std::size_t>(j)] += std::log(nrm);
        }

        for (int j = 0; j < m; ++j) {
            for (int i = 0; i < m; ++i)
                y[idx(j, i)] = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            lambda_[static_cast<std::size_t>(j)] = lam[static_cast<std::size_t>(j)];
        }

        for (int j = 0; j < m; ++j) {
            auto& s = samples_[static_cast<std::size_t>(j)];
            const double u0 = std::abs(cols[static_cast<std::size_t>(j)][0]);
            s.x.push_back(x);
            s.distance.push_back(std::exp(xi));
            s.log_scale.push_back(lam[static_cast<std::size_t>(j)]);
            s.unit_state.push_back(cols[static_cast<std::size_t>(j)]);
            s.log_integrand.push_back(
                u0 > 0 ? 2.0 * (lam[static_cast<std::size_t>(j)] + std::log(u0)) + lnw : -1e30);
        }
        lnw_ref_ = lnw;
        for (int col = 0; col < m; ++col)
            seg_growth_ref_[static_cast<std::size_t>(col)] = column_growth(y, col);
    }

    const Expression& e_;
    std::complex<double> z_;
    Endpoint ep_;
    IntegrationControls c_;
    int dim_;
    double base_ = 0.0, sgn_ = 1.0, xi_start_ = 0.0, xi_end_ = 0.0, anchor_ = 0.0;
    double lnw_ref_ = 0.0;
    std::vector<double> lambda_;
    std::vector<double> seg_growth_ref_ = std::vector<double>(4, 0.0);
    std::vector<SolutionSample> samples_;
};

}  // namespace detail

/// Integrate a 2n-solution basis toward one endpoint (filtered by growth).
inline BasisIntegration integrate_toward_endpoint(const Expression& e, std::complex<double> z,
                                                  const Endpoint& ep,
                                                  const IntegrationControls& controls = {}) {
    if (e.n < 1 || e.n > 2)
        throw std::invalid_argument("integrate_toward_endpoint: orders 2 and 4 supported");
    detail::BasisIntegrator integ(e, z, ep, controls);
    return integ.run();
}

/// Square-integrability of one filtered direction near the endpoint, decided
/// by exponent fit and tail quadrature jointly.
inline L2Verdict l2_test(const SolutionSample& s, const Endpoint& ep,
                         const IntegrationControls& controls = {}) {
    const std::size_t total = s.x.size();
    if (total < 5) throw InconclusiveError("l2_test: too few checkpoints near the endpoint");

    auto usable = [&](std::size_t k) {
        return std::isfinite(s.log_integrand[k]) && s.log_integrand[k] > -1e29;
    };

    const std::size_t window =
        std::min<std::size_t>(static_cast<std::size_t>(controls.fit_points), total - 1);

    std::vector<double> lx, ly;
    for (std::size_t k = total - window; k < total; ++k) {
        if (!usable(k)) continue;  // node of an oscillating direction
        lx.push_back(std::log(s.distance[k]));
        ly.push_back(s.log_integrand[k]);
    }
    const detail::FitResult fit = detail::fit_line(lx, ly);

    // Tail quadrature: trapezoid integrals of the recorded integrand over the
    // recent segments, in log space.
    std::vector<double> qx, qy;
    for (std::size_t k = total - window; k + 1 < total; ++k) {
        if (!usable(k) || !usable(k + 1)) continue;
        const double dx = std::abs(s.x[k + 1] - s.x[k]);
        if (!(dx > 0)) continue;
        const double fa = s.log_integrand[k], fb = s.log_integrand[k + 1];
        const double fmax = std::max(fa, fb);
        const double log_trap =
            fmax + std::log(0.5 * (std::exp(fa - fmax) + std::exp(fb - fmax))) + std::log(dx);
        qx.push_back(std::log(s.distance[k + 1]));
        qy.push_back(log_trap);
    }
    const detail::FitResult quad = detail::fit_line(qx, qy);

    L2Evidence ev;
    ev.fitted_exponent = fit.slope;
    ev.ci_halfwidth = fit.ci;
    ev.tail_slope = quad.slope;
    ev.tail_ci = quad.ci;
    ev.log_tail_integrals = qy;
    ev.endpoint_infinite = ep.infinite;

    const double fit_gate = std::max(fit.ci, controls.exponent_margin);
    const double quad_gate = std::max(quad.ci, controls.quad_margin);
    if (!ep.infinite) {
        // integrand ~ delta^e integrable iff e > -1; segment integrals ~ delta^(e+1)
        ev.fit_integrable = fit.slope > -1.0 + fit_gate;
        ev.quad_integrable = quad.slope > 0.0 + quad_gate;
    } else {
        // at infinity: integrable iff e < -1; segment integrals must decay
        ev.fit_integrable = fit.slope < -1.0 - fit_gate;
        ev.quad_integrable = quad.slope < 0.0 - quad_gate;
    }

    if (ev.fit_integrable != ev.quad_integrable)
        throw InconclusiveError(
            "l2_test: exponent fit and tail quadrature disagree (exponent " +
            std::to_string(ev.fitted_exponent) + " +- " + std::to_string(ev.ci_halfwidth) +
            ", tail slope " + std::to_string(ev.tail_slope) + " +- " +
            std::to_string(ev.tail_ci) + ")");

    return {ev.fit_integrable, ev};
}

/// Classify one endpoint; analytic regularity short-circuits the integration.
inline EndpointClassification classify_endpoint(const Expression& e, const Endpoint& ep,
                                                std::complex<double> z = {0.0, 1.0},
                                                const IntegrationControls& controls = {}) {
    EndpointClassification out;
    out.z_used = z;
    if (detail::analytically_regular(e, ep)) {
        out.kind = EndpointVerdictKind::regular;
        out.l2_solution_count = 2 * e.n;
        return out;
    }
    const BasisIntegration basis = integrate_toward_endpoint(e, z, ep, controls);
    int d = 0;
    const auto& dominant = basis.solutions.front();
    for (std::size_t j = 0; j < basis.solutions.size(); ++j) {
        SolutionSample s = basis.solutions[j];
        if (j > 0) {
            // Once the growth gap to the dominant direction exhausts the
            // floating-point budget, the filtered column is rounding noise;
            // keep only the records before that point.
            std::size_t keep = s.x.size();
            for (std::size_t k = 0; k < s.x.size(); ++k) {
                if (dominant.log_scale[k] - s.log_scale[k] > controls.trust_gap) {
                    keep = k;
                    break;
                }
            }
            if (keep < s.x.size()) {
                s.x.resize(keep);
                s.distance.resize(keep);
                s.log_scale.resize(keep);
                s.unit_state.resize(keep);
                s.log_integrand.resize(keep);
            }
        }
        out.verdicts.push_back(l2_test(s, ep, controls));
        if (out.verdicts.back().is_square_integrable) ++d;
    }
    if (d < e.n)
        throw InconclusiveError("classify_endpoint: fewer than n square-integrable directions (" +
                                std::to_string(d) + " of " + std::to_string(2 * e.n) +
                                "); numerical evidence is unreliable");
    out.l2_solution_count = d;
    if (d == 2 * e.n)
        out.kind = EndpointVerdictKind::limit_circle;
    else if (d == e.n)
        out.kind = EndpointVerdictKind::limit_point;
    else
        out.kind = EndpointVerdictKind::intermediate;
    return out;
}

struct ClassificationReport {
    EndpointClassification left;
    EndpointClassification right;
    DefectPair indices{0, 0};
};

/// Deficiency indices of the minimal operator: n+ = n- = d_a + d_b - 2n,
/// computed at z = i and verified again at z = -i (real coefficients).
inline ClassificationReport deficiency_indices_minimal(const Expression& e,
                                                       const IntegrationControls& controls = {}) {
    ClassificationReport rep;
    rep.left = classify_endpoint(e, endpoint_of(e, WhichEnd::left), {0.0, 1.0}, controls);
    rep.right = classify_endpoint(e, endpoint_of(e, WhichEnd::right), {0.0, 1.0}, controls);
    const int n_plus = rep.left.l2_solution_count + rep.right.l2_solution_count - 2 * e.n;

    const auto left_m = classify_endpoint(e, endpoint_of(e, WhichEnd::left), {0.0, -1.0}, controls);
    const auto right_m =
        classify_endpoint(e, endpoint_of(e, WhichEnd::right), {0.0, -1.0}, controls);
    const int n_minus = left_m.l2_solution_count + right_m.l2_solution_count - 2 * e.n;

    if (n_plus != n_minus)
        throw InconclusiveError("deficiency indices at +i and -i disagree (" +
                                std::to_string(n_plus) + " vs " + std::to_string(n_minus) + ")");
    if (n_plus < 0)
        throw InconclusiveError("negative deficiency count; classification unreliable");
    rep.indices = DefectPair{static_cast<std::uint64_t>(n_plus),
                             static_cast<std::uint64_t>(n_minus)};
    return rep;
}

}  // namespace defcalc

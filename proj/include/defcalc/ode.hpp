#pragma once

/**
 * @file ode.hpp
 * @brief Adaptive Dormand–Prince 5(4) integrator over complex states.
 *
 * Small fixed-capacity states (the quasi-derivative systems have dimension
 * at most 4 plus accumulators), deterministic step control, and an observer
 * hook after every accepted step so callers can rescale or cut segments.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <utility>

namespace defcalc {

constexpr std::size_t kMaxOdeDim = 24;

struct OdeState {
    std::array<std::complex<double>, kMaxOdeDim> v{};
    std::size_t dim = 0;

    std::complex<double>& operator[](std::size_t i) { return v[i]; }
    const std::complex<double>& operator[](std::size_t i) const { return v[i]; }
};

enum class StepAction { proceed, stop };

/// Integrate y' = f(t, y) from t0 to t1 (either direction).  The observer is
/// called after each accepted step with (t, y, h_next) and may mutate y
/// (rescaling) or request an early stop; `reached` reports the final t.
struct OdeResult {
    double reached = 0.0;
    long steps = 0;
    bool stopped_early = false;
};

inline OdeResult integrate_dopri5(
    const std::function<void(double, const OdeState&, OdeState&)>& f, double t0, double t1,
    OdeState& y, double rtol, double atol,
    const std::function<StepAction(double, OdeState&)>& observer = {}, long max_steps = 2000000) {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                            a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                            e4 = 125.0 / 192 - 393.0 / 640,
                            e5 = -2187.0 / 6784 + 92097.0 / 339200, e6 = 11.0 / 84 - 187.0 / 2100,
                            e7 = -1.0 / 40;

    const double dir = (t1 >= t0) ? 1.0 : -1.0;
    const double span = std::abs(t1 - t0);
    if (span == 0.0) return {t0, 0, false};

    OdeState k1, k2, k3, k4, k5, k6, k7, ytmp, ynew;
    k1.dim = k2.dim = k3.dim = k4.dim = k5.dim = k6.dim = k7.dim = ytmp.dim = ynew.dim = y.dim;

    double t = t0;
    double h = dir * std::min(0.1 * span, 0.1);
    OdeResult result;

    f(t, y, k1);
    while (dir * (t1 - t) > 1e-14 * (1.0 + std::abs(t))) {
        if (result.steps++ > max_steps)
            throw std::runtime_error("integrate_dopri5: step budget exceeded at t = " +
                                     std::to_string(t));
        if (dir * (t + h - t1) > 0) h = t1 - t;

        auto stage = [&](OdeState& out, std::initializer_list<std::pair<double, const OdeState*>>
                                            combo) {
            for (std::size_t i = 0; i < y.dim; ++i) {
                std::complex<double> acc = y[i];
                for (const auto& [w, k] : combo) acc += h * w * (*k)[i];
                out[i] = acc;
            }
        };

        stage(ytmp, {{a21, &k1}});
        f(t + c2 * h, ytmp, k2);
        stage(ytmp, {{a31, &k1}, {a32, &k2}});
        f(t + c3 * h, ytmp, k3);
        stage(ytmp, {{a41, &k1}, {a42, &k2}, {a43, &k3}});
        f(t + c4 * h, ytmp, k4);
        stage(ytmp, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}});
        f(t + c5 * h, ytmp, k5);
        stage(ytmp, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}});
        f(t + h, ytmp, k6);
        stage(ynew, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
        f(t + h, ynew, k7);

        double err = 0.0;
        for (std::size_t i = 0; i < y.dim; ++i) {
            const std::complex<double> ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                                                 e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double scale = atol + rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            if (scale > 0) err = std::max(err, std::abs(ei) / scale);
        }

        if (err <= 1.0 || std::abs(h) < 1e-13 * (1.0 + std::abs(t))) {
            t += h;
            y = ynew;
            k1 = k7;  // FSAL
            if (observer) {
                if (observer(t, y) == StepAction::stop) {
                    result.reached = t;
                    result.stopped_early = true;
                    return result;
                }
                f(t, y, k1);  // state may have been rescaled
            }
        }
        const double factor =
            (err > 0) ? std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0) : 5.0;
        h *= factor;
    }
    result.reached = t;
    return result;
}

}  // namespace defcalc

#pragma once

/**
 * @file channels.hpp
 * @brief Index bookkeeping for the PDE applications: spherical-channel
 *        decomposition of the inverse-square perturbed Laplacian, and rank-one
 *        singular restrictions of the Dirichlet Laplacian.
 *
 * The perturbed Laplacian on R^n splits into radial channels
 * -d^2/dr^2 + [l(l+n-2) - L(L+n-2)]/r^2 over l = 0, 1, 2, ...; channels with
 * l <= L contribute deficiency indices (1,1), all others (0,0), so the total
 * is (L+1, L+1) and the m-th power has (m(L+1), m(L+1)).  The tail l >= L+1
 * is certified analytically -- infinitely many channels cannot be integrated.
 */

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "defcalc/expression.hpp"
#include "defcalc/index_calculus.hpp"

namespace defcalc {

struct ChannelSpec {
    int dimension = 2;   ///< n >= 2
    int ell = 0;         ///< angular index l >= 0
    int big_l = 0;       ///< perturbation index L >= 0
    double alpha = 0.0;  ///< boundary parameter in [-1/4, 3/4)

    void validate() const {
        if (dimension < 2) throw std::invalid_argument("ChannelSpec: dimension must be >= 2");
        if (ell < 0 || big_l < 0) throw std::invalid_argument("ChannelSpec: l, L must be >= 0");
        if (!(alpha >= -0.25 && alpha < 0.75))
            throw std::invalid_argument("ChannelSpec: alpha must lie in [-1/4, 3/4)");
    }
};

/// Numerator of the channel potential: l(l+n-2) - L(L+n-2).
inline double channel_coefficient(int dimension, int ell, int big_l) {
    ChannelSpec{dimension, ell, big_l, 0.0}.validate();
    return static_cast<double>(ell) * (ell + dimension - 2) -
           static_cast<double>(big_l) * (big_l + dimension - 2);
}

/// Deficiency indices of one radial channel: (1,1) iff l <= L, else (0,0).
/// The boundary parameter alpha does not enter the displayed indices; it is
/// validated and carried through reports verbatim.
inline DefectPair channel_indices(const ChannelSpec& spec) {
    spec.validate();
    return spec.ell <= spec.big_l ? DefectPair{1, 1} : DefectPair{0, 0};
}

/// Radial expression of one channel, for numerical cross-validation.
inline Expression channel_expression(const ChannelSpec& spec) {
    spec.validate();
    return bessel_channel(spec.dimension, spec.ell, spec.big_l, spec.alpha);
}

struct ChannelRow {
    int ell = 0;
    DefectPair indices{0, 0};
};

struct DecompositionReport {
    int dimension = 2;
    int big_l = 0;
    double alpha = 0.0;
    std::vector<ChannelRow> channels;  ///< l = 0 .. L+2 shown explicitly
    bool tail_certified_zero = true;   ///< channels l >= L+1 are (0,0) analytically
    DefectPair total{0, 0};
    std::vector<std::pair<std::uint64_t, DefectPair>> power_table;  ///< m -> indices of the m-th power
};

/// Full decomposition report with the certified tail and the power table.
inline DecompositionReport decompose(int dimension, int big_l, double alpha,
                                     std::uint64_t m_max) {
    if (m_max < 1) throw std::invalid_argument("decompose: m_max must be >= 1");
    ChannelSpec{dimension, 0, big_l, alpha}.validate();
    DecompositionReport report;
    report.dimension = dimension;
    report.big_l = big_l;
    report.alpha = alpha;
    std::vector<DefectPair> parts;
    for (int ell = 0; ell <= big_l + 2; ++ell) {
        const DefectPair p = channel_indices({dimension, ell, big_l, alpha});
        report.channels.push_back({ell, p});
        parts.push_back(p);
    }
    report.total = direct_sum_indices(parts);  // tail channels are (0,0)
    for (std::uint64_t m = 1; m <= m_max; ++m)
        report.power_table.emplace_back(m, power_indices(report.total, m));
    return report;
}

/// Deficiency indices of the m-th power of a rank-one singular restriction of
/// the Dirichlet Laplacian: the base operator has indices (1,1), so the m-th
/// power has (m, m); the kernel of the adjoint of the m-th power has
/// dimension m.
inline DefectPair dirichlet_perturbation_indices(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("dirichlet_perturbation_indices: m must be >= 1");
    return power_indices(DefectPair{1, 1}, m);
}

}  // namespace defcalc

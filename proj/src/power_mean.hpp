#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "numeric.hpp"

namespace semifield::detail {

/// log of (sum_i w[i] exp(r * log_x[i]) / total)^{1/r} for finite r != 0.
///
/// `total` may exceed the sum of `w` when some mass sits on terms that
/// vanish. Near r = 0 the sum is expanded as s + sum_i w_i expm1(r log_x[i])
/// so the 1/r factor does not amplify cancellation; elsewhere it is a
/// max-shifted log-sum-exp. When `w` holds every weight, summed in the same
/// order as `total`, log(s / total) is exactly 0.
inline double log_power_mean(double r, std::span<const double> w, std::span<const double> log_x,
                             double total) {
    double s = 0.0;
    for (double wi : w) s += wi;
    double log_mass = s == total ? 0.0 : std::log(s / total);
    if (std::abs(r) < 0.5) {
        double t = 0.0;
        for (std::size_t i = 0; i < w.size(); ++i) t += w[i] * std::expm1(r * log_x[i]);
        return (log_mass + std::log1p(t / s)) / r;
    }
    std::vector<double> terms(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) terms[i] = std::log(w[i] / s) + r * log_x[i];
    return (log_mass + log_sum_exp(terms)) / r;
}

/// Whether x^r can be formed directly without leaving the normal range.
inline bool direct_power_is_safe(double r, std::span<const double> log_x) {
    if (std::abs(r) < 0.5 || std::abs(r) >= 100.0) return false;
    for (double lx : log_x) {
        if (std::abs(r * lx) > 600.0) return false;
    }
    return true;
}

}  // namespace semifield::detail

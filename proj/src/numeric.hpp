#pragma once

// Internal numeric helpers shared by the library sources.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

namespace semifield::detail {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Points strictly inside [lo, hi], spread over the interval even when one or
/// both endpoints are infinite.
inline std::vector<double> interior_samples(double lo, double hi) {
    static constexpr double fractions[] = {0.1, 0.25, 0.4, 0.5, 0.6, 0.75, 0.9};
    std::vector<double> out;
    for (double t : fractions) {
        double x = 0.0;
        if (std::isfinite(lo) && std::isfinite(hi)) {
            x = lo + t * (hi - lo);
        } else if (std::isfinite(lo)) {
            x = lo + t / (1.0 - t);
        } else if (std::isfinite(hi)) {
            x = hi - (1.0 - t) / t;
        } else {
            x = std::tan(std::numbers::pi * (t - 0.5));
        }
        out.push_back(x);
    }
    return out;
}

/// |a - b| <= rel * max(1, |a|, |b|), with infinities compared exactly.
inline bool close_enough(double a, double b, double rel) {
    if (!std::isfinite(a) || !std::isfinite(b)) return a == b;
    return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

/// log of sum of exp(terms); -inf for an empty or all -inf input.
inline double log_sum_exp(std::span<const double> terms) {
    double m = -kInf;
    for (double t : terms) m = std::max(m, t);
    if (m == -kInf) return -kInf;
    if (m == kInf) return kInf;
    double s = 0.0;
    for (double t : terms) s += std::exp(t - m);
    return m + std::log(s);
}

/// Logarithm in base b. Bases 2 and e go through the dedicated functions so
/// exact powers come out exact.
inline double log_base(double x, double base) {
    if (base == 2.0) return std::log2(x);
    if (base == std::numbers::e) return std::log(x);
    return std::log(x) / std::log(base);
}

inline double pow_base(double base, double x) {
    if (base == 2.0) return std::exp2(x);
    if (base == std::numbers::e) return std::exp(x);
    return std::pow(base, x);
}

}  // namespace semifield::detail

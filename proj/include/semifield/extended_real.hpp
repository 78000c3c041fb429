#pragma once

#include <cmath>
#include <compare>
#include <limits>

#include "semifield/errors.hpp"

namespace semifield {

/// A point of the extended real line [-inf, inf]. NaN is not a value of any
/// carrier, so construction from NaN throws DomainError.
class ExtendedReal {
public:
    static constexpr double inf = std::numeric_limits<double>::infinity();

    constexpr ExtendedReal() = default;

    // Implicit on purpose: carriers are subsets of the extended reals, and the
    // only thing this type adds over double is the NaN exclusion.
    constexpr ExtendedReal(double v) : v_(v) {
        if (v != v) {
            throw DomainError("NaN is not an element of any carrier");
        }
    }

    constexpr double value() const { return v_; }
    constexpr explicit operator double() const { return v_; }

    constexpr bool is_finite() const { return v_ > -inf && v_ < inf; }
    constexpr bool is_pos_inf() const { return v_ == inf; }
    constexpr bool is_neg_inf() const { return v_ == -inf; }

    static constexpr ExtendedReal pos_inf() { return ExtendedReal(inf); }
    static constexpr ExtendedReal neg_inf() { return ExtendedReal(-inf); }

    // -0.0 and 0.0 compare equal here, as they do in the carriers.
    friend constexpr bool operator==(ExtendedReal a, ExtendedReal b) { return a.v_ == b.v_; }
    friend constexpr std::partial_ordering operator<=>(ExtendedReal a, ExtendedReal b) {
        return a.v_ <=> b.v_;
    }

    constexpr ExtendedReal operator-() const { return ExtendedReal(-v_); }

private:
    double v_ = 0.0;
};

}  // namespace semifield

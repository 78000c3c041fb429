#pragma once

#include <functional>
#include <numbers>

#include "semifield/extended_real.hpp"
#include "semifield/semifield.hpp"

namespace semifield {

/// Order r of the power/entropic families and of the shifted Rényi
/// quantities, together with the logarithm base those quantities use.
/// Rényi's original index is alpha = r + 1.
class OrderParameter {
public:
    static constexpr double kDefaultBase = 2.0;

    explicit OrderParameter(ExtendedReal r, double base = kDefaultBase);

    static OrderParameter from_alpha(ExtendedReal alpha, double base = kDefaultBase);
    static OrderParameter natural(ExtendedReal r) { return OrderParameter(r, std::numbers::e); }

    double r() const { return r_; }
    double base() const { return base_; }
    double alpha() const { return r_ + 1.0; }

    /// r = 0: the power and entropic families degenerate there.
    bool is_degenerate() const { return r_ == 0.0; }
    bool is_finite() const { return std::isfinite(r_); }

    OrderParameter with_r(ExtendedReal r) const { return OrderParameter(r, base_); }

private:
    double r_;
    double base_;
};

enum class Monotonicity { increasing, decreasing };

/// A strictly monotone bijection g : [lo, hi] -> [0, inf] with its inverse.
struct Generator {
    std::function<double(double)> forward;
    std::function<double(double)> backward;
    Monotonicity monotonicity = Monotonicity::increasing;
    double lo = 0.0;
    double hi = ExtendedReal::inf;
    std::string name = "g";
};

/// Transports the operations of nnR through g:
///   u ⊕ v = g⁻¹(g(u) + g(v)),  u ⊗ v = g⁻¹(g(u) g(v)),
///   e = g⁻¹(1),                 u⁻¹ = g⁻¹(1 / g(u)).
/// An increasing g yields a semifield aligned with nnR (⊥ = lo); a decreasing
/// one yields the order dual (⊥ = hi). Throws InvalidSpecError when the
/// endpoint images, sampled monotonicity or round trip disagree with `g`.
Semifield from_generator(const Generator& g);

/// Power family R_r: u ⊕ v = (u^r + v^r)^{1/r}, ordinary product,
/// reciprocal inversion. R_1 = nnR, R_{-1} = nnR-dual, R_{±inf} are
/// max-times/min-times. Throws DegenerateFamilyError at r = 0.
Semifield real_family(const OrderParameter& p);

/// Entropic family H_r: u ⊕ v = u + v - log_b (b^{ru} + b^{rv})^{1/r},
/// ordinary sum as product, negation as inversion. With b = e, H_{-1} is the
/// hartley builtin and H_1 its dual; H_{+inf} is min-plus and H_{-inf}
/// max-plus. Throws DegenerateFamilyError at r = 0.
Semifield entropic_family(const OrderParameter& p);

/// Hartley's information function -log_b x on [0, inf] and its inverse b^{-h}.
ExtendedReal hartley_map(ExtendedReal x, double base = std::numbers::e);
ExtendedReal hartley_map_inverse(ExtendedReal h, double base = std::numbers::e);

/// Rényi's kernel h ↦ b^{-rh} with inverse p ↦ (-1/r) log_b p. Its
/// from_generator image is entropic_family(p). Requires finite r != 0.
Generator renyi_kernel(const OrderParameter& p);

}  // namespace semifield

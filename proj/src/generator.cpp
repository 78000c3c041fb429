#include "semifield/generator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "numeric.hpp"

namespace semifield {

OrderParameter::OrderParameter(ExtendedReal r, double base) : r_(r.value()), base_(base) {
    if (!(base > 1.0) || !std::isfinite(base)) {
        throw DomainError("logarithm base must be a finite number > 1");
    }
}

OrderParameter OrderParameter::from_alpha(ExtendedReal alpha, double base) {
    return OrderParameter(alpha.value() - 1.0, base);
}

namespace {

constexpr double kRoundTripTolerance = 1e-9;

std::string format_number(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

[[noreturn]] void reject(const Generator& g, const std::string& what) {
    throw InvalidSpecError("generator '" + g.name + "': " + what);
}

void validate(const Generator& g) {
    if (!g.forward || !g.backward) reject(g, "missing forward or backward map");
    if (!(g.lo < g.hi)) reject(g, "empty domain");

    bool increasing = g.monotonicity == Monotonicity::increasing;
    double at_lo = g.forward(g.lo);
    double at_hi = g.forward(g.hi);
    double want_lo = increasing ? 0.0 : detail::kInf;
    double want_hi = increasing ? detail::kInf : 0.0;
    if (at_lo != want_lo || at_hi != want_hi) {
        reject(g, "endpoint images (" + format_number(at_lo) + ", " + format_number(at_hi) +
                      ") do not match the monotonicity flag");
    }

    auto pts = detail::interior_samples(g.lo, g.hi);
    double prev = at_lo;
    for (double x : pts) {
        double y = g.forward(x);
        if (std::isnan(y) || (increasing ? !(y > prev) : !(y < prev))) {
            reject(g, "forward map is not strictly monotone as flagged near " + format_number(x));
        }
        prev = y;
        if (!detail::close_enough(g.backward(y), x, kRoundTripTolerance)) {
            reject(g, "backward(forward(x)) != x at " + format_number(x));
        }
    }
}

double power_add(double q, double u, double v) {
    if (q == 1.0) return u + v;
    double m = std::max(u, v);
    double n = std::min(u, v);
    // Scaling by the larger operand keeps (n/m)^q in [0, 1].
    return m * std::pow(1.0 + std::pow(n / m, q), 1.0 / q);
}

double soft_max(double q, double base, double u, double v) {
    double m = std::max(u, v);
    double n = std::min(u, v);
    return m + std::log1p(detail::pow_base(base, -q * (m - n))) / (q * std::log(base));
}

}  // namespace

Semifield from_generator(const Generator& g) {
    validate(g);
    bool increasing = g.monotonicity == Monotonicity::increasing;

    SemifieldSpec spec;
    spec.name = "gen(" + g.name + ")";
    spec.bottom = increasing ? g.lo : g.hi;
    spec.top = increasing ? g.hi : g.lo;
    spec.unit = g.backward(1.0) + 0.0;
    spec.add = [f = g.forward, b = g.backward](double u, double v) { return b(f(u) + f(v)); };
    spec.mul = [f = g.forward, b = g.backward](double u, double v) { return b(f(u) * f(v)); };
    spec.inverse = [f = g.forward, b = g.backward](double u) { return b(1.0 / f(u)); };
    return complete_pair(std::move(spec)).primal;
}

Semifield real_family(const OrderParameter& p) {
    double r = p.r();
    if (p.is_degenerate()) {
        throw DegenerateFamilyError("R_0 is not a semifield: its addition and product coincide");
    }
    if (r == detail::kInf) return builtin("max-times");
    if (r == -detail::kInf) return builtin("min-times");

    double q = std::abs(r);
    SemifieldSpec spec;
    spec.name = "R_" + format_number(q);
    spec.dual_name = "R_" + format_number(-q);
    spec.bottom = 0.0;
    spec.unit = 1.0;
    spec.top = detail::kInf;
    spec.add = [q](double u, double v) { return power_add(q, u, v); };
    spec.mul = [](double u, double v) { return u * v; };
    spec.inverse = [](double u) { return 1.0 / u; };
    spec.idempotent = false;
    DualPair pair = complete_pair(std::move(spec));
    return r > 0 ? pair.primal : pair.dual;
}

Semifield entropic_family(const OrderParameter& p) {
    double r = p.r();
    if (p.is_degenerate()) {
        throw DegenerateFamilyError("H_0 is not a semifield: its addition and product coincide");
    }
    if (r == detail::kInf) return builtin("min-plus");
    if (r == -detail::kInf) return builtin("max-plus");

    double q = std::abs(r);
    double base = p.base();
    std::string suffix = "[b=" + format_number(base) + "]";
    SemifieldSpec spec;
    spec.name = "H_" + format_number(-q) + suffix;
    spec.dual_name = "H_" + format_number(q) + suffix;
    spec.bottom = -detail::kInf;
    spec.unit = 0.0;
    spec.top = detail::kInf;
    spec.add = [q, base](double u, double v) { return soft_max(q, base, u, v); };
    spec.mul = [](double u, double v) { return u + v; };
    spec.inverse = [](double u) { return -u; };
    spec.idempotent = false;
    DualPair pair = complete_pair(std::move(spec));
    return r < 0 ? pair.primal : pair.dual;
}

ExtendedReal hartley_map(ExtendedReal x, double base) {
    if (x.value() < 0.0) throw DomainError("Hartley's function is defined on [0, inf]");
    return -detail::log_base(x.value(), base) + 0.0;
}

ExtendedReal hartley_map_inverse(ExtendedReal h, double base) {
    return detail::pow_base(base, -h.value());
}

Generator renyi_kernel(const OrderParameter& p) {
    if (p.is_degenerate()) throw DegenerateFamilyError("Rényi kernel is undefined at r = 0");
    if (!p.is_finite()) throw DomainError("Rényi kernel requires a finite order");
    double r = p.r();
    double base = p.base();
    Generator g;
    g.forward = [r, base](double h) { return detail::pow_base(base, -r * h); };
    g.backward = [r, base](double x) { return -detail::log_base(x, base) / r; };
    g.monotonicity = r > 0 ? Monotonicity::decreasing : Monotonicity::increasing;
    g.lo = -detail::kInf;
    g.hi = detail::kInf;
    g.name = "renyi(r=" + format_number(r) + ",b=" + format_number(base) + ")";
    return g;
}

}  // namespace semifield

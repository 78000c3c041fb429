#include "semifield/means.hpp"

#include <algorithm>
#include <cmath>

#include "numeric.hpp"
#include "power_mean.hpp"
#include "semifield/errors.hpp"
#include "semifield/semifield.hpp"

namespace semifield {

WeightedVector::WeightedVector(std::vector<ExtendedReal> x, std::vector<ExtendedReal> w)
    : x_(std::move(x)), w_(std::move(w)) {
    if (x_.empty()) throw DomainError("a mean needs at least one value");
    if (x_.size() != w_.size()) {
        throw DimensionMismatch("values and weights differ in length");
    }
    for (std::size_t i = 0; i < x_.size(); ++i) {
        if (x_[i].value() < 0.0 || w_[i].value() < 0.0) {
            throw DomainError("values and weights must lie in [0, inf]");
        }
    }
}

WeightedVector WeightedVector::unweighted(std::vector<ExtendedReal> x) {
    std::vector<ExtendedReal> w(x.size(), ExtendedReal(1.0));
    return WeightedVector(std::move(x), std::move(w));
}

IndexSets classify_indices(std::span<const ExtendedReal> v) {
    IndexSets out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        double a = v[i].value();
        if (a == 0.0) {
            out.zero.push_back(i);
        } else if (a == detail::kInf) {
            out.infinite.push_back(i);
        } else {
            out.finite.push_back(i);
        }
    }
    return out;
}

IndexClassification classify_indices(const WeightedVector& v) {
    return {classify_indices(v.x()), classify_indices(v.w())};
}

ExtendedReal holder_mean(ExtendedReal order, const WeightedVector& v) {
    std::size_t n = v.size();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double x = v.x()[i].value();
        double w = v.w()[i].value();
        if (!(x > 0.0) || !std::isfinite(x) || !(w > 0.0) || !std::isfinite(w)) {
            throw DomainError("the classical mean needs finite positive values and weights");
        }
        total += w;
    }

    double r = order.value();
    if (r == detail::kInf || r == -detail::kInf) {
        double best = v.x()[0].value();
        for (const ExtendedReal& x : v.x()) {
            best = r > 0 ? std::max(best, x.value()) : std::min(best, x.value());
        }
        return best;
    }

    std::vector<double> w(n);
    std::vector<double> log_x(n);
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = v.w()[i].value();
        log_x[i] = std::log(v.x()[i].value());
    }

    if (r == 0.0) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += w[i] / total * log_x[i];
        return std::exp(s);
    }
    if (detail::direct_power_is_safe(r, log_x)) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            s += v.w()[i].value() / total * std::pow(v.x()[i].value(), r);
        }
        return std::pow(s, 1.0 / r);
    }
    return std::exp(detail::log_power_mean(r, w, log_x, total));
}

namespace {

const Semifield& nn() {
    static const Semifield f = builtin("nnR");
    return f;
}

// ŵ_i = w_i ⊗̄ W⁻¹ with W = ⊕̲ w_k.
std::vector<double> normalized_weights(std::span<const ExtendedReal> w) {
    const Semifield& f = nn();
    ExtendedReal total = f.bottom();
    for (const ExtendedReal& wi : w) total = f.lower_add(total, wi);
    ExtendedReal inv = f.inverse(total);
    std::vector<double> out;
    out.reserve(w.size());
    for (const ExtendedReal& wi : w) out.push_back(f.upper_mul(wi, inv).value());
    return out;
}

bool all_equal(std::span<const ExtendedReal> v, double a) {
    return std::all_of(v.begin(), v.end(), [a](const ExtendedReal& e) { return e.value() == a; });
}

bool any_equal(std::span<const ExtendedReal> v, double a) {
    return std::any_of(v.begin(), v.end(), [a](const ExtendedReal& e) { return e.value() == a; });
}

ExtendedReal positive_order_mean(double r, std::span<const ExtendedReal> x,
                                 std::span<const ExtendedReal> w, bool strict) {
    if (all_equal(x, 0.0)) return 0.0;
    if (all_equal(w, 0.0)) {
        if (strict) throw AllWeightsZero("every weight is zero");
        return detail::kInf;
    }
    if (any_equal(x, 0.0) && any_equal(x, detail::kInf)) return detail::kInf;

    std::vector<double> wn = normalized_weights(w);
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (wn[i] > 0.0 && x[i].value() > 0.0) {
            if (wn[i] == detail::kInf || x[i] == detail::kInf) return detail::kInf;
            active.push_back(i);
        }
    }
    if (active.empty()) return 0.0;

    if (r == detail::kInf) {
        double best = 0.0;
        for (std::size_t i : active) best = std::max(best, x[i].value());
        return best;
    }

    double mass = 0.0;
    for (double wi : wn) mass += wi;
    std::vector<double> w_active;
    std::vector<double> log_x;
    for (std::size_t i : active) {
        w_active.push_back(wn[i]);
        log_x.push_back(std::log(x[i].value()));
    }
    if (detail::direct_power_is_safe(r, log_x)) {
        const Semifield& f = nn();
        ExtendedReal s = f.bottom();
        for (std::size_t i = 0; i < x.size(); ++i) {
            s = f.lower_add(s, f.lower_mul(wn[i], std::pow(x[i].value(), r)));
        }
        return std::pow(s.value(), 1.0 / r);
    }
    return std::exp(detail::log_power_mean(r, w_active, log_x, mass));
}

ExtendedReal geometric_mean(std::span<const ExtendedReal> x, std::span<const ExtendedReal> w,
                            bool strict) {
    if (all_equal(x, 0.0)) return 0.0;
    if (all_equal(w, 0.0)) {
        if (strict) throw AllWeightsZero("every weight is zero");
        return detail::kInf;
    }

    // z_i = x_i^{w_i}, with 0^0 = inf^0 = 1.
    bool z_zero = false;
    bool z_inf = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double xi = x[i].value();
        double wi = w[i].value();
        if (wi == 0.0) continue;
        if (xi == 0.0 || (wi == detail::kInf && xi < 1.0)) z_zero = true;
        if (xi == detail::kInf || (wi == detail::kInf && xi > 1.0)) z_inf = true;
    }
    if (z_zero && z_inf) {
        throw MixedExtremesAtZero("x^w contains both 0 and inf; the order-0 mean is undefined");
    }

    std::vector<double> wn = normalized_weights(w);
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (wn[i] == 0.0) continue;
        double xi = x[i].value();
        if (wn[i] == detail::kInf) {
            // x^inf is 0, 1 or inf as x is below, at or above 1.
            if (xi > 1.0) return detail::kInf;
            if (xi < 1.0) return 0.0;
            continue;
        }
        s += wn[i] * std::log(xi);
    }
    if (s == -detail::kInf) return 0.0;
    return std::exp(s);
}

}  // namespace

ExtendedReal semifield_mean(ExtendedReal order, const WeightedVector& v, MeanOptions opts) {
    double r = order.value();
    if (r == 0.0) return geometric_mean(v.x(), v.w(), opts.strict_weights);
    if (r > 0.0) return positive_order_mean(r, v.x(), v.w(), opts.strict_weights);

    // M_r(w, x) = 1 / M_{-r}(w', 1/x), where w' swaps the weight classes 0 and inf.
    std::vector<ExtendedReal> xi;
    std::vector<ExtendedReal> wi;
    for (std::size_t i = 0; i < v.size(); ++i) {
        xi.emplace_back(1.0 / v.x()[i].value());
        double w = v.w()[i].value();
        wi.emplace_back(w == 0.0 ? detail::kInf : w == detail::kInf ? 0.0 : w);
    }
    if (r == -detail::kInf && positive_order_mean(-r, xi, wi, false).is_finite()) {
        // Select instead of inverting twice, so the minimum comes back exactly.
        double best = detail::kInf;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v.w()[i].value() > 0.0) best = std::min(best, v.x()[i].value());
        }
        return best;
    }
    ExtendedReal m = positive_order_mean(-r, xi, wi, false);
    return 1.0 / m.value();
}

}  // namespace semifield

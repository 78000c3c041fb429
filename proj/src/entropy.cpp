#include "semifield/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "numeric.hpp"
#include "semifield/errors.hpp"
#include "semifield/means.hpp"

namespace semifield {

Distribution::Distribution(std::vector<double> p, bool strict) : p_(std::move(p)) {
    if (p_.empty()) throw DomainError("a distribution needs at least one outcome");
    double total = 0.0;
    for (double x : p_) {
        if (!(x >= 0.0) || !std::isfinite(x)) {
            throw DomainError("probabilities must be finite and nonnegative");
        }
        total += x;
    }
    if (!(total > 0.0)) throw DomainError("a distribution needs a nonempty support");
    if (strict && std::abs(total - 1.0) > 1e-12) {
        throw DomainError("distribution does not sum to 1");
    }
    if (total != 1.0) {
        for (double& x : p_) x /= total;
    }
    for (std::size_t i = 0; i < p_.size(); ++i) {
        if (p_[i] > 0.0) support_.push_back(i);
    }
}

Distribution Distribution::uniform(std::size_t n) {
    return Distribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

namespace {

void require_same_length(const Distribution& p, const Distribution& q) {
    if (p.size() != q.size()) throw DimensionMismatch("distributions differ in length");
}

void require_finite_nonzero(const OrderParameter& r, const char* what) {
    if (r.is_degenerate() || !r.is_finite()) {
        throw DomainError(std::string(what) + " needs a finite order r != 0");
    }
}

// M_r(P, x) with the weights and values restricted to the support of P.
double support_mean(const OrderParameter& r, const Distribution& p, auto value_at) {
    std::vector<ExtendedReal> w;
    std::vector<ExtendedReal> x;
    for (std::size_t i : p.support()) {
        w.emplace_back(p[i]);
        x.emplace_back(value_at(i));
    }
    return semifield_mean(r.r(), WeightedVector(std::move(x), std::move(w))).value();
}

double neg_log(double m, double base) { return -detail::log_base(m, base) + 0.0; }

// m^r, with m^0 = 1^{±inf} = 1.
double potential(double r, double m) {
    if (r == 0.0 || m == 1.0) return 1.0;
    return std::exp(r * std::log(m));
}

}  // namespace

double shifted_entropy(const OrderParameter& r, const Distribution& p) {
    return neg_log(equivalent_probability(r, p), r.base());
}

double shifted_cross_entropy(const OrderParameter& r, const Distribution& p,
                             const Distribution& q) {
    require_same_length(p, q);
    return neg_log(support_mean(r, p, [&q](std::size_t i) { return q[i]; }), r.base());
}

double shifted_divergence(const OrderParameter& r, const Distribution& p, const Distribution& q) {
    require_same_length(p, q);
    double m = support_mean(r, p, [&](std::size_t i) {
        return q[i] == 0.0 ? detail::kInf : p[i] / q[i];
    });
    return detail::log_base(m, r.base()) + 0.0;
}

Distribution escort(const OrderParameter& r, const Distribution& p) {
    if (!r.is_finite()) throw DomainError("escort distributions need a finite order");
    if (r.is_degenerate()) return p;
    std::vector<double> logs;
    for (std::size_t i : p.support()) logs.push_back((r.r() + 1.0) * std::log(p[i]));
    double norm = detail::log_sum_exp(logs);
    std::vector<double> out(p.size(), 0.0);
    for (std::size_t k = 0; k < logs.size(); ++k) {
        out[p.support()[k]] = std::exp(logs[k] - norm);
    }
    return Distribution(std::move(out));
}

double equivalent_probability(const OrderParameter& r, const Distribution& p) {
    return support_mean(r, p, [&p](std::size_t i) { return p[i]; });
}

double information_potential(const OrderParameter& r, const Distribution& p) {
    return potential(r.r(), equivalent_probability(r, p));
}

EntropySpectrum spectrum(const Distribution& p, std::span<const double> grid, double base) {
    if (!std::is_sorted(grid.begin(), grid.end())) throw DomainError("grid must be sorted");
    EntropySpectrum out{base, {}};
    for (double r : grid) {
        OrderParameter order(r, base);
        double m = equivalent_probability(order, p);
        out.points.push_back({r, neg_log(m, base), m, potential(r, m)});
    }
    return out;
}

ShannonDecomposition shannon_decomposition(const OrderParameter& r, const Distribution& p) {
    require_finite_nonzero(r, "the Shannon decomposition");
    OrderParameter zero = r.with_r(0.0);
    Distribution e = escort(r, p);
    ShannonDecomposition d{};
    d.entropy = shifted_entropy(r, p);
    d.divergence = shifted_divergence(zero, e, p);
    d.cross_entropy = shifted_cross_entropy(zero, e, p);
    d.escort_entropy = shifted_entropy(zero, e);
    d.via_divergence = d.divergence / r.r() + d.cross_entropy;
    d.via_entropy = -d.escort_entropy / r.r() + (r.r() + 1.0) / r.r() * d.cross_entropy;
    return d;
}

double spectrum_derivative(const OrderParameter& r, const Distribution& p) {
    require_finite_nonzero(r, "the spectrum derivative");
    double d = shifted_divergence(r.with_r(0.0), escort(r, p), p);
    return -d / (r.r() * r.r()) + 0.0;
}

MomentIdentity moment_identity(const OrderParameter& r, const Distribution& p) {
    require_finite_nonzero(r, "the moment identity");
    std::vector<double> terms;
    for (std::size_t i : p.support()) terms.push_back((r.r() + 1.0) * std::log(p[i]));
    double log_moment = detail::log_sum_exp(terms);
    double from_moment = -log_moment / (r.r() * std::log(r.base())) + 0.0;
    return {shifted_entropy(r, p), from_moment};
}

}  // namespace semifield

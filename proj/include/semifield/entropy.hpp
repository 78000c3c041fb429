#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "semifield/generator.hpp"

namespace semifield {

/// A probability mass function. Unnormalised input is rescaled unless
/// `strict` is set, in which case it must already sum to 1 within 1e-12.
class Distribution {
public:
    explicit Distribution(std::vector<double> p, bool strict = false);

    static Distribution uniform(std::size_t n);

    std::span<const double> p() const { return p_; }
    double operator[](std::size_t i) const { return p_[i]; }
    std::size_t size() const { return p_.size(); }

    /// Indices with p_i > 0, in order.
    const std::vector<std::size_t>& support() const { return support_; }

private:
    std::vector<double> p_;
    std::vector<std::size_t> support_;
};

/// H̃_r(P) = -log_b M_r(P, P) over the support of P.
double shifted_entropy(const OrderParameter& r, const Distribution& p);

/// X̃_r(P, Q) = -log_b M_r(P, Q) over the support of P.
double shifted_cross_entropy(const OrderParameter& r, const Distribution& p, const Distribution& q);

/// D̃_r(P‖Q) = log_b M_r(P, P/Q) over the support of P; p/0 = inf.
double shifted_divergence(const OrderParameter& r, const Distribution& p, const Distribution& q);

/// Shifted escort distribution p_i^{r+1} / Σ_k p_k^{r+1}. Finite r only.
Distribution escort(const OrderParameter& r, const Distribution& p);

/// M_r(P, P) = b^{-H̃_r(P)}.
double equivalent_probability(const OrderParameter& r, const Distribution& p);

/// E_P{P^r} = M_r(P, P)^r.
double information_potential(const OrderParameter& r, const Distribution& p);

struct SpectrumPoint {
    double r;
    double entropy;
    double equivalent_probability;
    double information_potential;
};

struct EntropySpectrum {
    double base;
    std::vector<SpectrumPoint> points;
};

/// Evaluates the three quantities at each order of a sorted grid.
EntropySpectrum spectrum(const Distribution& p, std::span<const double> grid,
                         double base = OrderParameter::kDefaultBase);

/// Both rewritings of H̃_r through the escort p̃ = escort(r, P):
///   via_divergence = D̃_0(p̃‖P) / r + X̃_0(p̃, P)
///   via_entropy    = -H̃_0(p̃) / r + (r + 1) / r · X̃_0(p̃, P)
struct ShannonDecomposition {
    double entropy;
    double divergence;
    double cross_entropy;
    double escort_entropy;
    double via_divergence;
    double via_entropy;
};
ShannonDecomposition shannon_decomposition(const OrderParameter& r, const Distribution& p);

/// dH̃_r/dr = -D̃_0(p̃_r‖P) / r². Finite r != 0.
double spectrum_derivative(const OrderParameter& r, const Distribution& p);

/// H̃_r(P) against -(1/r) log_b Σ_i p_i p_i^r. Finite r != 0.
struct MomentIdentity {
    double entropy;
    double from_moment;
};
MomentIdentity moment_identity(const OrderParameter& r, const Distribution& p);

}  // namespace semifield

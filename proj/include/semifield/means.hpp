#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "semifield/extended_real.hpp"
#include "semifield/generator.hpp"

namespace semifield {

/// Values x and weights w in [0, inf]^n, n >= 1.
class WeightedVector {
public:
    WeightedVector(std::vector<ExtendedReal> x, std::vector<ExtendedReal> w);

    /// All weights equal to one.
    static WeightedVector unweighted(std::vector<ExtendedReal> x);

    std::span<const ExtendedReal> x() const { return x_; }
    std::span<const ExtendedReal> w() const { return w_; }
    std::size_t size() const { return x_.size(); }

private:
    std::vector<ExtendedReal> x_;
    std::vector<ExtendedReal> w_;
};

/// Zero, finite-positive and infinite entries of a vector over [0, inf].
/// Indices are 0-based.
struct IndexSets {
    std::vector<std::size_t> zero;
    std::vector<std::size_t> finite;
    std::vector<std::size_t> infinite;
};

struct IndexClassification {
    IndexSets x;
    IndexSets w;
};

IndexSets classify_indices(std::span<const ExtendedReal> v);
IndexClassification classify_indices(const WeightedVector& v);

/// Classical weighted power mean (sum_i w_i x_i^r / sum_k w_k)^{1/r}, with the
/// geometric mean at r = 0 and max/min at r = ±inf. Every x_i and w_i must be
/// finite and positive; DomainError otherwise.
ExtendedReal holder_mean(ExtendedReal r, const WeightedVector& v);
inline ExtendedReal holder_mean(const OrderParameter& p, const WeightedVector& v) {
    return holder_mean(p.r(), v);
}

struct MeanOptions {
    /// Raise AllWeightsZero instead of returning inf when every weight is
    /// zero and some x_j > 0 (r >= 0).
    bool strict_weights = false;
};

/// Weighted power mean over the completed nnR pair, defined for every x, w in
/// [0, inf]^n and every order r.
///
/// r > 0 uses the lower operations with weights normalised as w_i ⊗̄ W⁻¹,
/// W = ⊕̲ w_k; r < 0 is the inversion dual of that; r = 0 is the exponential
/// of the order-1 mean of ln x with 0 ⊗̲ ±inf = 0. When x holds both 0 and inf
/// the result is inf for r > 0, 0 for r < 0 and MixedExtremesAtZero at r = 0.
/// Agrees with holder_mean whenever all nonzero entries are finite.
ExtendedReal semifield_mean(ExtendedReal r, const WeightedVector& v, MeanOptions opts = {});
inline ExtendedReal semifield_mean(const OrderParameter& p, const WeightedVector& v,
                                   MeanOptions opts = {}) {
    return semifield_mean(p.r(), v, opts);
}

}  // namespace semifield

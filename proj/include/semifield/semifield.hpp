#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semifield/extended_real.hpp"

namespace semifield {

/// Position of a carrier element relative to a semifield's ⊥ and ⊤.
enum class Corner { bottom, finite, top };

/// Whether a semifield's natural order runs with the numeric order of its
/// carrier (⊥ is the numerically lower endpoint) or against it.
enum class Alignment { aligned, dual };

/// Selects one of the two operation families of a completed pair.
///
/// `lower` is the family of the numerically aligned member, where ⊥ ⊗ ⊤ = ⊥
/// (0 ×̲ ∞ = 0, -∞ +̲ ∞ = -∞); `upper` is the family of its dual, where the
/// same product is ⊤ of the aligned member. Both members of a pair share the
/// two families, each using its own as `add`/`mul`.
enum class Dotting { lower, upper };

/// An incomplete positive semifield: ⊕, ⊗ and inversion on a carrier that
/// lacks the element `top` adjoined by completion.
///
/// `add`, `mul` and `inverse` are only ever called with operands strictly
/// between `bottom` and `top`; every corner case is resolved by the
/// completion before they are reached.
struct SemifieldSpec {
    std::string name;
    std::string dual_name;  // defaults to name + "-dual"
    double bottom = 0.0;
    double unit = 1.0;
    double top = ExtendedReal::inf;
    std::function<double(double, double)> add;
    std::function<double(double, double)> mul;
    std::function<double(double)> inverse;
    std::optional<bool> idempotent;  // declared; is_idempotent() also probes
};

struct DualPair;

/// A completed positive semifield over a closed interval of the extended reals.
///
/// Descriptors are immutable and cheap to copy; the two members of a pair
/// share their operation tables.
class Semifield {
public:
    const std::string& name() const;

    ExtendedReal bottom() const;
    ExtendedReal unit() const;
    ExtendedReal top() const;
    ExtendedReal carrier_min() const;
    ExtendedReal carrier_max() const;

    Alignment alignment() const { return dual_ ? Alignment::dual : Alignment::aligned; }
    Dotting dotting() const { return dual_ ? Dotting::upper : Dotting::lower; }

    bool contains(ExtendedReal x) const;
    Corner classify(ExtendedReal x) const;

    // The semifield's own addition and multiplication.
    ExtendedReal add(ExtendedReal a, ExtendedReal b) const { return add(dotting(), a, b); }
    ExtendedReal mul(ExtendedReal a, ExtendedReal b) const { return mul(dotting(), a, b); }

    ExtendedReal add(Dotting d, ExtendedReal a, ExtendedReal b) const;
    ExtendedReal mul(Dotting d, ExtendedReal a, ExtendedReal b) const;

    ExtendedReal lower_add(ExtendedReal a, ExtendedReal b) const { return add(Dotting::lower, a, b); }
    ExtendedReal upper_add(ExtendedReal a, ExtendedReal b) const { return add(Dotting::upper, a, b); }
    ExtendedReal lower_mul(ExtendedReal a, ExtendedReal b) const { return mul(Dotting::lower, a, b); }
    ExtendedReal upper_mul(ExtendedReal a, ExtendedReal b) const { return mul(Dotting::upper, a, b); }

    /// Multiplicative inverse; an involution that swaps ⊥ and ⊤ and fixes e.
    ExtendedReal inverse(ExtendedReal a) const;

    /// Natural order a ≼ b.
    bool precedes(ExtendedReal a, ExtendedReal b) const;

    /// True when the spec did not declare otherwise and a ⊕ a = a on probes.
    bool is_idempotent() const;

    /// The other member of the completed pair.
    Semifield dual() const { return Semifield(core_, !dual_); }

    /// Interior probe points (unit included) used by diagnostics.
    std::vector<double> probe_points() const;

    friend bool operator==(const Semifield& a, const Semifield& b);

    struct Core;

private:
    Semifield(std::shared_ptr<const Core> core, bool dual) : core_(std::move(core)), dual_(dual) {}
    friend DualPair complete_pair(SemifieldSpec spec);

    std::shared_ptr<const Core> core_;
    bool dual_ = false;
};

/// The two completions of one incomplete semifield. `primal` is the member
/// whose ⊥ is the spec's bottom.
struct DualPair {
    Semifield primal;
    Semifield dual;
};

/// Completes an incomplete positive semifield by adjoining ⊤ = ⊥⁻¹.
/// Throws InvalidSpecError when ⊕/⊗ fail commutativity or associativity on
/// sampled interior triples, or the inversion is not an involution.
DualPair complete_pair(SemifieldSpec spec);

/// nnR, nnR-dual, max-times, min-times, max-plus, min-plus, hartley,
/// hartley-dual (nnR also as ℝ≥0 or R>=0). Matching ignores case, '-', '_' and
/// spaces. Throws UnknownSemifield.
Semifield builtin(std::string_view name);

std::vector<std::string> builtin_names();

}  // namespace semifield

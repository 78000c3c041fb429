#include "semifield/semifield.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <sstream>

#include "numeric.hpp"

namespace semifield {

// Operation tables of a completed pair, written relative to the spec's own
// bottom (⊥s) and adjoined top (⊤s). Case order follows the definition by
// cases: the first matching case applies.
struct Semifield::Core {
    SemifieldSpec spec;
    bool spec_is_aligned = true;  // spec.bottom < spec.top
    bool idempotent = false;

    double completed_add(double u, double v) const {
        if (u == spec.top || v == spec.top) return spec.top;
        if (u == spec.bottom) return v;
        if (v == spec.bottom) return u;
        return ExtendedReal(spec.add(u, v)).value();
    }

    double completed_mul(double u, double v) const {
        if (u == spec.bottom || v == spec.bottom) return spec.bottom;
        if (u == spec.top || v == spec.top) return spec.top;
        return ExtendedReal(spec.mul(u, v)).value();
    }

    double completed_inverse(double u) const {
        if (u == spec.bottom) return spec.top;
        if (u == spec.top) return spec.bottom;
        if (u == spec.unit) return spec.unit;
        return ExtendedReal(spec.inverse(u)).value();
    }

    double inverted_add(double a, double b) const {
        if (a == spec.top) return b;
        if (b == spec.top) return a;
        if (a == spec.bottom || b == spec.bottom) return spec.bottom;
        double ia = completed_inverse(a);
        double ib = completed_inverse(b);
        double sum = completed_add(ia, ib);
        // An idempotent addition selects an operand; return that
        // operand itself rather than its double inverse.
        if (idempotent && (sum == ia || sum == ib)) return sum == ia ? a : b;
        return completed_inverse(sum);
    }

    double inverted_mul(double a, double b) const {
        if (a == spec.top || b == spec.top) return spec.top;
        if (a == spec.bottom || b == spec.bottom) return spec.bottom;
        return ExtendedReal(spec.mul(a, b)).value();
    }

    double add(Dotting d, double a, double b) const {
        bool spec_family = (d == Dotting::lower) == spec_is_aligned;
        return spec_family ? completed_add(a, b) : inverted_add(a, b);
    }

    double mul(Dotting d, double a, double b) const {
        bool spec_family = (d == Dotting::lower) == spec_is_aligned;
        return spec_family ? completed_mul(a, b) : inverted_mul(a, b);
    }

    double lo() const { return std::min(spec.bottom, spec.top); }
    double hi() const { return std::max(spec.bottom, spec.top); }
};

const std::string& Semifield::name() const {
    bool is_spec_member = dual_ != core_->spec_is_aligned;
    return is_spec_member ? core_->spec.name : core_->spec.dual_name;
}

ExtendedReal Semifield::bottom() const { return dual_ ? core_->hi() : core_->lo(); }
ExtendedReal Semifield::top() const { return dual_ ? core_->lo() : core_->hi(); }
ExtendedReal Semifield::unit() const { return core_->spec.unit; }
ExtendedReal Semifield::carrier_min() const { return core_->lo(); }
ExtendedReal Semifield::carrier_max() const { return core_->hi(); }

bool Semifield::contains(ExtendedReal x) const {
    return x.value() >= core_->lo() && x.value() <= core_->hi();
}

Corner Semifield::classify(ExtendedReal x) const {
    if (x == bottom()) return Corner::bottom;
    if (x == top()) return Corner::top;
    return Corner::finite;
}

namespace {

void require_member(const Semifield& f, ExtendedReal x) {
    if (!f.contains(x)) {
        std::ostringstream msg;
        msg << x.value() << " is outside the carrier of " << f.name() << " ["
            << f.carrier_min().value() << ", " << f.carrier_max().value() << "]";
        throw DomainError(msg.str());
    }
}

}  // namespace

ExtendedReal Semifield::add(Dotting d, ExtendedReal a, ExtendedReal b) const {
    require_member(*this, a);
    require_member(*this, b);
    return core_->add(d, a.value(), b.value());
}

ExtendedReal Semifield::mul(Dotting d, ExtendedReal a, ExtendedReal b) const {
    require_member(*this, a);
    require_member(*this, b);
    return core_->mul(d, a.value(), b.value());
}

ExtendedReal Semifield::inverse(ExtendedReal a) const {
    require_member(*this, a);
    return core_->completed_inverse(a.value());
}

bool Semifield::precedes(ExtendedReal a, ExtendedReal b) const {
    return dual_ ? a >= b : a <= b;
}

bool Semifield::is_idempotent() const { return core_->idempotent; }

std::vector<double> Semifield::probe_points() const {
    auto pts = detail::interior_samples(core_->lo(), core_->hi());
    pts.push_back(core_->spec.unit);
    return pts;
}

bool operator==(const Semifield& a, const Semifield& b) {
    return a.core_ == b.core_ ? a.dual_ == b.dual_
                              : a.name() == b.name() && a.alignment() == b.alignment();
}

namespace {

constexpr double kProbeTolerance = 1e-9;

[[noreturn]] void reject(const SemifieldSpec& spec, const std::string& what) {
    throw InvalidSpecError("semifield spec '" + spec.name + "': " + what);
}

void probe_binary(const SemifieldSpec& spec, const std::function<double(double, double)>& op,
                  const char* op_name, const std::vector<double>& pts) {
    for (double a : pts) {
        for (double b : pts) {
            double ab = op(a, b);
            double ba = op(b, a);
            if (std::isnan(ab) || std::isnan(ba)) {
                reject(spec, std::string(op_name) + " produced NaN on interior operands");
            }
            if (!detail::close_enough(ab, ba, kProbeTolerance)) {
                std::ostringstream msg;
                msg << op_name << " is not commutative: " << a << ", " << b;
                reject(spec, msg.str());
            }
            for (double c : pts) {
                double left = op(op(a, b), c);
                double right = op(a, op(b, c));
                if (!detail::close_enough(left, right, kProbeTolerance)) {
                    std::ostringstream msg;
                    msg << op_name << " is not associative: " << a << ", " << b << ", " << c;
                    reject(spec, msg.str());
                }
            }
        }
    }
}

void validate(const SemifieldSpec& spec) {
    if (!spec.add || !spec.mul || !spec.inverse) reject(spec, "missing operation");
    for (double v : {spec.bottom, spec.unit, spec.top}) {
        if (std::isnan(v)) reject(spec, "NaN distinguished element");
    }
    if (spec.bottom == spec.top) reject(spec, "bottom equals top");
    double lo = std::min(spec.bottom, spec.top);
    double hi = std::max(spec.bottom, spec.top);
    if (!(spec.unit > lo && spec.unit < hi)) reject(spec, "unit is not interior");

    auto pts = detail::interior_samples(lo, hi);
    pts.push_back(spec.unit);
    probe_binary(spec, spec.add, "addition", pts);
    probe_binary(spec, spec.mul, "multiplication", pts);
    for (double x : pts) {
        double ix = spec.inverse(x);
        if (!detail::close_enough(spec.inverse(ix), x, kProbeTolerance)) {
            reject(spec, "inversion is not an involution");
        }
        if (!detail::close_enough(spec.mul(x, ix), spec.unit, kProbeTolerance)) {
            reject(spec, "x * inverse(x) differs from the unit");
        }
    }
}

}  // namespace

DualPair complete_pair(SemifieldSpec spec) {
    validate(spec);
    if (spec.dual_name.empty()) spec.dual_name = spec.name + "-dual";

    auto core = std::make_shared<Semifield::Core>();
    core->spec_is_aligned = spec.bottom < spec.top;
    core->spec = std::move(spec);

    bool idempotent = core->spec.idempotent.value_or(true);
    if (idempotent) {
        std::vector<double> pts = detail::interior_samples(core->lo(), core->hi());
        pts.push_back(core->spec.unit);
        pts.push_back(core->spec.bottom);
        pts.push_back(core->spec.top);
        for (double x : pts) {
            if (core->completed_add(x, x) != x) {
                idempotent = false;
                break;
            }
        }
    }
    core->idempotent = idempotent;

    bool spec_dual = !core->spec_is_aligned;
    std::shared_ptr<const Semifield::Core> shared = std::move(core);
    return DualPair{Semifield(shared, spec_dual), Semifield(shared, !spec_dual)};
}

namespace {

std::string normalize_name(std::string_view name) {
    std::string out;
    for (char c : name) {
        if (c == '-' || c == '_' || c == ' ') continue;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

double natural_softmax(double a, double b) {
    double m = std::max(a, b);
    double n = std::min(a, b);
    return m + std::log1p(std::exp(n - m));
}

std::map<std::string, Semifield> make_builtins() {
    const double inf = detail::kInf;
    auto reciprocal = [](double x) { return 1.0 / x; };
    auto negate = [](double x) { return -x; };
    auto times = [](double a, double b) { return a * b; };
    auto plus = [](double a, double b) { return a + b; };
    auto max = [](double a, double b) { return std::max(a, b); };

    DualPair nn = complete_pair({"nnR", "nnR-dual", 0.0, 1.0, inf, plus, times, reciprocal, false});
    DualPair mt = complete_pair({"max-times", "min-times", 0.0, 1.0, inf, max, times, reciprocal, true});
    DualPair mp = complete_pair({"max-plus", "min-plus", -inf, 0.0, inf, max, plus, negate, true});
    DualPair hy = complete_pair(
        {"hartley", "hartley-dual", -inf, 0.0, inf, natural_softmax, plus, negate, false});

    std::map<std::string, Semifield> table;
    for (const DualPair& p : {nn, mt, mp, hy}) {
        table.emplace(normalize_name(p.primal.name()), p.primal);
        table.emplace(normalize_name(p.dual.name()), p.dual);
    }
    for (const char* alias : {"ℝ≥0", "R>=0", "nnreal"}) {
        table.emplace(normalize_name(alias), nn.primal);
        table.emplace(normalize_name(std::string(alias) + "-dual"), nn.dual);
    }
    return table;
}

}  // namespace

Semifield builtin(std::string_view name) {
    static const std::map<std::string, Semifield> table = make_builtins();
    auto it = table.find(normalize_name(name));
    if (it == table.end()) throw UnknownSemifield("unknown semifield '" + std::string(name) + "'");
    return it->second;
}

std::vector<std::string> builtin_names() {
    return {"nnR", "nnR-dual", "max-times", "min-times", "max-plus", "min-plus", "hartley",
            "hartley-dual"};
}

}  // namespace semifield

#include "semifield/property_suite.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "numeric.hpp"
#include "semifield/entropy.hpp"
#include "semifield/errors.hpp"
#include "semifield/generator.hpp"
#include "semifield/means.hpp"
#include "semifield/path_algebra.hpp"

namespace semifield {

bool PropertyReport::all_pass() const {
    for (const PropertyGroup& g : groups) {
        if (!g.ok()) return false;
    }
    return true;
}

std::vector<Semifield> law_test_fields() {
    std::vector<Semifield> out;
    for (const std::string& name : builtin_names()) out.push_back(builtin(name));
    for (double r : {-10.0, -2.0, -0.5, 0.5, 2.0, 10.0}) {
        out.push_back(real_family(OrderParameter(r)));
        out.push_back(entropic_family(OrderParameter(r)));
    }
    return out;
}

bool law_equal(const Semifield& f, double a, double b, double tol) {
    auto corner = [&f](double x) { return x == f.bottom().value() || x == f.top().value(); };
    if (corner(a) || corner(b)) return a == b;
    return detail::close_enough(a, b, tol);
}

namespace {

constexpr double kTolerance = 1e-9;
constexpr std::size_t kMaxFailures = 5;

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

class Recorder {
public:
    explicit Recorder(PropertyGroup& g) : g_(g) {}

    template <class Describe>
    void check(bool ok, Describe&& describe) {
        ++g_.total;
        if (ok) {
            ++g_.passed;
        } else if (g_.failures.size() < kMaxFailures) {
            g_.failures.push_back(describe());
        }
    }

    // Runs `body`; an exception counts as a failed case.
    template <class Body>
    void guarded(const std::string& label, Body&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            check(false, [&] { return label + ": threw " + e.what(); });
        }
    }

private:
    PropertyGroup& g_;
};

std::string triple(const Semifield& f, double a, double b, double c) {
    return f.name() + " (" + fmt(a) + ", " + fmt(b) + ", " + fmt(c) + ")";
}

double sample(const Semifield& f, std::mt19937_64& rng) {
    if (f.carrier_min().value() == 0.0) {
        return std::exp(std::uniform_real_distribution<double>(-4.0, 4.0)(rng));
    }
    return std::uniform_real_distribution<double>(-8.0, 8.0)(rng);
}

void axioms_on(const Semifield& f, double a, double b, double c, double tol, Recorder& rec) {
    auto eq = [&](double x, double y) { return law_equal(f, x, y, tol); };
    auto add = [&f](double x, double y) { return f.add(x, y).value(); };
    auto mul = [&f](double x, double y) { return f.mul(x, y).value(); };
    auto where = [&] { return triple(f, a, b, c); };
    double bot = f.bottom().value();
    double e = f.unit().value();

    rec.check(eq(add(add(a, b), c), add(a, add(b, c))), [&] { return "⊕ associativity " + where(); });
    rec.check(eq(mul(mul(a, b), c), mul(a, mul(b, c))), [&] { return "⊗ associativity " + where(); });
    rec.check(eq(add(a, b), add(b, a)), [&] { return "⊕ commutativity " + where(); });
    rec.check(eq(mul(a, b), mul(b, a)), [&] { return "⊗ commutativity " + where(); });
    rec.check(eq(mul(a, add(b, c)), add(mul(a, b), mul(a, c))),
              [&] { return "distributivity " + where(); });
    rec.check(eq(add(a, bot), a), [&] { return "⊕ neutral " + where(); });
    rec.check(eq(mul(a, e), a), [&] { return "⊗ unit " + where(); });
    rec.check(mul(a, bot) == bot, [&] { return "⊥ absorption " + where(); });
    if (f.classify(a) == Corner::finite) {
        rec.check(eq(mul(a, f.inverse(a).value()), e), [&] { return "inverse " + where(); });
    }
}

void pair_laws_on(const Semifield& f, double u, double v, double w, double tol,
                  Recorder& de_morgan, Recorder& modular, Recorder& inequality) {
    auto eq = [&](double x, double y) { return law_equal(f, x, y, tol); };
    auto inv = [&f](double x) { return f.inverse(x).value(); };
    auto ladd = [&f](double x, double y) { return f.lower_add(x, y).value(); };
    auto uadd = [&f](double x, double y) { return f.upper_add(x, y).value(); };
    auto lmul = [&f](double x, double y) { return f.lower_mul(x, y).value(); };
    auto umul = [&f](double x, double y) { return f.upper_mul(x, y).value(); };
    auto where = [&] { return triple(f, u, v, w); };

    de_morgan.check(eq(ladd(u, v), inv(uadd(inv(u), inv(v)))), [&] { return "⊕̲ " + where(); });
    de_morgan.check(eq(uadd(u, v), inv(ladd(inv(u), inv(v)))), [&] { return "⊕̄ " + where(); });
    de_morgan.check(eq(lmul(u, v), inv(umul(inv(u), inv(v)))), [&] { return "⊗̲ " + where(); });
    de_morgan.check(eq(umul(u, v), inv(lmul(inv(u), inv(v)))), [&] { return "⊗̄ " + where(); });

    modular.check(eq(lmul(ladd(u, v), uadd(u, v)), lmul(u, v)), [&] { return "⊗̲ " + where(); });
    modular.check(eq(umul(ladd(u, v), uadd(u, v)), umul(u, v)), [&] { return "⊗̄ " + where(); });

    // The natural order of the lower family is the carrier's ascending order.
    double lhs = lmul(u, umul(v, w));
    double rhs = umul(lmul(u, v), w);
    inequality.check(lhs <= rhs || eq(lhs, rhs), [&] { return where(); });
}

std::vector<double> corners(const Semifield& f) {
    return {f.bottom().value(), f.unit().value(), f.top().value()};
}

}  // namespace

PropertyGroup check_axioms(const Semifield& f, std::uint64_t seed, std::size_t triples) {
    PropertyGroup g{"semifield axioms: " + f.name(), 0, 0, {}};
    Recorder rec(g);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < triples; ++i) {
        double a = sample(f, rng);
        double b = sample(f, rng);
        double c = sample(f, rng);
        rec.guarded(triple(f, a, b, c), [&] { axioms_on(f, a, b, c, kTolerance, rec); });
    }
    return g;
}

PropertyGroup check_corner_axioms(const Semifield& f) {
    PropertyGroup g{"corner axioms: " + f.name(), 0, 0, {}};
    Recorder rec(g);
    for (double a : corners(f)) {
        for (double b : corners(f)) {
            for (double c : corners(f)) {
                rec.guarded(triple(f, a, b, c), [&] { axioms_on(f, a, b, c, kTolerance, rec); });
            }
        }
    }
    return g;
}

std::vector<PropertyGroup> check_pair_laws(const Semifield& f, std::uint64_t seed,
                                           std::size_t triples) {
    std::vector<PropertyGroup> groups{{"De Morgan laws: " + f.name(), 0, 0, {}},
                                      {"modular laws: " + f.name(), 0, 0, {}},
                                      {"self-dual inequality: " + f.name(), 0, 0, {}}};
    Recorder dm(groups[0]);
    Recorder mod(groups[1]);
    Recorder ineq(groups[2]);
    auto run = [&](double u, double v, double w) {
        dm.guarded(triple(f, u, v, w), [&] { pair_laws_on(f, u, v, w, kTolerance, dm, mod, ineq); });
    };
    for (double u : corners(f)) {
        for (double v : corners(f)) {
            for (double w : corners(f)) run(u, v, w);
        }
    }
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < triples; ++i) {
        double u = sample(f, rng);
        double v = sample(f, rng);
        double w = sample(f, rng);
        run(u, v, w);
    }
    return groups;
}

PropertyGroup check_corner_tables() {
    PropertyGroup g{"corner tables", 0, 0, {}};
    Recorder rec(g);
    const double inf = detail::kInf;
    using Vec = std::vector<ExtendedReal>;
    // Finite cells use x = (2, 2), w = (1, 3), whose mean is exactly 2.
    struct Class {
        const char* label;
        Vec v;
    };
    const Class wz{"w all 0", {0.0, 0.0}}, wf{"w finite", {1.0, 3.0}}, wi{"w has inf", {1.0, inf}};
    const Class xz{"x all 0", {0.0, 0.0}}, xf{"x finite", {2.0, 2.0}}, xi{"x has inf", {2.0, inf}};
    const Class wI{"w all inf", {inf, inf}}, w0{"w has 0", {0.0, 3.0}};
    const Class xI{"x all inf", {inf, inf}}, x0{"x has 0", {0.0, 2.0}};

    auto cell = [&](double r, const Class& w, const Class& x, double expected) {
        std::string label = "r=" + fmt(r) + ", " + w.label + ", " + x.label;
        rec.guarded(label, [&] {
            double got = semifield_mean(r, WeightedVector(x.v, w.v)).value();
            rec.check(got == expected,
                      [&] { return label + ": got " + fmt(got) + ", want " + fmt(expected); });
        });
    };
    double classical = holder_mean(2.0, WeightedVector(xf.v, wf.v)).value();
    // r > 0: rows by weight class, columns by value class.
    cell(2.0, wz, xz, 0.0);
    cell(2.0, wz, xf, inf);
    cell(2.0, wz, xi, inf);
    cell(2.0, wf, xz, 0.0);
    cell(2.0, wf, xf, classical);
    cell(2.0, wf, xi, inf);
    cell(2.0, wi, xz, 0.0);
    cell(2.0, wi, xf, inf);
    cell(2.0, wi, xi, inf);
    // r < 0: the order duals of the classes above.
    double classical_neg = holder_mean(-2.0, WeightedVector(xf.v, wf.v)).value();
    cell(-2.0, wI, xI, inf);
    cell(-2.0, wI, xf, 0.0);
    cell(-2.0, wI, x0, 0.0);
    cell(-2.0, wf, xI, inf);
    cell(-2.0, wf, xf, classical_neg);
    cell(-2.0, wf, x0, 0.0);
    cell(-2.0, w0, xI, inf);
    cell(-2.0, w0, xf, 0.0);
    cell(-2.0, w0, x0, 0.0);
    return g;
}

namespace {

Distribution random_distribution(std::mt19937_64& rng, std::size_t max_n = 16) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(2, max_n)(rng);
    std::vector<double> p(n);
    for (double& x : p) x = std::uniform_real_distribution<double>(0.01, 1.0)(rng);
    return Distribution(std::move(p));
}

PropertyGroup mixed_extremes() {
    PropertyGroup g{"mixed extremes", 0, 0, {}};
    Recorder rec(g);
    WeightedVector v({0.0, detail::kInf}, {1.0, 1.0});
    rec.check(semifield_mean(2.0, v).value() == detail::kInf, [] { return "r > 0 should give inf"; });
    rec.check(semifield_mean(-2.0, v).value() == 0.0, [] { return "r < 0 should give 0"; });
    bool threw = false;
    try {
        semifield_mean(0.0, v);
    } catch (const MixedExtremesAtZero&) {
        threw = true;
    }
    rec.check(threw, [] { return "r = 0 should raise MixedExtremesAtZero"; });
    return g;
}

PropertyGroup classical_agreement(std::mt19937_64& rng, std::size_t cases) {
    PropertyGroup g{"classical agreement", 0, 0, {}};
    Recorder rec(g);
    std::uniform_real_distribution<double> pos(0.05, 20.0);
    for (std::size_t i = 0; i < cases; ++i) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
        std::vector<ExtendedReal> x;
        std::vector<ExtendedReal> w;
        for (std::size_t k = 0; k < n; ++k) {
            x.emplace_back(pos(rng));
            w.emplace_back(pos(rng));
        }
        WeightedVector v(x, w);
        for (int r = -10; r <= 10; ++r) {
            double a = semifield_mean(double(r), v).value();
            double b = holder_mean(double(r), v).value();
            rec.check(detail::close_enough(a, b, kTolerance),
                      [&] { return "r=" + std::to_string(r) + ": " + fmt(a) + " vs " + fmt(b); });
        }
    }
    return g;
}

PropertyGroup lemma_identities(std::mt19937_64& rng, std::size_t cases) {
    PropertyGroup g{"Shannon decomposition", 0, 0, {}};
    Recorder rec(g);
    for (std::size_t i = 0; i < cases; ++i) {
        Distribution p = random_distribution(rng);
        for (double r : {-0.5, 0.5, 1.0, 2.0, 5.0}) {
            ShannonDecomposition d = shannon_decomposition(OrderParameter(r), p);
            rec.check(std::abs(d.entropy - d.via_divergence) <= kTolerance &&
                          std::abs(d.entropy - d.via_entropy) <= kTolerance,
                      [&] {
                          return "r=" + fmt(r) + ": " + fmt(d.entropy) + " vs " +
                                 fmt(d.via_divergence) + ", " + fmt(d.via_entropy);
                      });
        }
    }
    return g;
}

PropertyGroup derivative_checks(std::mt19937_64& rng, std::size_t cases) {
    PropertyGroup g{"spectrum derivative", 0, 0, {}};
    Recorder rec(g);
    const double h = 1e-5;
    for (std::size_t i = 0; i < cases; ++i) {
        Distribution p = random_distribution(rng);
        for (double r : {-0.5, 0.5, 1.0, 2.0}) {
            double d = spectrum_derivative(OrderParameter(r), p);
            double fd = (shifted_entropy(OrderParameter(r + h), p) -
                         shifted_entropy(OrderParameter(r - h), p)) /
                        (2 * h);
            rec.check(std::abs(d - fd) <= 1e-6 && d <= 0.0,
                      [&] { return "r=" + fmt(r) + ": " + fmt(d) + " vs " + fmt(fd); });
        }
    }
    return g;
}

PropertyGroup spectrum_shape(std::mt19937_64& rng, std::size_t cases) {
    PropertyGroup g{"spectrum monotonicity", 0, 0, {}};
    Recorder rec(g);
    std::vector<double> grid{-detail::kInf};
    for (int k = 0; k <= 40; ++k) grid.push_back(-20.0 + k);
    grid.push_back(detail::kInf);
    for (std::size_t i = 0; i < cases; ++i) {
        Distribution p = random_distribution(rng);
        EntropySpectrum s = spectrum(p, grid);
        double lo = s.points.back().entropy;
        double hi = s.points.front().entropy;
        bool ok = true;
        for (std::size_t k = 0; k < s.points.size(); ++k) {
            double h = s.points[k].entropy;
            if (h < lo - kTolerance || h > hi + kTolerance) ok = false;
            if (k > 0 && h > s.points[k - 1].entropy + kTolerance) ok = false;
        }
        rec.check(ok, [&] { return "distribution of size " + std::to_string(p.size()); });
    }
    return g;
}

PropertyGroup generator_composition(std::mt19937_64& rng) {
    PropertyGroup g{"generator composition", 0, 0, {}};
    Recorder rec(g);
    std::uniform_real_distribution<double> u(-8.0, 8.0);
    for (double r : {-3.0, -1.0, 1.0, 3.0}) {
        OrderParameter p(r);
        Semifield direct = entropic_family(p);
        Semifield built = from_generator(renyi_kernel(p));
        for (int i = 0; i < 1000; ++i) {
            double a = u(rng);
            double b = u(rng);
            double s1 = direct.add(a, b).value();
            double s2 = built.add(a, b).value();
            double m1 = direct.mul(a, b).value();
            double m2 = built.mul(a, b).value();
            rec.check(detail::close_enough(s1, s2, kTolerance) && detail::close_enough(m1, m2, kTolerance),
                      [&] { return "r=" + fmt(r) + " (" + fmt(a) + ", " + fmt(b) + ")"; });
        }
    }
    return g;
}

PropertyGroup idempotent_limit(std::mt19937_64& rng) {
    PropertyGroup g{"idempotent limit", 0, 0, {}};
    Recorder rec(g);
    std::uniform_real_distribution<double> u(0.5, 4.0);
    Semifield big = real_family(OrderParameter(100.0));
    Semifield small = real_family(OrderParameter(-100.0));
    const double up = std::exp2(1.0 / 100.0) - 1.0;
    const double down = 1.0 - std::exp2(-1.0 / 100.0);
    for (int i = 0; i < 1000; ++i) {
        double a = u(rng);
        double b = u(rng);
        double m = std::max(a, b);
        double n = std::min(a, b);
        double hi = big.add(a, b).value();
        double lo = small.add(a, b).value();
        rec.check(std::abs(hi - m) / m <= up && std::abs(lo - n) / n <= down,
                  [&] { return "(" + fmt(a) + ", " + fmt(b) + ")"; });
    }
    return g;
}

SemiMatrix random_matrix(const Semifield& f, std::size_t rows, std::size_t cols,
                         std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-5, 5);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<ExtendedReal> e;
    for (std::size_t i = 0; i < rows * cols; ++i) {
        e.emplace_back(coin(rng) < 0.1 ? f.bottom() : ExtendedReal(entry(rng)));
    }
    return SemiMatrix(f, rows, cols, std::move(e));
}

PropertyGroup matrix_identities(std::mt19937_64& rng, std::size_t cases) {
    PropertyGroup g{"matrix identities", 0, 0, {}};
    Recorder rec(g);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    for (const char* name : {"max-plus", "min-plus"}) {
        Semifield f = builtin(name);
        for (std::size_t i = 0; i < cases; ++i) {
            std::size_t m = dim(rng);
            std::size_t n = dim(rng);
            SemiMatrix a = random_matrix(f, m, n, rng);
            SemiMatrix mm = random_matrix(f, n, dim(rng), rng);
            SemiMatrix m3 = random_matrix(f, m, dim(rng), rng);
            AlternatingIdentityReport r1 = check_alternating_identities(a, mm, 0.0);
            AlternatingIdentityReport r2 = check_alternating_identities(a, m3, 0.0);
            bool ok = r1.all_hold() && r2.all_hold() && r1.item4_checked && r2.item3_checked;
            rec.check(ok, [&] {
                for (const auto& r : {r1, r2}) {
                    for (const IdentityCheck& c : r.checks) {
                        if (!c.holds) return std::string(name) + ": " + c.statement;
                    }
                }
                return std::string(name) + ": shapes not checked";
            });
        }
    }
    return g;
}

void merge_into(std::vector<PropertyGroup>& groups, const std::string& name,
                const PropertyGroup& part) {
    for (PropertyGroup& g : groups) {
        if (g.name == name) {
            g.passed += part.passed;
            g.total += part.total;
            for (const std::string& f : part.failures) {
                if (g.failures.size() < kMaxFailures) g.failures.push_back(f);
            }
            return;
        }
    }
    PropertyGroup g = part;
    g.name = name;
    groups.push_back(std::move(g));
}

}  // namespace

PropertyReport run_property_suite(const SuiteOptions& opts) {
    PropertyReport report;
    report.seed = opts.seed;
    std::mt19937_64 seeds(opts.seed);

    for (const Semifield& f : law_test_fields()) {
        merge_into(report.groups, "semifield axioms", check_axioms(f, seeds(), opts.triples));
        merge_into(report.groups, "corner axioms", check_corner_axioms(f));
        std::vector<PropertyGroup> pair = check_pair_laws(f, seeds(), opts.triples / 10);
        merge_into(report.groups, "De Morgan laws", pair[0]);
        merge_into(report.groups, "modular laws", pair[1]);
        merge_into(report.groups, "self-dual inequality", pair[2]);
    }
    report.groups.push_back(check_corner_tables());
    report.groups.push_back(mixed_extremes());

    std::mt19937_64 rng(seeds());
    report.groups.push_back(classical_agreement(rng, opts.distributions));
    report.groups.push_back(lemma_identities(rng, opts.distributions));
    report.groups.push_back(derivative_checks(rng, opts.distributions / 2));
    report.groups.push_back(spectrum_shape(rng, opts.distributions));
    report.groups.push_back(generator_composition(rng));
    report.groups.push_back(idempotent_limit(rng));
    report.groups.push_back(matrix_identities(rng, opts.distributions));
    return report;
}

}  // namespace semifield

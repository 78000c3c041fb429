// Runs the twelve acceptance criteria and prints one PASS/FAIL line each.
// Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gen.hpp"
#include "oracles.hpp"
#include "semifield/entropy.hpp"
#include "semifield/errors.hpp"
#include "semifield/generator.hpp"
#include "semifield/means.hpp"
#include "semifield/path_algebra.hpp"
#include "semifield/property_suite.hpp"

using namespace semifield;
using testing_support::Gen;

namespace {

constexpr double inf = ExtendedReal::inf;

/// Collects the first failure message and a case count.
struct Tally {
    std::size_t cases = 0;
    std::size_t failed = 0;
    std::string first;

    void check(bool ok, const std::function<std::string()>& what) {
        ++cases;
        if (ok) return;
        if (failed++ == 0) first = what();
    }
    bool ok() const { return failed == 0; }
};

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

bool near(double a, double b, double tol) { return a == b || std::abs(a - b) <= tol; }

Tally named_entropies() {
    Tally t;
    auto start = std::chrono::steady_clock::now();
    Distribution p({0.5, 0.25, 0.125, 0.125});
    const std::pair<double, double> table[] = {
        {inf, 1.0}, {1.0, -std::log2(22.0 / 64)}, {0.0, 1.75}, {-1.0, 2.0}, {-inf, 3.0}};
    for (auto [r, want] : table) {
        double got = shifted_entropy(OrderParameter(r), p);
        t.check(near(got, want, 1e-9), [&] { return "r=" + num(r) + " gave " + num(got) + ", want " + num(want); });
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    t.check(secs < 1.0, [&] { return "took " + num(secs) + " s"; });
    return t;
}

std::vector<double> spectrum_grid() {
    std::vector<double> grid{-inf};
    for (int k = 0; k <= 40; ++k) grid.push_back(-20.0 + k);
    grid.push_back(inf);
    return grid;
}

Tally uniform_flatness() {
    Tally t;
    Gen g(102);
    std::vector<double> grid = spectrum_grid();
    for (int i = 0; i < 200; ++i) {
        std::vector<double> raw = g.pmf(16, 0.2);
        Distribution p(raw);
        std::size_t n = p.size();
        Distribution u = Distribution::uniform(n);
        double log_n = std::log2(double(n));
        for (double r : grid) {
            double h = shifted_entropy(OrderParameter(r), u);
            t.check(near(h, log_n, 1e-9), [&] { return "uniform n=" + std::to_string(n) + " r=" + num(r) + ": " + num(h); });
        }
        // Hartley's entropy counts the support.
        double hart = shifted_entropy(OrderParameter(-1.0), p);
        double log_support = std::log2(double(p.support().size()));
        t.check(near(hart, log_support, 1e-9), [&] { return "H_{-1} " + num(hart) + " vs " + num(log_support); });
    }
    return t;
}

Tally monotone_spectrum() {
    Tally t;
    Gen g(103);
    std::vector<double> grid = spectrum_grid();
    for (int i = 0; i < 200; ++i) {
        Distribution p(g.pmf(16, 0.2));
        EntropySpectrum s = spectrum(p, grid);
        double hi = s.points.front().entropy;
        double lo = s.points.back().entropy;
        for (std::size_t k = 0; k < s.points.size(); ++k) {
            double h = s.points[k].entropy;
            t.check(h >= lo - 1e-9 && h <= hi + 1e-9, [&] { return "r=" + num(s.points[k].r) + " out of bounds"; });
            if (k > 0) {
                double prev = s.points[k - 1].entropy;
                t.check(h <= prev + 1e-9, [&] { return "increase at r=" + num(s.points[k].r); });
            }
        }
    }
    return t;
}

Tally axiom_suite() {
    Tally t;
    std::uint64_t seed = testing_support::suite_seed();
    auto record = [&](const Semifield& f, const PropertyGroup& g) {
        t.check(g.ok(), [&] {
            return f.name() + " " + g.name + " " + std::to_string(g.passed) + "/" + std::to_string(g.total) +
                   (g.failures.empty() ? "" : ": " + g.failures.front());
        });
    };
    for (const Semifield& f : law_test_fields()) {
        record(f, check_axioms(f, seed, 10000));
        record(f, check_corner_axioms(f));
        for (const PropertyGroup& g : check_pair_laws(f, seed, 10000)) record(f, g);
    }
    return t;
}

double weighted_mean(double r, std::vector<double> x, std::vector<double> w) {
    return semifield_mean(r, WeightedVector({x.begin(), x.end()}, {w.begin(), w.end()})).value();
}

Tally corner_tables() {
    Tally t;
    PropertyGroup g = check_corner_tables();
    t.check(g.total == 18 && g.ok(), [&] {
        return std::to_string(g.passed) + "/" + std::to_string(g.total) + " cells" +
               (g.failures.empty() ? "" : ": " + g.failures.front());
    });
    // Witnesses built here independently of the suite.
    const double x_mixed[] = {0.0, inf};
    std::vector<double> xm(std::begin(x_mixed), std::end(x_mixed));
    std::vector<double> w{1.0, 1.0};
    t.check(weighted_mean(-2.0, xm, w) == 0.0, [] { return "mixed extremes at r<0 not 0"; });
    t.check(weighted_mean(2.0, xm, w) == inf, [] { return "mixed extremes at r>0 not inf"; });
    bool threw = false;
    try {
        weighted_mean(0.0, xm, w);
    } catch (const MixedExtremesAtZero&) {
        threw = true;
    }
    t.check(threw, [] { return "mixed extremes at r=0 did not raise"; });

    // r > 0 rows: weights all 0 / finite / some inf; values all 0 / finite / some inf.
    Gen gen(105);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> fin{gen.uniform(0.1, 9), gen.uniform(0.1, 9)};
        struct Cell { std::vector<double> w, x; double want; };
        double classical_pos = testing_support::naive_power_mean(3.0, fin, fin);
        double classical_neg = testing_support::naive_power_mean(-3.0, fin, fin);
        std::vector<double> zeros{0, 0}, infs{inf, inf}, has0{0, fin[1]}, hasinf{inf, fin[1]};
        const Cell pos[] = {{zeros, zeros, 0}, {zeros, fin, inf},   {zeros, hasinf, inf},
                            {fin, zeros, 0},   {fin, fin, classical_pos}, {fin, hasinf, inf},
                            {hasinf, zeros, 0}, {hasinf, fin, inf}, {hasinf, hasinf, inf}};
        const Cell neg[] = {{infs, infs, inf}, {infs, fin, 0},   {infs, has0, 0},
                            {fin, infs, inf},  {fin, fin, classical_neg}, {fin, has0, 0},
                            {has0, infs, inf}, {has0, fin, 0},   {has0, has0, 0}};
        for (const Cell& c : pos) {
            double got = weighted_mean(3.0, c.x, c.w);
            t.check(near(got, c.want, 1e-12 * c.want), [&] { return "r>0 cell gave " + num(got); });
        }
        for (const Cell& c : neg) {
            double got = weighted_mean(-3.0, c.x, c.w);
            t.check(near(got, c.want, 1e-12 * c.want), [&] { return "r<0 cell gave " + num(got); });
        }
    }
    return t;
}

Tally shannon_decompositions() {
    Tally t;
    Gen g(106);
    for (int i = 0; i < 100; ++i) {
        Distribution p(g.pmf(12, 0.1));
        for (double r : {-0.5, 0.5, 1.0, 2.0, 5.0}) {
            ShannonDecomposition s = shannon_decomposition(OrderParameter(r), p);
            t.check(near(s.via_divergence, s.entropy, 1e-9), [&] { return "divergence form at r=" + num(r); });
            t.check(near(s.via_entropy, s.entropy, 1e-9), [&] { return "entropy form at r=" + num(r); });
        }
    }
    return t;
}

Tally derivative_check() {
    Tally t;
    Gen g(107);
    const double h = 1e-5;
    for (int i = 0; i < 50; ++i) {
        Distribution p(g.pmf(12, 0.1));
        for (double r : {-0.5, 0.5, 1.0, 2.0}) {
            double numeric =
                (shifted_entropy(OrderParameter(r + h), p) - shifted_entropy(OrderParameter(r - h), p)) / (2 * h);
            double analytic = spectrum_derivative(OrderParameter(r), p);
            t.check(near(analytic, numeric, 1e-6), [&] { return num(analytic) + " vs " + num(numeric); });
            t.check(analytic <= 0.0, [&] { return "positive derivative " + num(analytic); });
        }
    }
    return t;
}

Tally generator_composition() {
    Tally t;
    Gen g(108);
    for (double r : {-3.0, -1.0, 1.0, 3.0}) {
        OrderParameter p(r);
        Semifield direct = entropic_family(p);
        Semifield built = from_generator(renyi_kernel(p));
        for (int i = 0; i < 1000; ++i) {
            double a = g.uniform(-10, 10);
            double b = g.uniform(-10, 10);
            double s1 = direct.add(a, b).value(), s2 = built.add(a, b).value();
            double m1 = direct.mul(a, b).value(), m2 = built.mul(a, b).value();
            t.check(near(s1, s2, 1e-9 * std::max(1.0, std::abs(s1))), [&] { return "add " + num(s1) + " vs " + num(s2); });
            t.check(near(m1, m2, 1e-9 * std::max(1.0, std::abs(m1))), [&] { return "mul " + num(m1) + " vs " + num(m2); });
        }
    }
    return t;
}

Tally idempotent_limit() {
    Tally t;
    Gen g(109);
    Semifield up = real_family(OrderParameter(100.0));
    Semifield down = real_family(OrderParameter(-100.0));
    const double up_bound = std::pow(2.0, 1.0 / 100) - 1;
    const double down_bound = 1 - std::pow(2.0, -1.0 / 100);
    for (int i = 0; i < 10000; ++i) {
        double u = g.uniform(0.5, 4), v = g.uniform(0.5, 4);
        double hi = std::max(u, v), lo = std::min(u, v);
        double e1 = std::abs(up.add(u, v).value() - hi) / hi;
        double e2 = std::abs(down.add(u, v).value() - lo) / lo;
        t.check(e1 <= up_bound, [&] { return "max error " + num(e1); });
        t.check(e2 <= down_bound, [&] { return "min error " + num(e2); });
    }
    return t;
}

SequenceModel to_neg_log(const SequenceModel& m) {
    auto f = [](double x) { return x == 0 ? inf : -std::log(x); };
    SequenceModel out = m;
    for (double& x : out.initial) x = f(x);
    for (auto& row : out.transition) std::transform(row.begin(), row.end(), row.begin(), f);
    for (auto& row : out.emission) std::transform(row.begin(), row.end(), row.begin(), f);
    return out;
}

Tally viterbi_oracle() {
    Tally t;
    Gen g(110);
    Semifield max_times = builtin("max-times");
    Semifield min_plus = builtin("min-plus");
    Semifield nn = builtin("nnR");
    // Every shape up to 3 states, 3 symbols and length 5, several models each.
    for (std::size_t states = 1; states <= 3; ++states) {
        for (std::size_t symbols = 1; symbols <= 3; ++symbols) {
            for (std::size_t len = 1; len <= 5; ++len) {
                for (int rep = 0; rep < 4; ++rep) {
                    SequenceModel m = g.stochastic_model(states, symbols);
                    std::vector<std::size_t> obs = g.observations(len, symbols);
                    for (const auto& [f, model] : {std::pair{max_times, m}, std::pair{min_plus, to_neg_log(m)}}) {
                        DecodeResult got = viterbi_decode(model, obs, f);
                        DecodeResult want = testing_support::brute_force_decode(model, obs, f);
                        t.check(got.path == want.path && got.score == want.score, [&] {
                            return f.name() + " decode differs from enumeration (score " + num(got.score.value()) +
                                   " vs " + num(want.score.value()) + ")";
                        });
                    }
                    double total = testing_support::brute_force_total(m, obs);
                    double sum = path_sum(m, obs, nn).value();
                    t.check(near(sum, total, 1e-12 * total), [&] { return "pathSum " + num(sum) + " vs " + num(total); });
                }
            }
        }
    }
    return t;
}

SemiMatrix random_matrix(Gen& g, const Semifield& f, std::size_t rows, std::size_t cols) {
    std::vector<ExtendedReal> e;
    for (std::size_t i = 0; i < rows * cols; ++i) {
        e.push_back(g.chance(0.1) ? f.bottom() : ExtendedReal(double(g.integer(-9, 9))));
    }
    return SemiMatrix(f, rows, cols, e);
}

Tally matrix_identities() {
    Tally t;
    Gen g(111);
    for (const char* name : {"max-plus", "min-plus"}) {
        Semifield f = builtin(name);
        for (int i = 0; i < 100; ++i) {
            SemiMatrix a = random_matrix(g, f, g.index(1, 4), g.index(1, 4));
            SemiMatrix m3 = random_matrix(g, f, a.rows(), g.index(1, 4));
            SemiMatrix m4 = random_matrix(g, f, a.cols(), g.index(1, 4));
            for (const SemiMatrix& m : {m3, m4}) {
                AlternatingIdentityReport r = check_alternating_identities(a, m, 0.0);
                for (const IdentityCheck& c : r.checks) {
                    t.check(c.holds, [&] { return std::string(name) + ": " + c.statement; });
                }
            }
            t.check(check_alternating_identities(a, m3, 0.0).item3_checked &&
                        check_alternating_identities(a, m4, 0.0).item4_checked,
                    [] { return "item 3 or 4 skipped"; });
        }
    }
    return t;
}

Tally round_trip_triangle() {
    Tally t;
    Gen g(112);
    for (int i = 0; i < 100; ++i) {
        Distribution p(g.pmf(12, 0.1));
        double r = g.uniform(-8, 8);
        if (r == 0) r = 1;
        OrderParameter order(r);
        double h = shifted_entropy(order, p);
        double pt = equivalent_probability(order, p);
        double v = information_potential(order, p);
        double phi = renyi_kernel(order).forward(h);
        double root = std::pow(v, 1 / r);
        double back = hartley_map_inverse(h, order.base()).value();
        t.check(near(phi, v, 1e-9 * std::max(1.0, v)), [&] { return "phi'(H) " + num(phi) + " vs V " + num(v); });
        t.check(near(root, pt, 1e-9), [&] { return "V^{1/r} " + num(root) + " vs " + num(pt); });
        t.check(near(back, pt, 1e-9), [&] { return "I*^-1(H) " + num(back) + " vs " + num(pt); });
    }
    return t;
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Tally()>> criteria[] = {
        {"named entropies of (1/2,1/4,1/8,1/8)", named_entropies},
        {"uniform flatness and Hartley constancy", uniform_flatness},
        {"monotone bounded spectrum", monotone_spectrum},
        {"semifield axioms, De Morgan, modular, self-dual", axiom_suite},
        {"corner-case tables and mixed extremes", corner_tables},
        {"Shannon decompositions of the shifted entropy", shannon_decompositions},
        {"spectrum derivative vs central differences", derivative_check},
        {"entropic family vs generator construction", generator_composition},
        {"idempotent limit bounds at r = +-100", idempotent_limit},
        {"Viterbi and path sum vs enumeration", viterbi_oracle},
        {"alternating matrix identities", matrix_identities},
        {"round-trip triangle", round_trip_triangle},
    };
    std::printf("seed: %llu\n", static_cast<unsigned long long>(testing_support::suite_seed()));
    int failures = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Tally t;
        try {
            t = run();
        } catch (const std::exception& e) {
            t.check(false, [&] { return std::string("exception: ") + e.what(); });
        }
        std::printf("%s criterion %d: %s (%zu cases", t.ok() ? "PASS" : "FAIL", index, name, t.cases);
        if (!t.ok()) std::printf(", %zu failed; first: %s", t.failed, t.first.c_str());
        std::printf(")\n");
        if (!t.ok()) ++failures;
    }
    std::fflush(stdout);
    return failures == 0 ? 0 : 1;
}

#include "app.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "calc.hpp"
#include "io.hpp"
#include "semifield/entropy.hpp"
#include "semifield/errors.hpp"
#include "semifield/generator.hpp"
#include "semifield/path_algebra.hpp"
#include "semifield/property_suite.hpp"

namespace semifield::cli {

namespace {

using json = nlohmann::json;

struct BaseOptions {
    double base = OrderParameter::kDefaultBase;
    bool nat = false;

    double value() const { return nat ? std::numbers::e : base; }
};

struct GridOptions {
    std::string grid;
    double r_min = -5.0;
    double r_max = 5.0;
    std::size_t count = 11;
    bool neg_inf = false;
    bool pos_inf = false;
};

struct FieldOptions {
    std::string semifield;
    std::string family;
    double r = 1.0;
};

struct Options {
    std::string input;
    std::string reference;
    std::string output;
    std::string format = "csv";
    bool strict = false;
    BaseOptions base;
    GridOptions grid;
    FieldOptions field;
    std::string expr;
    std::string model;
    std::string observations;
    bool check = false;
    std::optional<std::uint64_t> seed;
    bool verbose = false;
};

void add_base_options(CLI::App& cmd, BaseOptions& b) {
    auto* base = cmd.add_option("--base", b.base, "logarithm base (default 2)");
    auto* nat = cmd.add_flag("--nat", b.nat, "natural logarithms (base e)");
    base->excludes(nat);
}

void add_grid_options(CLI::App& cmd, GridOptions& g) {
    cmd.add_option("--grid", g.grid, "comma-separated orders r, e.g. \"-inf,-1,0,1,inf\"");
    cmd.add_option("--r-min", g.r_min, "smallest finite order of the grid");
    cmd.add_option("--r-max", g.r_max, "largest finite order of the grid");
    cmd.add_option("--count", g.count, "number of evenly spaced finite orders")
        ->check(CLI::PositiveNumber);
    cmd.add_flag("--neg-inf", g.neg_inf, "include r = -inf");
    cmd.add_flag("--pos-inf", g.pos_inf, "include r = +inf");
}

void add_field_options(CLI::App& cmd, FieldOptions& f, const std::string& default_name) {
    f.semifield = default_name;
    auto* name = cmd.add_option("--semifield,-s", f.semifield, "builtin semifield name");
    auto* family = cmd.add_option("--family", f.family, "parametric family: real or entropic")
                       ->check(CLI::IsMember({"real", "entropic"}));
    cmd.add_option("--r", f.r, "order of the parametric family")->needs(family);
    family->excludes(name);
}

std::vector<double> build_grid(const GridOptions& g) {
    std::vector<double> grid;
    if (!g.grid.empty()) {
        grid = parse_number_list(g.grid);
    } else {
        if (!std::isfinite(g.r_min) || !std::isfinite(g.r_max) || g.r_min > g.r_max) {
            throw InputError("--r-min must not exceed --r-max");
        }
        for (std::size_t k = 0; k < g.count; ++k) {
            double t = g.count == 1 ? 0.0 : double(k) / double(g.count - 1);
            grid.push_back(g.r_min + t * (g.r_max - g.r_min));
        }
    }
    if (g.neg_inf) grid.push_back(-INFINITY);
    if (g.pos_inf) grid.push_back(INFINITY);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

Semifield select_field(const FieldOptions& f, double base) {
    if (f.family.empty()) return builtin(f.semifield);
    OrderParameter p(f.r, base);
    return f.family == "real" ? real_family(p) : entropic_family(p);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

json json_number(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x == 0.0 ? 0.0 : x;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
    if (o.output.empty() || o.output == "-") {
        out << text;
    } else {
        write_file_atomically(o.output, text);
    }
}

std::vector<NamedDistribution> load_distributions(const std::string& path) {
    return parse_distributions(path == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                                           : read_file(path));
}

int run_spectrum(const Options& o, std::ostream& out) {
    std::vector<double> grid = build_grid(o.grid);
    double base = o.base.value();
    std::vector<NamedDistribution> inputs = load_distributions(o.input);

    std::ostringstream csv;
    json doc = json::array();
    csv << "dist_id,r,entropy,equiv_prob,info_potential\n";
    for (const NamedDistribution& d : inputs) {
        EntropySpectrum s = spectrum(Distribution(d.p, o.strict), grid, base);
        json points = json::array();
        for (const SpectrumPoint& pt : s.points) {
            csv << csv_field(d.id) << ',' << format_number(pt.r) << ',' << format_number(pt.entropy)
                << ',' << format_number(pt.equivalent_probability) << ','
                << format_number(pt.information_potential) << '\n';
            points.push_back({{"r", json_number(pt.r)},
                              {"entropy", json_number(pt.entropy)},
                              {"equiv_prob", json_number(pt.equivalent_probability)},
                              {"info_potential", json_number(pt.information_potential)}});
        }
        doc.push_back({{"id", d.id}, {"base", base}, {"points", points}});
    }
    emit(o, o.format == "json" ? doc.dump(2) + "\n" : csv.str(), out);
    return kOk;
}

int run_divergence(const Options& o, std::ostream& out) {
    std::vector<double> grid = build_grid(o.grid);
    double base = o.base.value();
    std::vector<NamedDistribution> inputs = load_distributions(o.input);
    std::optional<Distribution> reference;
    if (!o.reference.empty()) {
        reference.emplace(load_distributions(o.reference).front().p, o.strict);
    }

    std::ostringstream csv;
    json doc = json::array();
    csv << "dist_id,r,divergence,cross_entropy\n";
    for (const NamedDistribution& d : inputs) {
        Distribution p(d.p, o.strict);
        Distribution q = reference ? *reference : Distribution::uniform(p.size());
        json points = json::array();
        for (double r : grid) {
            OrderParameter order(r, base);
            double div = shifted_divergence(order, p, q);
            double cross = shifted_cross_entropy(order, p, q);
            csv << csv_field(d.id) << ',' << format_number(r) << ',' << format_number(div) << ','
                << format_number(cross) << '\n';
            points.push_back({{"r", json_number(r)},
                              {"divergence", json_number(div)},
                              {"cross_entropy", json_number(cross)}});
        }
        doc.push_back({{"id", d.id}, {"base", base}, {"points", points}});
    }
    emit(o, o.format == "json" ? doc.dump(2) + "\n" : csv.str(), out);
    return kOk;
}

int run_calc(const Options& o, std::ostream& out) {
    Semifield f = select_field(o.field, o.base.value());
    out << format_number(evaluate(o.expr, f).value()) << '\n';
    return kOk;
}

// Exhaustive search with the same right-fold path weight; keeps the first
// strictly better sequence in lexicographic order.
std::optional<DecodeResult> brute_force(const SequenceModel& m, const std::vector<std::size_t>& obs,
                                        const Semifield& f) {
    const double limit = 1e6;
    if (std::pow(double(m.states()), double(obs.size())) > limit) return std::nullopt;
    std::vector<std::size_t> path(obs.size(), 0);
    std::optional<DecodeResult> best;
    while (true) {
        ExtendedReal y = m.emission[obs.back()][path.back()];
        for (std::size_t t = obs.size() - 1; t-- > 0;) {
            y = f.mul(m.transition[path[t]][path[t + 1]], y);
            y = f.mul(m.emission[obs[t]][path[t]], y);
        }
        y = f.mul(m.initial[path[0]], y);
        if (!best || (f.precedes(best->score, y) && !(best->score == y))) best = DecodeResult{path, y};
        std::size_t t = path.size();
        while (t > 0 && ++path[t - 1] == m.states()) path[--t] = 0;
        if (t == 0) break;
    }
    return best;
}

std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

int run_viterbi(const Options& o, std::ostream& out) {
    Semifield f = select_field(o.field, o.base.value());
    ModelFile mf = parse_model(read_file(o.model));
    if (!o.observations.empty()) {
        mf.observations.clear();
        for (double x : parse_number_list(o.observations)) {
            if (!(x >= 0) || x != std::floor(x) || !std::isfinite(x)) {
                throw InputError("observations must be symbol indices");
            }
            mf.observations.push_back(static_cast<std::size_t>(x));
        }
    }
    DecodeResult r = viterbi_decode(mf.model, mf.observations, f);

    json doc{{"semifield", f.name()}, {"path", r.path}, {"score", json_number(r.score.value())}};
    std::ostringstream text;
    text << "semifield: " << f.name() << "\npath: " << join(r.path)
         << "\nscore: " << format_number(r.score.value()) << '\n';
    int code = kOk;
    if (o.check) {
        std::optional<DecodeResult> b = brute_force(mf.model, mf.observations, f);
        std::string verdict = "skipped (too many paths)";
        if (b) {
            bool same = b->path == r.path && b->score == r.score;
            verdict = same ? "match" : "MISMATCH";
            if (!same) code = kVerifyFailed;
        }
        text << "brute-force: " << verdict << '\n';
        doc["brute_force"] = verdict;
    }
    emit(o, o.format == "json" ? doc.dump(2) + "\n" : text.str(), out);
    return code;
}

std::uint64_t parse_seed(const std::string& s) {
    std::uint64_t v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size()) {
        throw InputError("SEMIFIELD_SEED must be an unsigned integer, got '" + s + "'");
    }
    return v;
}

int run_verify(const Options& o, std::ostream& out) {
    SuiteOptions opts;
    if (o.seed) {
        opts.seed = *o.seed;
    } else if (const char* env = std::getenv("SEMIFIELD_SEED")) {
        opts.seed = parse_seed(env);
    }
    PropertyReport report = run_property_suite(opts);
    out << "seed: " << report.seed << '\n';
    std::size_t failed = 0;
    for (const PropertyGroup& g : report.groups) {
        out << (g.ok() ? "PASS " : "FAIL ") << g.name << ": " << g.passed << '/' << g.total << '\n';
        if (!g.ok()) ++failed;
        if (!g.ok() || o.verbose) {
            for (const std::string& f : g.failures) out << "    " << f << '\n';
        }
    }
    out << (failed == 0 ? "all groups passed" : std::to_string(failed) + " group(s) failed") << '\n';
    return failed == 0 ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Entropy spectra, semifield arithmetic and path decoding over completed semifields"};
    app.name("semifield");
    app.require_subcommand(1);
    Options o;

    auto* spectrum_cmd = app.add_subcommand("spectrum", "shifted Rényi entropy spectrum per distribution");
    spectrum_cmd->add_option("--input,-i", o.input, "distribution file (JSON or CSV, '-' for stdin)")
        ->required();
    spectrum_cmd->add_option("--output,-o", o.output, "output file (default stdout)");
    spectrum_cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    spectrum_cmd->add_flag("--strict", o.strict, "reject distributions that do not sum to 1");
    add_base_options(*spectrum_cmd, o.base);
    add_grid_options(*spectrum_cmd, o.grid);

    auto* divergence_cmd = app.add_subcommand("divergence", "shifted Rényi divergence and cross-entropy");
    divergence_cmd->add_option("--input,-i", o.input, "distribution file (JSON or CSV, '-' for stdin)")
        ->required();
    divergence_cmd->add_option("--reference", o.reference,
                               "file whose first distribution is Q (default uniform)");
    divergence_cmd->add_option("--output,-o", o.output, "output file (default stdout)");
    divergence_cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    divergence_cmd->add_flag("--strict", o.strict, "reject distributions that do not sum to 1");
    add_base_options(*divergence_cmd, o.base);
    add_grid_options(*divergence_cmd, o.grid);

    auto* calc_cmd = app.add_subcommand("calc", "evaluate an expression in a semifield");
    calc_cmd->add_option("expr", o.expr, "expression, e.g. \"2 +^ 2\"")->required();
    add_field_options(*calc_cmd, o.field, "nnR");
    add_base_options(*calc_cmd, o.base);

    auto* viterbi_cmd = app.add_subcommand("viterbi", "best state sequence of a sequence model");
    viterbi_cmd->add_option("--model,-m", o.model, "model JSON file")->required();
    viterbi_cmd->add_option("--observations", o.observations, "comma-separated symbol indices");
    viterbi_cmd->add_flag("--check", o.check, "compare against exhaustive enumeration");
    viterbi_cmd->add_option("--output,-o", o.output, "output file (default stdout)");
    viterbi_cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    add_field_options(*viterbi_cmd, o.field, "max-times");
    add_base_options(*viterbi_cmd, o.base);

    auto* verify_cmd = app.add_subcommand("verify", "run the property suite");
    verify_cmd->add_option("--seed", o.seed, "RNG seed (default $SEMIFIELD_SEED or built-in)");
    verify_cmd->add_flag("--verbose,-v", o.verbose, "list sample failures of passing groups too");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (viterbi_cmd->parsed() && o.format == "csv") o.format = "text";
        if (spectrum_cmd->parsed()) return run_spectrum(o, out);
        if (divergence_cmd->parsed()) return run_divergence(o, out);
        if (calc_cmd->parsed()) return run_calc(o, out);
        if (viterbi_cmd->parsed()) return run_viterbi(o, out);
        return run_verify(o, out);
    } catch (const CalcParseError& e) {
        err << "error: " << e.what() << " at column " << e.column() + 1 << '\n'
            << caret_diagnostic(o.expr, e.column()) << '\n';
        return kUsageError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const UnknownSemifield& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
}

}  // namespace semifield::cli

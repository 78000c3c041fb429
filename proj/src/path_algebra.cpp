#include "semifield/path_algebra.hpp"

#include <cmath>
#include <functional>

#include "numeric.hpp"
#include "semifield/errors.hpp"

namespace semifield {

SemiMatrix::SemiMatrix(Semifield field, std::size_t rows, std::size_t cols,
                       std::vector<ExtendedReal> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0) throw DimensionMismatch("matrix dimensions must be positive");
    if (entries_.size() != rows_ * cols_) {
        throw DimensionMismatch("matrix entry count does not match its dimensions");
    }
    for (const ExtendedReal& x : entries_) {
        if (!field_.contains(x)) {
            throw DomainError("matrix entry outside the carrier of " + field_.name());
        }
    }
}

namespace {

std::vector<ExtendedReal> flatten(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw DimensionMismatch("matrix dimensions must be positive");
    std::vector<ExtendedReal> out;
    for (const auto& row : rows) {
        if (row.size() != rows.front().size()) throw DimensionMismatch("ragged matrix rows");
        out.insert(out.end(), row.begin(), row.end());
    }
    return out;
}

}  // namespace

SemiMatrix::SemiMatrix(Semifield field, const std::vector<std::vector<double>>& rows)
    : SemiMatrix(std::move(field), rows.size(), rows.empty() ? 0 : rows.front().size(),
                 flatten(rows)) {}

SemiMatrix SemiMatrix::identity(Semifield field, std::size_t n) {
    std::vector<ExtendedReal> e(n * n, field.bottom());
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = field.unit();
    return SemiMatrix(std::move(field), n, n, std::move(e));
}

bool operator==(const SemiMatrix& a, const SemiMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.entries_ == b.entries_;
}

SemiMatrix mat_mul(const SemiMatrix& a, const SemiMatrix& b, Dotting dotting) {
    if (!(a.field() == b.field())) throw FieldMismatch("matrices live in different semifields");
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("inner dimensions differ: " + std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()));
    }
    const Semifield& f = a.field();
    std::vector<ExtendedReal> out;
    out.reserve(a.rows() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            ExtendedReal acc = f.mul(dotting, a(i, 0), b(0, j));
            for (std::size_t k = 1; k < a.cols(); ++k) {
                acc = f.add(dotting, acc, f.mul(dotting, a(i, k), b(k, j)));
            }
            out.push_back(acc);
        }
    }
    return SemiMatrix(f, a.rows(), b.cols(), std::move(out));
}

SemiMatrix conjugate(const SemiMatrix& a) {
    std::vector<ExtendedReal> out;
    out.reserve(a.rows() * a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) {
        for (std::size_t j = 0; j < a.rows(); ++j) out.push_back(a.field().inverse(a(j, i)));
    }
    return SemiMatrix(a.field(), a.cols(), a.rows(), std::move(out));
}

bool AlternatingIdentityReport::all_hold() const {
    for (const IdentityCheck& c : checks) {
        if (!c.holds) return false;
    }
    return true;
}

namespace {

bool same_shape(const SemiMatrix& a, const SemiMatrix& b) {
    return a.rows() == b.rows() && a.cols() == b.cols();
}

bool approx_equal(const SemiMatrix& a, const SemiMatrix& b, double tol) {
    if (!same_shape(a, b)) return false;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        if (!detail::close_enough(a.entries()[i].value(), b.entries()[i].value(), tol)) return false;
    }
    return true;
}

// a <= b entrywise in the field's natural order, up to tolerance.
bool precedes(const SemiMatrix& a, const SemiMatrix& b, double tol) {
    if (!same_shape(a, b)) return false;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        double x = a.entries()[i].value();
        double y = b.entries()[i].value();
        if (!a.field().precedes(x, y) && !detail::close_enough(x, y, tol)) return false;
    }
    return true;
}

}  // namespace

AlternatingIdentityReport check_alternating_identities(const SemiMatrix& a, const SemiMatrix& m,
                                                       double tolerance) {
    const Semifield& f = a.field();
    if (!f.is_idempotent()) {
        throw NonIdempotentField(f.name() + " does not have an idempotent addition");
    }
    if (!(m.field() == f)) throw FieldMismatch("A and M live in different semifields");

    const Dotting lo = f.dotting();
    const Dotting up = lo == Dotting::lower ? Dotting::upper : Dotting::lower;
    auto L = [lo](const SemiMatrix& x, const SemiMatrix& y) { return mat_mul(x, y, lo); };
    auto U = [up](const SemiMatrix& x, const SemiMatrix& y) { return mat_mul(x, y, up); };
    const SemiMatrix c = conjugate(a);

    AlternatingIdentityReport report;
    auto eq = [&](std::string statement, const SemiMatrix& x, const SemiMatrix& y) {
        report.checks.push_back({std::move(statement), approx_equal(x, y, tolerance)});
    };

    eq("A ⊗̲ (A* ⊗̄ A) = A", L(a, U(c, a)), a);
    eq("A ⊗̄ (A* ⊗̲ A) = A", U(a, L(c, a)), a);
    eq("(A ⊗̄ A*) ⊗̲ A = A", L(U(a, c), a), a);
    eq("(A ⊗̲ A*) ⊗̄ A = A", U(L(a, c), a), a);
    eq("A* ⊗̲ (A ⊗̄ A*) = A*", L(c, U(a, c)), c);
    eq("A* ⊗̄ (A ⊗̲ A*) = A*", U(c, L(a, c)), c);
    eq("(A* ⊗̄ A) ⊗̲ A* = A*", L(U(c, a), c), c);
    eq("(A* ⊗̲ A) ⊗̄ A* = A*", U(L(c, a), c), c);

    const SemiMatrix ca = U(c, a);
    eq("A* ⊗̄ (A ⊗̲ (A* ⊗̄ A)) = A* ⊗̄ A", U(c, L(a, ca)), ca);
    eq("(A* ⊗̄ A) ⊗̲ (A* ⊗̄ A) = A* ⊗̄ A", L(ca, ca), ca);

    if (m.rows() == a.rows()) {
        report.item3_checked = true;
        const SemiMatrix cm = U(c, m);
        eq("A* ⊗̄ (A ⊗̲ (A* ⊗̄ M)) = A* ⊗̄ M", U(c, L(a, cm)), cm);
        eq("(A* ⊗̄ A) ⊗̲ (A* ⊗̄ M) = A* ⊗̄ M", L(ca, cm), cm);
    }
    if (m.rows() == a.cols()) {
        report.item4_checked = true;
        report.checks.push_back({"A* ⊗̄ (A ⊗̲ M) ≥ M", precedes(m, U(c, L(a, m)), tolerance)});
        report.checks.push_back({"A* ⊗̲ (A ⊗̄ M) ≤ M", precedes(L(c, U(a, m)), m, tolerance)});
    }
    return report;
}

namespace {

void validate_model(const SequenceModel& model, const std::vector<std::size_t>& observations,
                    const Semifield& field) {
    std::size_t m = model.states();
    if (m == 0) throw DimensionMismatch("a sequence model needs at least one state");
    if (observations.empty()) throw DomainError("observation sequence is empty");
    if (model.transition.size() != m) throw DimensionMismatch("transition matrix must be m×m");
    for (const auto& row : model.transition) {
        if (row.size() != m) throw DimensionMismatch("transition matrix must be m×m");
    }
    for (const auto& e : model.emission) {
        if (e.size() != m) throw DimensionMismatch("each emission vector needs one weight per state");
    }
    for (std::size_t o : observations) {
        if (o >= model.symbols()) {
            throw DomainError("observation symbol " + std::to_string(o) + " is not in the alphabet");
        }
    }

    auto check = [&field](double x) {
        if (std::isnan(x) || !field.contains(x)) {
            throw DomainError("model weight outside the carrier of " + field.name());
        }
    };
    for (double x : model.initial) check(x);
    for (const auto& row : model.transition) {
        for (double x : row) check(x);
    }
    for (const auto& e : model.emission) {
        for (double x : e) check(x);
    }

    if (field == builtin("nnR")) {
        for (const auto& row : model.transition) {
            double s = 0.0;
            for (double x : row) s += x;
            if (std::abs(s - 1.0) > 1e-9) {
                throw DomainError("transition rows must sum to 1 in nnR");
            }
        }
    }
}

// g_t(j): ⊕ over completions from state j at time t of
// b_j(o_t) ⊗ (a_{j k} ⊗ (b_k(o_{t+1}) ⊗ ...)).
std::vector<std::vector<ExtendedReal>> backward_pass(const SequenceModel& model,
                                                     const std::vector<std::size_t>& obs,
                                                     const Semifield& f) {
    std::size_t m = model.states();
    std::size_t T = obs.size();
    std::vector<std::vector<ExtendedReal>> g(T, std::vector<ExtendedReal>(m, f.bottom()));
    for (std::size_t j = 0; j < m; ++j) g[T - 1][j] = model.emission[obs[T - 1]][j];
    for (std::size_t t = T - 1; t-- > 0;) {
        for (std::size_t j = 0; j < m; ++j) {
            ExtendedReal acc = f.bottom();
            for (std::size_t k = 0; k < m; ++k) {
                acc = f.add(acc, f.mul(model.transition[j][k], g[t + 1][k]));
            }
            g[t][j] = f.mul(model.emission[obs[t]][j], acc);
        }
    }
    return g;
}

}  // namespace

DecodeResult viterbi_decode(const SequenceModel& model, const std::vector<std::size_t>& observations,
                            const Semifield& field) {
    if (!field.is_idempotent()) {
        throw NonIdempotentField("decoding needs an idempotent addition; " + field.name() +
                                 " is not idempotent");
    }
    validate_model(model, observations, field);
    const Semifield& f = field;
    std::size_t m = model.states();
    std::size_t T = observations.size();
    auto g = backward_pass(model, observations, f);

    ExtendedReal best = f.bottom();
    for (std::size_t j = 0; j < m; ++j) best = f.add(best, f.mul(model.initial[j], g[0][j]));

    // The weight of a path is a right fold, so the already chosen prefix acts
    // on a candidate tail value y through nested products. It is replayed for
    // every candidate so ties compare the exact values the full fold yields.
    std::vector<std::size_t> path;
    auto wrap = [&](ExtendedReal y) {
        for (std::size_t t = path.size(); t-- > 0;) {
            y = f.mul(model.emission[observations[t]][path[t]], y);
            y = f.mul(t == 0 ? model.initial[path[0]] : model.transition[path[t - 1]][path[t]], y);
        }
        return y;
    };
    for (std::size_t t = 0; t < T; ++t) {
        std::size_t chosen = m;
        for (std::size_t k = 0; k < m && chosen == m; ++k) {
            ExtendedReal step = t == 0 ? model.initial[k] : model.transition[path.back()][k];
            if (wrap(f.mul(step, g[t][k])) == best) chosen = k;
        }
        if (chosen == m) throw Error("decoding lost track of the optimum");
        path.push_back(chosen);
    }
    return {std::move(path), best};
}

ExtendedReal path_sum(const SequenceModel& model, const std::vector<std::size_t>& observations,
                      const Semifield& field) {
    validate_model(model, observations, field);
    auto g = backward_pass(model, observations, field);
    ExtendedReal total = field.bottom();
    for (std::size_t j = 0; j < model.states(); ++j) {
        total = field.add(total, field.mul(model.initial[j], g[0][j]));
    }
    return total;
}

}  // namespace semifield

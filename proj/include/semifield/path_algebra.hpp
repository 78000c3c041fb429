#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "semifield/extended_real.hpp"
#include "semifield/semifield.hpp"

namespace semifield {

/// Dense row-major matrix over a semifield carrier.
class SemiMatrix {
public:
    SemiMatrix(Semifield field, std::size_t rows, std::size_t cols,
               std::vector<ExtendedReal> entries);
    SemiMatrix(Semifield field, const std::vector<std::vector<double>>& rows);

    /// e on the diagonal, ⊥ elsewhere.
    static SemiMatrix identity(Semifield field, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Semifield& field() const { return field_; }
    ExtendedReal operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    const std::vector<ExtendedReal>& entries() const { return entries_; }

    friend bool operator==(const SemiMatrix& a, const SemiMatrix& b);

private:
    Semifield field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<ExtendedReal> entries_;
};

/// (A ⊗ B)_ij = ⊕_k a_ik ⊗ b_kj with the operations of the given dotting.
SemiMatrix mat_mul(const SemiMatrix& a, const SemiMatrix& b, Dotting dotting);

/// (A*)_ij = (A_ji)⁻¹.
SemiMatrix conjugate(const SemiMatrix& a);

struct IdentityCheck {
    std::string statement;
    bool holds;
};

struct AlternatingIdentityReport {
    std::vector<IdentityCheck> checks;
    /// False when M did not conform to the shapes item 3 or item 4 needs.
    bool item3_checked = false;
    bool item4_checked = false;

    bool all_hold() const;
};

/// Checks the alternating-product identities of an idempotent semifield on A
/// and a terminal matrix M:
///   1. A ⊗̲ (A* ⊗̄ A) = A ⊗̄ (A* ⊗̲ A) = (A ⊗̄ A*) ⊗̲ A = (A ⊗̲ A*) ⊗̄ A = A,
///      and the same with A and A* exchanged;
///   2. A* ⊗̄ (A ⊗̲ (A* ⊗̄ A)) = A* ⊗̄ A = (A* ⊗̄ A) ⊗̲ (A* ⊗̄ A);
///   3. A* ⊗̄ (A ⊗̲ (A* ⊗̄ M)) = A* ⊗̄ M = (A* ⊗̄ A) ⊗̲ (A* ⊗̄ M);
///   4. A* ⊗̄ (A ⊗̲ M) ≥ M and A* ⊗̲ (A ⊗̄ M) ≤ M.
/// ⊗̲ is the field's own dotting and ≥ its natural order. Item 3 needs M with
/// A.rows() rows, item 4 M with A.cols() rows. Equalities are compared with a
/// relative tolerance. Throws NonIdempotentField.
AlternatingIdentityReport check_alternating_identities(const SemiMatrix& a, const SemiMatrix& m,
                                                       double tolerance = 1e-9);

/// Hidden-Markov-style model with raw weights; the semifield is chosen at
/// decoding time. emission[s][j] is the weight of symbol s in state j.
struct SequenceModel {
    std::vector<double> initial;
    std::vector<std::vector<double>> transition;
    std::vector<std::vector<double>> emission;

    std::size_t states() const { return initial.size(); }
    std::size_t symbols() const { return emission.size(); }
};

struct DecodeResult {
    std::vector<std::size_t> path;
    ExtendedReal score;
};

/// Best state sequence under the field's order, with path weight
///   π_{s0} ⊗ (b_{s0}(o0) ⊗ (a_{s0 s1} ⊗ (b_{s1}(o1) ⊗ ...))).
/// Ties go to the lexicographically smallest sequence. The addition must be
/// idempotent (NonIdempotentField otherwise).
DecodeResult viterbi_decode(const SequenceModel& model, const std::vector<std::size_t>& observations,
                            const Semifield& field);

/// ⊕ over all state sequences of the path weight.
ExtendedReal path_sum(const SequenceModel& model, const std::vector<std::size_t>& observations,
                      const Semifield& field);

}  // namespace semifield

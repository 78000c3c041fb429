#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "semifield/semifield.hpp"

namespace semifield {

struct PropertyGroup {
    std::string name;
    std::size_t passed = 0;
    std::size_t total = 0;
    /// The first few failing cases, one line each.
    std::vector<std::string> failures;

    bool ok() const { return passed == total; }
};

struct PropertyReport {
    std::uint64_t seed = 0;
    std::vector<PropertyGroup> groups;

    bool all_pass() const;
};

struct SuiteOptions {
    std::uint64_t seed = 20240101;
    /// Random triples per semifield in the axiom and pair-law groups.
    std::size_t triples = 10000;
    /// Random distributions per entropy group.
    std::size_t distributions = 100;
};

/// The builtins plus R_r and H_r at r in {±0.5, ±2, ±10}.
std::vector<Semifield> law_test_fields();

/// Equality used by the law checks: exact whenever either side is ⊥ or ⊤ of
/// `f`, relative `tol` otherwise.
bool law_equal(const Semifield& f, double a, double b, double tol);

/// Associativity, commutativity, distributivity, neutral elements, absorption
/// and inverses of the descriptor's own operations on random finite triples.
PropertyGroup check_axioms(const Semifield& f, std::uint64_t seed, std::size_t triples);
/// The same axioms on all 27 triples over {⊥, e, ⊤}.
PropertyGroup check_corner_axioms(const Semifield& f);
/// De Morgan laws, modular laws and the self-dual inequality of the pair `f`
/// belongs to, on random triples and on every triple over {⊥, e, ⊤}.
std::vector<PropertyGroup> check_pair_laws(const Semifield& f, std::uint64_t seed,
                                           std::size_t triples);
/// The 18 cells of the r < 0 and r > 0 case tables of semifield_mean.
PropertyGroup check_corner_tables();

/// Runs every group; the same seed yields the same report.
PropertyReport run_property_suite(const SuiteOptions& opts = {});

}  // namespace semifield

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "semifield/path_algebra.hpp"

namespace semifield::cli {

/// Malformed input text or an unreadable/unwritable file. Exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct NamedDistribution {
    std::string id;
    std::vector<double> p;
};

/// `%.12g`, with `inf`/`-inf` literals and negative zero printed as 0.
std::string format_number(double x);

/// A real numeral or a case-insensitive `inf`, `+inf`, `-inf`. NaN is rejected.
double parse_number(std::string_view token);

/// Comma-separated numbers, surrounding blanks ignored.
std::vector<double> parse_number_list(std::string_view text);

/// JSON array of {"id", "p"} objects (or one such object), or bare CSV rows
/// of probabilities, ids "1", "2", ... in row order.
std::vector<NamedDistribution> parse_distributions(std::string_view text);

/// {"initial": [...], "transition": [[...]], "emission": [[...]] (one vector
/// per symbol), "observations": [...] (optional)}. Numbers may be given as
/// the strings "inf" / "-inf".
struct ModelFile {
    SequenceModel model;
    std::vector<std::size_t> observations;
};
ModelFile parse_model(std::string_view text);

std::string read_file(const std::filesystem::path& path);

/// Writes to a sibling temporary and renames it over `path`.
void write_file_atomically(const std::filesystem::path& path, std::string_view contents);

}  // namespace semifield::cli

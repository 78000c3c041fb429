#include "io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace semifield::cli {

using json = nlohmann::json;

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0.0) return "0";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(a[i])) != b[i]) return false;
    }
    return true;
}

}  // namespace

double parse_number(std::string_view token) {
    std::string_view t = trim(token);
    if (iequals(t, "inf") || iequals(t, "+inf")) return INFINITY;
    if (iequals(t, "-inf")) return -INFINITY;
    std::string_view digits = t;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    double value = 0.0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size() ||
        std::isnan(value) || std::isinf(value)) {
        throw InputError("not a number: '" + std::string(t) + "'");
    }
    return value;
}

std::vector<double> parse_number_list(std::string_view text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        out.push_back(parse_number(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

namespace {

double json_number(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return parse_number(j.get<std::string>());
    throw InputError("expected a number, got " + j.dump());
}

std::vector<double> json_numbers(const json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
    std::vector<double> out;
    for (const json& x : j) out.push_back(json_number(x));
    return out;
}

NamedDistribution json_distribution(const json& j, std::size_t index) {
    if (!j.is_object() || !j.contains("p")) {
        throw InputError("distribution " + std::to_string(index + 1) + " needs a \"p\" array");
    }
    NamedDistribution d;
    if (j.contains("id")) {
        const json& id = j.at("id");
        d.id = id.is_string() ? id.get<std::string>() : id.dump();
    } else {
        d.id = std::to_string(index + 1);
    }
    d.p = json_numbers(j.at("p"), "\"p\"");
    return d;
}

}  // namespace

std::vector<NamedDistribution> parse_distributions(std::string_view text) {
    std::string_view body = trim(text);
    std::vector<NamedDistribution> out;
    if (!body.empty() && (body.front() == '[' || body.front() == '{')) {
        json doc;
        try {
            doc = json::parse(body);
        } catch (const json::parse_error& e) {
            throw InputError(std::string("invalid JSON: ") + e.what());
        }
        if (doc.is_object()) {
            out.push_back(json_distribution(doc, 0));
        } else {
            for (std::size_t i = 0; i < doc.size(); ++i) out.push_back(json_distribution(doc[i], i));
        }
    } else {
        std::istringstream in{std::string(body)};
        std::string line;
        std::size_t row = 0;
        while (std::getline(in, line)) {
            std::string_view l = trim(line);
            if (l.empty() || l.front() == '#') continue;
            ++row;
            try {
                out.push_back({std::to_string(row), parse_number_list(l)});
            } catch (const InputError& e) {
                throw InputError("row " + std::to_string(row) + ": " + e.what());
            }
        }
    }
    if (out.empty()) throw InputError("no distributions in input");
    return out;
}

ModelFile parse_model(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InputError("model must be a JSON object");
    for (const char* key : {"initial", "transition", "emission"}) {
        if (!doc.contains(key)) throw InputError(std::string("model is missing \"") + key + "\"");
    }
    ModelFile m;
    m.model.initial = json_numbers(doc.at("initial"), "\"initial\"");
    if (!doc.at("transition").is_array()) throw InputError("\"transition\" must be an array");
    for (const json& row : doc.at("transition")) {
        m.model.transition.push_back(json_numbers(row, "transition rows"));
    }
    if (!doc.at("emission").is_array()) throw InputError("\"emission\" must be an array");
    for (const json& row : doc.at("emission")) {
        m.model.emission.push_back(json_numbers(row, "emission vectors"));
    }
    if (doc.contains("observations")) {
        for (const json& o : doc.at("observations")) {
            if (!o.is_number_unsigned()) throw InputError("observations must be symbol indices");
            m.observations.push_back(o.get<std::size_t>());
        }
    }
    return m;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomically(const std::filesystem::path& path, std::string_view contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InputError("cannot write '" + path.string() + "'");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw InputError("cannot write '" + path.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw InputError("cannot write '" + path.string() + "'");
    }
}

}  // namespace semifield::cli

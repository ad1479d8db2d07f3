#pragma once

// JSON code files. serialize() writes a fixed layout (one matrix row per
// line, keys in a fixed order) so equal codes give byte-identical files.

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lrc/construction.hpp"
#include "lrc/error.hpp"
#include "lrc/lrcode.hpp"

namespace lrc {

namespace detail {

template <class T>
void write_row(std::ostringstream& os, const std::vector<T>& row) {
    os << '[';
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << ']';
}

template <class Rows>
void write_rows(std::ostringstream& os, const char* key, const Rows& rows, bool last) {
    os << "  \"" << key << "\": [";
    if (rows.empty()) {
        os << "]";
    } else {
        os << '\n';
        for (std::size_t i = 0; i < rows.size(); ++i) {
            os << "    ";
            write_row(os, rows[i]);
            os << (i + 1 < rows.size() ? ",\n" : "\n");
        }
        os << "  ]";
    }
    os << (last ? "\n" : ",\n");
}

inline nlohmann::json predicted_to_json(const LinearCode& code) {
    const auto& p = code.predicted;
    nlohmann::json j;
    j["d_lower"] = p.d_lower;
    j["d_upper"] = p.d_upper;
    j["d_opt"] = code.d_opt();
    j["k"] = p.k ? nlohmann::json(*p.k) : nlohmann::json(nullptr);
    j["k_basis"] = p.k_basis;
    if (p.k_alt) j["k_alt"] = *p.k_alt;
    if (!p.notes.empty()) j["notes"] = p.notes;
    return j;
}

/// 1-based line of the first occurrence of "key" in the text, 0 if absent.
inline std::size_t line_of_key(const std::string& text, const std::string& key) {
    const auto pos = text.find("\"" + key + "\"");
    if (pos == std::string::npos) return 0;
    return static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(pos), '\n')) + 1;
}

}  // namespace detail

inline std::string serialize(const LinearCode& code) {
    std::ostringstream os;
    nlohmann::json field = {{"p", code.field->p()}, {"m", code.field->m()}, {"modulus", code.field->modulus()}};
    os << "{\n";
    os << "  \"field\": " << field.dump() << ",\n";
    os << "  \"n\": " << code.n << ",\n";
    os << "  \"k\": " << code.k << ",\n";
    os << "  \"r\": " << code.r << ",\n";
    os << "  \"family\": " << nlohmann::json(std::string(family_tag(code.spec.family))).dump() << ",\n";
    os << "  \"params\": " << params_to_json(code.spec).dump() << ",\n";
    os << "  \"predicted\": " << detail::predicted_to_json(code).dump() << ",\n";
    detail::write_rows(os, "generator", code.generator.to_rows(), false);
    detail::write_rows(os, "recovery_sets", code.recovery_sets, false);
    detail::write_rows(os, "recovery_weights", code.recovery_weights, true);
    os << "}\n";
    return os.str();
}

/// Parses a code file. Syntax errors carry the line; semantic errors carry
/// the field path and the line where that section starts.
inline LinearCode deserialize(const std::string& text) {
    using nlohmann::json;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
        const auto line = std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n') + 1;
        throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + e.what());
    }

    auto fail = [&](const std::string& section, const std::string& path, const std::string& what) -> Error {
        const auto line = detail::line_of_key(text, section);
        std::string where = line ? "line " + std::to_string(line) + ", " : "";
        return Error(Errc::ParseError, where + path + ": " + what);
    };
    auto section = [&](const char* key) -> const json& {
        if (!j.is_object() || !j.contains(key)) throw fail(key, key, "missing section");
        return j.at(key);
    };
    auto integer = [&](const json& v, const std::string& sec, const std::string& path) -> long long {
        if (!v.is_number_integer()) throw fail(sec, path, "expected an integer");
        return v.get<long long>();
    };

    LinearCode code;
    const json& fj = section("field");
    if (!fj.is_object() || !fj.contains("p") || !fj.contains("m") || !fj.contains("modulus"))
        throw fail("field", "field", "expected {p, m, modulus}");
    try {
        const auto p = integer(fj["p"], "field", "field.p");
        const auto m = integer(fj["m"], "field", "field.m");
        if (p < 2 || m < 1) throw fail("field", "field", "p >= 2 and m >= 1 required");
        if (!fj["modulus"].is_array()) throw fail("field", "field.modulus", "expected an array");
        std::vector<std::uint32_t> mod;
        for (std::size_t i = 0; i < fj["modulus"].size(); ++i)
            mod.push_back(static_cast<std::uint32_t>(integer(fj["modulus"][i], "field", "field.modulus[" + std::to_string(i) + "]")));
        code.field = make_field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m), mod);
    } catch (const Error& e) {
        if (e.code() == Errc::ParseError) throw;
        throw fail("field", "field", e.what());
    }
    const Field& f = *code.field;

    auto positive = [&](const char* key) {
        const auto v = integer(section(key), key, key);
        if (v < 0) throw fail(key, key, "must be non-negative");
        return static_cast<int>(v);
    };
    code.n = positive("n");
    code.k = positive("k");
    code.r = positive("r");
    if (code.n < 1 || code.r < 1) throw fail("n", "n, r", "must be >= 1");

    const json& fam = section("family");
    if (!fam.is_string()) throw fail("family", "family", "expected a string");
    const auto family = parse_family(fam.get<std::string>());
    if (!family) throw fail("family", "family", "unknown family '" + fam.get<std::string>() + "'");
    code.spec.family = *family;
    code.spec.p = f.p();
    code.spec.m = f.m();
    code.spec.modulus = f.modulus();
    try {
        params_from_json(section("params"), code.spec, "params");
    } catch (const Error& e) {
        throw fail("params", "params", e.what());
    }

    const json& pj = section("predicted");
    if (!pj.is_object()) throw fail("predicted", "predicted", "expected an object");
    for (const char* key : {"d_lower", "d_upper", "d_opt", "k", "k_basis"})
        if (!pj.contains(key)) throw fail("predicted", std::string("predicted.") + key, "missing");
    code.predicted.d_lower = static_cast<int>(integer(pj["d_lower"], "predicted", "predicted.d_lower"));
    code.predicted.d_upper = static_cast<int>(integer(pj["d_upper"], "predicted", "predicted.d_upper"));
    code.predicted.k_basis = static_cast<int>(integer(pj["k_basis"], "predicted", "predicted.k_basis"));
    if (!pj["k"].is_null()) code.predicted.k = static_cast<int>(integer(pj["k"], "predicted", "predicted.k"));
    if (pj.contains("k_alt")) code.predicted.k_alt = static_cast<int>(integer(pj["k_alt"], "predicted", "predicted.k_alt"));
    if (pj.contains("notes")) {
        if (!pj["notes"].is_array()) throw fail("predicted", "predicted.notes", "expected an array");
        for (const auto& s : pj["notes"]) {
            if (!s.is_string()) throw fail("predicted", "predicted.notes", "expected strings");
            code.predicted.notes.push_back(s.get<std::string>());
        }
    }
    if (integer(pj["d_opt"], "predicted", "predicted.d_opt") != code.d_opt())
        throw fail("predicted", "predicted.d_opt", "inconsistent with n, k, r");

    auto matrix_section = [&](const char* key, std::size_t rows, std::size_t cols, std::uint64_t bound,
                              const char* what) {
        const json& s = section(key);
        if (!s.is_array()) throw fail(key, key, "expected an array");
        if (s.size() != rows)
            throw fail(key, key, "expected " + std::to_string(rows) + " rows, found " + std::to_string(s.size()));
        std::vector<std::vector<std::uint64_t>> out(rows);
        for (std::size_t i = 0; i < rows; ++i) {
            const std::string row_path = std::string(key) + "[" + std::to_string(i) + "]";
            if (!s[i].is_array() || s[i].size() != cols)
                throw fail(key, row_path, "expected " + std::to_string(cols) + " entries");
            for (std::size_t c = 0; c < cols; ++c) {
                const auto v = integer(s[i][c], key, row_path + "[" + std::to_string(c) + "]");
                if (v < 0 || static_cast<std::uint64_t>(v) >= bound)
                    throw fail(key, row_path + "[" + std::to_string(c) + "]",
                               std::to_string(v) + " is not " + what);
                out[i].push_back(static_cast<std::uint64_t>(v));
            }
        }
        return out;
    };

    const auto gen = matrix_section("generator", code.k, code.n, f.q(), ("an element of " + f.describe()).c_str());
    code.generator = Matrix(code.field, code.k, code.n);
    for (std::size_t i = 0; i < gen.size(); ++i)
        for (std::size_t c = 0; c < gen[i].size(); ++c) code.generator(i, c) = static_cast<Elem>(gen[i][c]);

    const auto sets = matrix_section("recovery_sets", code.n, code.r, code.n, "a coordinate index");
    for (const auto& row : sets) code.recovery_sets.emplace_back(row.begin(), row.end());
    const auto weights = matrix_section("recovery_weights", code.n, code.r, f.q(), ("an element of " + f.describe()).c_str());
    for (const auto& row : weights) {
        code.recovery_weights.emplace_back();
        for (auto v : row) code.recovery_weights.back().push_back(static_cast<Elem>(v));
    }
    return code;
}

}  // namespace lrc

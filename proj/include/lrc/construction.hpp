#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lrc/curves.hpp"
#include "lrc/error.hpp"

namespace lrc {

enum class Family {
    Baseline,
    TamoBarg,
    CyclicCover,
    P1xP1Coarse,
    P1xP1Refined,
    HirzebruchCoarse,
    HirzebruchRefined,
    EllipticLegendre,
    EllipticXEqualsY2,
    Ulmer,
};

inline constexpr std::pair<Family, std::string_view> kFamilyTags[] = {
    {Family::Baseline, "baseline"},
    {Family::TamoBarg, "tamo-barg"},
    {Family::CyclicCover, "cyclic"},
    {Family::P1xP1Coarse, "p1xp1"},
    {Family::P1xP1Refined, "p1xp1-refined"},
    {Family::HirzebruchCoarse, "hirzebruch"},
    {Family::HirzebruchRefined, "hirzebruch-refined"},
    {Family::EllipticLegendre, "elliptic-legendre"},
    {Family::EllipticXEqualsY2, "elliptic-r5"},
    {Family::Ulmer, "ulmer"},
};

inline std::string_view family_tag(Family f) {
    for (const auto& [fam, tag] : kFamilyTags)
        if (fam == f) return tag;
    return "unknown";
}

inline std::optional<Family> parse_family(std::string_view tag) {
    for (const auto& [fam, tag_] : kFamilyTags)
        if (tag_ == tag) return fam;
    return std::nullopt;
}

/// Families whose function space is sized by a design distance.
inline bool uses_design_distance(Family f) {
    switch (f) {
        case Family::CyclicCover:
        case Family::P1xP1Coarse:
        case Family::P1xP1Refined:
        case Family::HirzebruchCoarse:
        case Family::HirzebruchRefined: return true;
        default: return false;
    }
}

inline bool is_elliptic(Family f) {
    return f == Family::EllipticLegendre || f == Family::EllipticXEqualsY2 || f == Family::Ulmer;
}

enum class PointSource { RationalNormal, Sampled };

/// Family tag plus every parameter a constructor may read. Unset optionals
/// take the family's default or are required (the constructor says which).
struct ConstructionSpec {
    Family family = Family::Baseline;
    std::uint32_t p = 0;
    std::uint32_t m = 1;
    std::optional<std::vector<std::uint32_t>> modulus;

    std::optional<int> r;
    std::optional<int> b;
    std::optional<int> M;
    std::optional<int> N;
    std::optional<int> alpha;
    std::optional<int> mh;
    /// Design distance of the ruled and Hirzebruch families.
    std::optional<int> dd;
    /// Design distance of the elliptic families.
    std::optional<int> d;
    std::optional<Elem> c;
    std::vector<Elem> g;
    std::vector<curves::CurveTerm> curve_terms;

    PointSource point_source = PointSource::RationalNormal;
    std::uint64_t seed = 0;

    bool operator==(const ConstructionSpec&) const = default;
};

inline nlohmann::json params_to_json(const ConstructionSpec& s) {
    nlohmann::json j = nlohmann::json::object();
    auto put = [&](const char* key, const std::optional<int>& v) {
        if (v) j[key] = *v;
    };
    put("r", s.r);
    put("b", s.b);
    put("M", s.M);
    put("N", s.N);
    put("alpha", s.alpha);
    put("mh", s.mh);
    put("dd", s.dd);
    put("d", s.d);
    if (s.c) j["c"] = *s.c;
    if (!s.g.empty()) j["g"] = s.g;
    if (!s.curve_terms.empty()) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& t : s.curve_terms) terms.push_back({t.x_exp, t.t_exp, t.coeff});
        j["curve"] = terms;
    }
    if (s.point_source == PointSource::Sampled) {
        j["point_source"] = "sampled";
        j["seed"] = s.seed;
    }
    return j;
}

/// Reads the "params" object of a code file. `where` prefixes diagnostics.
inline void params_from_json(const nlohmann::json& j, ConstructionSpec& s, const std::string& where) {
    if (!j.is_object()) throw Error(Errc::ParseError, where + ": expected an object");
    auto get = [&](const char* key, std::optional<int>& v) {
        if (!j.contains(key)) return;
        if (!j[key].is_number_integer()) throw Error(Errc::ParseError, where + "." + key + ": expected an integer");
        v = j[key].get<int>();
    };
    get("r", s.r);
    get("b", s.b);
    get("M", s.M);
    get("N", s.N);
    get("alpha", s.alpha);
    get("mh", s.mh);
    get("dd", s.dd);
    get("d", s.d);
    try {
        if (j.contains("c")) s.c = j["c"].get<Elem>();
        if (j.contains("g")) s.g = j["g"].get<std::vector<Elem>>();
        if (j.contains("curve")) {
            for (const auto& t : j["curve"]) {
                if (!t.is_array() || t.size() != 3) throw Error(Errc::ParseError, where + ".curve: expected [i, j, c]");
                s.curve_terms.push_back({t[0].get<unsigned>(), t[1].get<unsigned>(), t[2].get<Elem>()});
            }
        }
        if (j.contains("point_source")) {
            const auto src = j["point_source"].get<std::string>();
            if (src != "sampled" && src != "rational-normal")
                throw Error(Errc::ParseError, where + ".point_source: unknown value '" + src + "'");
            s.point_source = src == "sampled" ? PointSource::Sampled : PointSource::RationalNormal;
        }
        if (j.contains("seed")) s.seed = j["seed"].get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, where + ": " + e.what());
    }
}

}  // namespace lrc

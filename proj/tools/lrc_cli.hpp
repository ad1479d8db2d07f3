#pragma once

// Command-line front end: construct, verify, recover, table.
// Exit codes: 0 success, 1 failed check or construction error, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lrc/codefile.hpp"
#include "lrc/construction.hpp"
#include "lrc/families.hpp"
#include "lrc/lrcode.hpp"
#include "lrc/oracles.hpp"

namespace lrc::cli {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::uint64_t default_seed() {
    if (const char* env = std::getenv("LRC_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError("LRC_SEED is not an unsigned integer");
        }
    }
    return 0;
}

/// Left-aligned text table, or CSV.
class Table {
public:
    explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    std::string text() const {
        std::vector<std::size_t> w(header_.size(), 0);
        auto widen = [&](const std::vector<std::string>& r) {
            for (std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
        };
        widen(header_);
        for (const auto& r : rows_) widen(r);
        std::ostringstream os;
        auto line = [&](const std::vector<std::string>& r) {
            std::string s;
            for (std::size_t i = 0; i < r.size(); ++i) {
                s += r[i];
                if (i + 1 < r.size()) s += std::string(w[i] - r[i].size() + 2, ' ');
            }
            os << s << '\n';
        };
        line(header_);
        for (const auto& r : rows_) line(r);
        return os.str();
    }

    std::string csv() const {
        std::ostringstream os;
        auto line = [&](const std::vector<std::string>& r) {
            for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
            os << '\n';
        };
        line(header_);
        for (const auto& r : rows_) line(r);
        return os.str();
    }

    nlohmann::json json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows_) {
            nlohmann::json o;
            for (std::size_t i = 0; i < r.size(); ++i) o[header_[i]] = r[i];
            arr.push_back(o);
        }
        return arr;
    }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

inline std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

inline long long parse_int(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw UsageError(what + ": '" + s + "' is not an integer");
    }
    if (used != s.size()) throw UsageError(what + ": '" + s + "' is not an integer");
    return v;
}

/// "--g" is a coefficient list c0,c1,... for tamo-barg and a term list
/// i:j:c,... (c x^i t^j) for the coarse ruled families.
inline void apply_g(ConstructionSpec& spec, const std::string& g) {
    if (spec.family == Family::TamoBarg) {
        for (const auto& tok : split(g, ',')) {
            const auto v = parse_int(tok, "--g");
            if (v < 0) throw UsageError("--g: negative coefficient");
            spec.g.push_back(static_cast<Elem>(v));
        }
    } else if (spec.family == Family::P1xP1Coarse || spec.family == Family::HirzebruchCoarse) {
        for (const auto& tok : split(g, ',')) {
            const auto parts = split(tok, ':');
            if (parts.size() != 3) throw UsageError("--g: expected terms i:j:c, got '" + tok + "'");
            const auto i = parse_int(parts[0], "--g"), j = parse_int(parts[1], "--g"), c = parse_int(parts[2], "--g");
            if (i < 0 || j < 0 || c < 0) throw UsageError("--g: negative entry in '" + tok + "'");
            spec.curve_terms.push_back({static_cast<unsigned>(i), static_cast<unsigned>(j), static_cast<Elem>(c)});
        }
    } else {
        throw UsageError("--g is not used by family " + std::string(family_tag(spec.family)));
    }
}

inline const std::optional<int>& param_ref(const ConstructionSpec& s, std::string_view name) {
    if (name == "r") return s.r;
    if (name == "b") return s.b;
    if (name == "M") return s.M;
    if (name == "N") return s.N;
    if (name == "alpha") return s.alpha;
    if (name == "mh") return s.mh;
    if (name == "dd") return s.dd;
    return s.d;
}

inline void require_params(const ConstructionSpec& spec) {
    for (auto name : families::required_params(spec.family))
        if (!param_ref(spec, name))
            throw UsageError("missing --" + std::string(name) + " for family " + std::string(family_tag(spec.family)));
}

/* Reports ------------------------------------------------------------------- */

inline std::string mode_name(ParamReport::DistanceKind k) {
    switch (k) {
        case ParamReport::DistanceKind::Exact: return "exact";
        case ParamReport::DistanceKind::SampledUpper: return "sampled";
        case ParamReport::DistanceKind::Witness: return "witness";
        case ParamReport::DistanceKind::None: break;
    }
    return "none";
}

inline std::string d_measured_str(const ParamReport& rep) {
    if (!rep.d_measured) return "-";
    if (rep.oracle_mode == ParamReport::DistanceKind::Exact) return std::to_string(*rep.d_measured);
    return "<= " + std::to_string(*rep.d_measured) + " (" + mode_name(rep.oracle_mode) + ")";
}

inline nlohmann::json report_json(const LinearCode& code, const ParamReport& rep) {
    nlohmann::json j;
    j["family"] = std::string(family_tag(code.spec.family));
    j["field"] = code.field->describe();
    j["n"] = rep.n;
    j["r"] = code.r;
    j["k_measured"] = rep.k_measured;
    j["k_predicted"] = rep.k_predicted ? nlohmann::json(*rep.k_predicted) : nlohmann::json(nullptr);
    if (rep.k_alt) j["k_alt"] = *rep.k_alt;
    j["k_basis"] = rep.k_basis;
    j["d_lower_predicted"] = rep.d_lower_predicted;
    j["d_upper_predicted"] = rep.d_upper_predicted;
    j["d_opt"] = rep.d_opt;
    j["d_measured"] = rep.d_measured ? nlohmann::json(*rep.d_measured) : nlohmann::json(nullptr);
    j["oracle_mode"] = mode_name(rep.oracle_mode);
    j["verdict"] = rep.verdict();
    if (!code.predicted.notes.empty()) j["notes"] = code.predicted.notes;
    return j;
}

inline std::string report_text(const LinearCode& code, const ParamReport& rep) {
    Table t({"quantity", "predicted", "measured"});
    t.add({"family", std::string(family_tag(code.spec.family)), ""});
    t.add({"field", code.field->describe(), ""});
    t.add({"n", "", std::to_string(rep.n)});
    t.add({"r", "", std::to_string(code.r)});
    std::string kp = opt_str(rep.k_predicted);
    if (rep.k_alt) kp += " / alt " + std::to_string(*rep.k_alt);
    t.add({"k", kp + " (basis " + std::to_string(rep.k_basis) + ")", std::to_string(rep.k_measured)});
    t.add({"d_lower", std::to_string(rep.d_lower_predicted), ""});
    t.add({"d_upper", std::to_string(rep.d_upper_predicted) + (rep.upper_bound_applies() ? "" : " (k differs, not applied)"), ""});
    t.add({"d_opt", "", std::to_string(rep.d_opt)});
    t.add({"d", "", d_measured_str(rep)});
    t.add({"verdict", "", rep.verdict()});
    std::string s = t.text();
    for (const auto& note : code.predicted.notes) s += "note: " + note + "\n";
    return s;
}

/* Distance measurement shared by verify and table ---------------------------- */

struct DistanceResult {
    int d = 0;
    ParamReport::DistanceKind mode = ParamReport::DistanceKind::None;
    std::string detail;
};

inline DistanceResult measure_distance(const LinearCode& code, bool exhaustive, std::uint64_t budget,
                                       std::size_t samples, std::uint64_t seed) {
    DistanceResult res;
    if (exhaustive) {
        try {
            res.d = oracles::exact_distance(code, budget);
            res.mode = ParamReport::DistanceKind::Exact;
            return res;
        } catch (const Error& e) {
            if (e.code() != Errc::BudgetExceeded) throw;
            res.detail = std::string("exact enumeration skipped: ") + e.what();
        }
    }
    res.d = oracles::sampled_distance_upper(code, samples, seed);
    res.mode = ParamReport::DistanceKind::SampledUpper;
    const int target = code.predicted.d_lower;
    if (target >= 1 && target < res.d)
        if (auto w = oracles::min_weight_witness(code, target, seed)) {
            res.d = oracles::weight(*w);
            res.mode = ParamReport::DistanceKind::Witness;
        }
    return res;
}

/// Bound checks on a measured distance; returns the violated bounds.
inline std::vector<std::string> distance_violations(const ParamReport& rep) {
    std::vector<std::string> out;
    if (!rep.d_measured) return out;
    const int d = *rep.d_measured;
    if (d < rep.d_lower_predicted)
        out.push_back("d " + std::string(rep.oracle_mode == ParamReport::DistanceKind::Exact ? "= " : "<= ") +
                      std::to_string(d) + " < d_lower = " + std::to_string(rep.d_lower_predicted));
    if (rep.oracle_mode == ParamReport::DistanceKind::Exact) {
        if (d > rep.d_opt) out.push_back("d = " + std::to_string(d) + " > d_opt = " + std::to_string(rep.d_opt));
        if (rep.upper_bound_applies() && d > rep.d_upper_predicted)
            out.push_back("d = " + std::to_string(d) + " > d_upper = " + std::to_string(rep.d_upper_predicted));
    }
    return out;
}

/* Reference instances -------------------------------------------------------- */

struct Instance {
    std::string label;
    ConstructionSpec spec;
};

inline ConstructionSpec spec_of(Family f, std::uint32_t p, std::uint32_t m) {
    ConstructionSpec s;
    s.family = f;
    s.p = p;
    s.m = m;
    return s;
}

inline std::vector<Instance> reference_instances() {
    std::vector<Instance> out;
    {
        auto s = spec_of(Family::Baseline, 3, 2);
        s.r = 3, s.b = 8, s.M = 7, s.N = 6;
        out.push_back({"baseline (32,22,4,3)", s});
    }
    {
        auto s = spec_of(Family::TamoBarg, 13, 1);
        s.r = 3, s.b = 3, s.N = 1;
        out.push_back({"tamo-barg g=x^4", s});
    }
    for (std::uint32_t p : {5u, 13u}) {
        auto s = spec_of(Family::CyclicCover, p, 1);
        s.r = 3, s.c = 2, s.dd = p == 5 ? 4 : 12;
        out.push_back({"cyclic x^4=t^2+2 q=" + std::to_string(p), s});
    }
    {
        auto s = spec_of(Family::P1xP1Coarse, 3, 2);
        s.r = 3, s.alpha = 2, s.dd = 8;
        out.push_back({"p1xp1 coarse q=9", s});
    }
    {
        auto s = spec_of(Family::P1xP1Refined, 3, 2);
        s.r = 3, s.alpha = 2, s.dd = 8;
        out.push_back({"p1xp1 refined q=9", s});
    }
    for (int dd = 5; dd <= 35; dd += 5) {
        auto s = spec_of(Family::P1xP1Refined, 2, 4);
        s.r = 4, s.alpha = 5, s.b = 10, s.dd = dd;
        out.push_back({"p1xp1 refined q=16 n=50 dd=" + std::to_string(dd), s});
    }
    {
        auto s = spec_of(Family::HirzebruchCoarse, 3, 2);
        s.r = 3, s.alpha = 2, s.mh = 1, s.dd = 4;
        out.push_back({"hirzebruch coarse q=9 m=1", s});
    }
    {
        auto s = spec_of(Family::HirzebruchRefined, 3, 2);
        s.r = 3, s.alpha = 2, s.mh = 1, s.dd = 4;
        out.push_back({"hirzebruch refined q=9 m=1", s});
    }
    {
        // smallest field with two usable Legendre fibers
        auto s = spec_of(Family::EllipticLegendre, 7, 2);
        s.d = 8;
        out.push_back({"elliptic legendre q=49", s});
    }
    {
        auto s = spec_of(Family::EllipticXEqualsY2, 19, 1);
        s.d = 12;
        out.push_back({"elliptic x=y^2 q=19", s});
    }
    {
        auto s = spec_of(Family::Ulmer, 3, 2);
        s.d = 4;
        out.push_back({"ulmer p=3", s});
    }
    {
        auto s = spec_of(Family::Ulmer, 5, 2);
        s.d = 12;
        out.push_back({"ulmer p=5", s});
    }
    return out;
}

/* Subcommands ---------------------------------------------------------------- */

struct Options {
    // construct
    std::string family;
    std::uint32_t p = 0, m = 1;
    std::vector<std::uint32_t> modulus;
    std::optional<int> r, b, M, N, alpha, mh, dd, d;
    std::optional<Elem> c;
    std::string g;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::string point_source = "rational-normal";
    std::string format = "text";
    // verify / recover
    std::string in;
    bool exhaustive = false;
    std::uint64_t budget = oracles::kDefaultBudget;
    std::size_t samples = 1000;
    std::string word;
    // table
    std::string suite;
};

inline std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error(Errc::ParseError, "cannot open " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

inline int cmd_construct(const Options& o, std::ostream& out) {
    const auto fam = parse_family(o.family);
    if (!fam) throw UsageError("unknown family '" + o.family + "'");
    ConstructionSpec spec;
    spec.family = *fam;
    spec.p = o.p;
    spec.m = o.m;
    if (!o.modulus.empty()) spec.modulus = o.modulus;
    spec.r = o.r, spec.b = o.b, spec.M = o.M, spec.N = o.N;
    spec.alpha = o.alpha, spec.mh = o.mh, spec.dd = o.dd, spec.d = o.d;
    spec.c = o.c;
    if (!o.g.empty()) apply_g(spec, o.g);
    if (o.point_source == "sampled") {
        if (spec.family != Family::Baseline) throw UsageError("--point-source sampled applies to the baseline family only");
        spec.point_source = PointSource::Sampled;
        spec.seed = o.seed.value_or(default_seed());
    } else if (o.point_source != "rational-normal") {
        throw UsageError("unknown point source '" + o.point_source + "'");
    }
    require_params(spec);

    const LinearCode code = families::construct(spec);
    const std::string file = serialize(code);
    if (o.out.empty()) {
        out << file;
        return 0;
    }
    std::ofstream os(o.out, std::ios::binary);
    if (!os) throw Error(Errc::ParseError, "cannot write " + o.out);
    os << file;
    const auto rep = make_report(code);
    if (o.format == "json")
        out << report_json(code, rep).dump(2) << '\n';
    else
        out << report_text(code, rep);
    return 0;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
    const LinearCode code = deserialize(read_file(o.in));
    const std::uint64_t seed = o.seed.value_or(default_seed());
    std::vector<std::string> failures;
    std::vector<std::string> flags;

    const auto rank = code.generator.rank();
    if (rank != static_cast<std::size_t>(code.k))
        failures.push_back("rank(generator) = " + std::to_string(rank) + " != k = " + std::to_string(code.k));
    if (code.k > code.predicted.k_basis)
        failures.push_back("k = " + std::to_string(code.k) + " > basis size " + std::to_string(code.predicted.k_basis));
    const bool k_matches = (code.predicted.k && *code.predicted.k == code.k) ||
                           (code.predicted.k_alt && *code.predicted.k_alt == code.k);
    if (!k_matches) flags.push_back("measured k = " + std::to_string(code.k) + " matches no closed-form k");

    const auto rec = oracles::recovery_exhaustive(code, 100, seed);
    if (!rec.partition_ok) failures.push_back("recovery structure: " + rec.partition_issue);
    if (rec.first_failure) {
        const auto& f = *rec.first_failure;
        failures.push_back("recovery failed at coordinate " + std::to_string(f.coordinate) + " of word " +
                           std::to_string(f.word) + " (expected " + std::to_string(f.expected) + ", got " +
                           std::to_string(f.recovered) + "), " + std::to_string(rec.failure_count) + " failures");
    }

    std::optional<DistanceResult> dist;
    if (code.k > 0 && rank == static_cast<std::size_t>(code.k)) dist = measure_distance(code, o.exhaustive, o.budget, o.samples, seed);
    const auto rep = dist ? make_report(code, dist->d, dist->mode) : make_report(code);
    for (auto& v : distance_violations(rep)) failures.push_back(std::move(v));

    if (o.format == "json") {
        auto j = report_json(code, rep);
        j["recovery_checks"] = rec.checks;
        j["recovery_failures"] = rec.failure_count;
        j["failures"] = failures;
        j["flags"] = flags;
        if (dist && !dist->detail.empty()) j["distance_detail"] = dist->detail;
        j["ok"] = failures.empty();
        out << j.dump(2) << '\n';
    } else {
        out << report_text(code, rep);
        out << "recovery: " << rec.checks << " checks, " << rec.failure_count << " failures\n";
        if (dist && !dist->detail.empty()) out << dist->detail << '\n';
        for (const auto& f : flags) out << "flag: " << f << '\n';
        for (const auto& f : failures) out << "FAIL: " << f << '\n';
        out << (failures.empty() ? "verify: ok\n" : "verify: failed\n");
    }
    return failures.empty() ? 0 : 1;
}

inline int cmd_recover(const Options& o, std::ostream& out) {
    const LinearCode code = deserialize(read_file(o.in));
    const auto tokens = split(o.word, ',');
    if (tokens.size() != static_cast<std::size_t>(code.n))
        throw UsageError("--word has " + std::to_string(tokens.size()) + " entries, code length is " + std::to_string(code.n));
    std::vector<std::optional<Elem>> word;
    std::size_t erased = 0, pos = 0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i] == "?") {
            ++erased;
            pos = i;
            word.emplace_back();
            continue;
        }
        const auto v = parse_int(tokens[i], "--word");
        if (v < 0 || static_cast<std::uint64_t>(v) >= code.field->q())
            throw UsageError("--word entry " + std::to_string(i) + ": " + tokens[i] + " is not an element of " +
                             code.field->describe());
        word.emplace_back(static_cast<Elem>(v));
    }
    if (erased != 1) throw UsageError("--word must contain exactly one '?' (found " + std::to_string(erased) + ")");
    const Elem value = recover(code, word);
    if (o.format == "json") {
        nlohmann::json j{{"position", pos}, {"value", value}, {"recovery_set", code.recovery_sets[pos]},
                         {"weights", code.recovery_weights[pos]}};
        out << j.dump() << '\n';
    } else {
        out << "position " << pos << " = " << value << '\n';
        out << "recovery set";
        for (auto j : code.recovery_sets[pos]) out << ' ' << j;
        out << '\n';
    }
    return 0;
}

inline void emit(const Table& t, const std::string& format, std::ostream& out) {
    if (format == "csv")
        out << t.csv();
    else if (format == "json")
        out << t.json().dump(2) << '\n';
    else
        out << t.text();
}

inline int cmd_table(const Options& o, std::ostream& out) {
    const std::uint64_t seed = o.seed.value_or(default_seed());
    if (o.suite == "optimality-scan") {
        const auto res = oracles::optimality_scan(3, 8, 2, 16, false);
        Table t({"r", "b", "M", "N", "d", "pattern"});
        for (const auto& e : res.marked)
            t.add({std::to_string(e.r), std::to_string(e.b), std::to_string(e.M), std::to_string(e.N), std::to_string(e.d),
                   e.pattern.empty() ? "UNCLASSIFIED" : e.pattern});
        emit(t, o.format, out);
        if (o.format == "text")
            out << "scanned " << res.tuples << " tuples, " << res.marked.size() << " with meeting bounds, "
                << res.mismatches.size() << " outside the two patterns\n";
        return res.mismatches.empty() ? 0 : 1;
    }
    if (o.suite != "paper-instances") throw UsageError("unknown suite '" + o.suite + "'");

    Table t({"instance", "field", "n", "k", "k_pred", "k_alt", "r", "d_lower", "d_upper", "d_opt", "d", "verdict"});
    bool ok = true;
    for (const auto& inst : reference_instances()) {
        try {
            const auto code = families::construct(inst.spec);
            const auto dist = measure_distance(code, true, o.budget, o.samples, seed);
            const auto rep = make_report(code, dist.d, dist.mode);
            if (!distance_violations(rep).empty()) ok = false;
            t.add({inst.label, code.field->describe(), std::to_string(code.n), std::to_string(code.k), opt_str(rep.k_predicted),
                   opt_str(rep.k_alt), std::to_string(code.r), std::to_string(rep.d_lower_predicted),
                   std::to_string(rep.d_upper_predicted), std::to_string(rep.d_opt), d_measured_str(rep), rep.verdict()});
        } catch (const Error& e) {
            ok = false;
            t.add({inst.label, "-", "-", "-", "-", "-", "-", "-", "-", "-", "-", "ERROR " + std::string(to_string(e.code()))});
        }
    }
    emit(t, o.format, out);
    return ok ? 0 : 1;
}

/// Entry point shared by the executable and the tests.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Locally recoverable codes from curves and surfaces"};
    app.require_subcommand(1);
    Options o;

    auto* construct = app.add_subcommand("construct", "build a code and write its code file");
    construct->add_option("--family", o.family, "code family")->required();
    construct->add_option("--p", o.p, "field characteristic")->required();
    construct->add_option("--m", o.m, "extension degree");
    construct->add_option("--modulus", o.modulus, "modulus coefficients, lowest first")->delimiter(',');
    construct->add_option("--r", o.r, "locality");
    construct->add_option("--b", o.b, "number of fibers");
    construct->add_option("--M", o.M);
    construct->add_option("--N", o.N);
    construct->add_option("--alpha", o.alpha);
    construct->add_option("--mh", o.mh, "Hirzebruch index");
    construct->add_option("--dd", o.dd, "design distance (ruled families)");
    construct->add_option("--d", o.d, "design distance (elliptic families)");
    construct->add_option("--c", o.c, "cyclic constant");
    construct->add_option("--g", o.g, "g coefficients or curve terms i:j:c");
    construct->add_option("--out", o.out, "output path");
    construct->add_option("--seed", o.seed);
    construct->add_option("--point-source", o.point_source, "rational-normal or sampled");
    construct->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "check a code file against its predictions");
    verify->add_option("--in", o.in)->required();
    verify->add_flag("--exhaustive-distance", o.exhaustive);
    verify->add_option("--budget", o.budget, "max weight evaluations for exact distance");
    verify->add_option("--samples", o.samples);
    verify->add_option("--seed", o.seed);
    verify->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    auto* recover_cmd = app.add_subcommand("recover", "recover one erased symbol");
    recover_cmd->add_option("--in", o.in)->required();
    recover_cmd->add_option("--word", o.word, "comma separated symbols with one '?'")->required();
    recover_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    auto* table = app.add_subcommand("table", "reproduce reference instances");
    table->add_option("--suite", o.suite)->required()->check(CLI::IsMember({"paper-instances", "optimality-scan"}));
    table->add_option("--format", o.format)->check(CLI::IsMember({"text", "csv", "json"}));
    o.budget = 10'000'000;
    table->add_option("--budget", o.budget);
    table->add_option("--samples", o.samples);
    table->add_option("--seed", o.seed);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }
    if (verify->parsed() && verify->count("--budget") == 0) o.budget = oracles::kDefaultBudget;

    try {
        if (construct->parsed()) return cmd_construct(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (recover_cmd->parsed()) return cmd_recover(o, out);
        return cmd_table(o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace lrc::cli

#pragma once

// Evaluation codes with per-coordinate linear recovery.
//
// A plan lists the evaluation points fiber by fiber. Each point carries the
// values of r "slot" functions (slot 0 is the constant 1); on a fixed fiber
// every basis function t^j * slot_i restricts to a combination of the slots,
// so a lost symbol is recovered from the other r symbols of its fiber by
// inverting the r x r matrix of slot values.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lrc/construction.hpp"
#include "lrc/error.hpp"
#include "lrc/gfq.hpp"
#include "lrc/polyalg.hpp"

namespace lrc {

struct EvalPoint {
    Elem t = 0;
    std::vector<Elem> slots;
};

struct BasisFunction {
    unsigned slot = 0;
    unsigned t_degree = 0;
};

/// Monomials t^j * slot_i with 0 <= j <= caps[i]; a negative cap leaves the
/// slot out. `eps` records the per-slot degree reduction a family applied.
struct FunctionBasis {
    std::vector<std::string> slot_names;
    std::vector<int> caps;
    std::vector<int> eps;
    std::vector<BasisFunction> functions;

    static FunctionBasis from_caps(std::vector<std::string> names, std::vector<int> caps,
                                   std::vector<int> eps = {}) {
        FunctionBasis b{std::move(names), std::move(caps), std::move(eps), {}};
        for (unsigned i = 0; i < b.caps.size(); ++i)
            for (int j = 0; j <= b.caps[i]; ++j) b.functions.push_back({i, static_cast<unsigned>(j)});
        return b;
    }

    std::size_t size() const noexcept { return functions.size(); }
};

struct EvaluationPlan {
    FieldPtr field;
    unsigned r = 0;
    std::vector<std::vector<EvalPoint>> fibers;
    FunctionBasis basis;

    std::size_t n() const noexcept {
        std::size_t total = 0;
        for (const auto& f : fibers) total += f.size();
        return total;
    }

    /// Fiber-major, point-minor coordinate order.
    std::pair<std::size_t, std::size_t> locate(std::size_t coord) const {
        for (std::size_t i = 0; i < fibers.size(); ++i) {
            if (coord < fibers[i].size()) return {i, coord};
            coord -= fibers[i].size();
        }
        throw Error(Errc::PreconditionViolation, "coordinate out of range");
    }

    std::size_t fiber_offset(std::size_t fiber) const {
        std::size_t off = 0;
        for (std::size_t i = 0; i < fiber; ++i) off += fibers[i].size();
        return off;
    }

    Elem evaluate(const BasisFunction& fn, const EvalPoint& pt) const {
        return field->mul(field->pow(pt.t, fn.t_degree), pt.slots.at(fn.slot));
    }

    /// One row per basis function, one column per point.
    Matrix evaluation_matrix() const {
        Matrix ev(field, basis.size(), n());
        std::size_t col = 0;
        for (const auto& fiber : fibers)
            for (const auto& pt : fiber) {
                for (std::size_t row = 0; row < basis.size(); ++row) ev(row, col) = evaluate(basis.functions[row], pt);
                ++col;
            }
        return ev;
    }
};

struct RecoveryRule {
    std::vector<std::size_t> set;
    std::vector<Elem> weights;
};

/// Recovery set J_i = the other r coordinates of i's fiber, with weights
/// lambda such that c_i = sum_j lambda_j c_{J_i[j]}.
inline RecoveryRule compute_recovery(const EvaluationPlan& plan, std::size_t coord) {
    const auto [fi, pi] = plan.locate(coord);
    const auto& fiber = plan.fibers[fi];
    const std::size_t r = plan.r;
    if (fiber.size() != r + 1)
        throw Error(Errc::PreconditionViolation, "fiber " + std::to_string(fi) + " does not have r + 1 points");
    const std::size_t offset = plan.fiber_offset(fi);

    RecoveryRule rule;
    Matrix local(plan.field, r, r);
    std::size_t row = 0;
    for (std::size_t j = 0; j < fiber.size(); ++j) {
        if (j == pi) continue;
        rule.set.push_back(offset + j);
        for (std::size_t l = 0; l < r; ++l) local(row, l) = fiber[j].slots.at(l);
        ++row;
    }
    Matrix inverse(plan.field, 0, 0);
    try {
        inverse = local.invert();
    } catch (const Error& e) {
        if (e.code() != Errc::SingularMatrix) throw;
        throw Error(Errc::SingularLocalMatrix, "fiber " + std::to_string(fi) + " (t = " + std::to_string(fiber[pi].t) +
                                                   "), coordinate " + std::to_string(coord));
    }
    rule.weights = inverse.apply_left(std::span<const Elem>(fiber[pi].slots.data(), r));
    return rule;
}

/// Closed-form claims of a construction; `k` is absent when no closed form
/// exists, `k_alt` carries a second published formula when two disagree.
struct Predicted {
    std::optional<int> k;
    std::optional<int> k_alt;
    int k_basis = 0;
    int d_lower = 0;
    int d_upper = 0;
    std::vector<std::string> notes;

    bool operator==(const Predicted&) const = default;
};

inline int ceil_div(int a, int b) {
    // b > 0
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

inline int floor_div(int a, int b) {
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

/// n - k - ceil(k / r) + 2
inline int d_opt(int n, int k, int r) { return n - k - ceil_div(k, r) + 2; }

struct LinearCode {
    FieldPtr field;
    int n = 0;
    int k = 0;
    int r = 0;
    Matrix generator{nullptr, 0, 0};
    std::vector<std::vector<std::size_t>> recovery_sets;
    std::vector<std::vector<Elem>> recovery_weights;
    ConstructionSpec spec;
    Predicted predicted;
    /// Present for codes built in this process, absent after deserialize.
    std::shared_ptr<const EvaluationPlan> plan;

    int d_opt() const { return lrc::d_opt(n, k, r); }

    /// Message (length k) times generator.
    std::vector<Elem> encode(std::span<const Elem> message) const { return generator.apply_left(message); }

    bool operator==(const LinearCode& o) const {
        return same_field(field, o.field) && n == o.n && k == o.k && r == o.r && generator == o.generator &&
               recovery_sets == o.recovery_sets && recovery_weights == o.recovery_weights && spec == o.spec &&
               predicted == o.predicted;
    }
};

inline Elem recover_symbol(const LinearCode& code, std::span<const Elem> word, std::size_t coord) {
    const Field& f = *code.field;
    Elem acc = 0;
    const auto& set = code.recovery_sets.at(coord);
    const auto& w = code.recovery_weights.at(coord);
    for (std::size_t j = 0; j < set.size(); ++j) acc = f.add(acc, f.mul(w[j], word[set[j]]));
    return acc;
}

/// Single-erasure recovery: `word` has exactly one missing entry. Entries
/// outside the recovery set are ignored; if the known symbols are not
/// consistent with a codeword the result is meaningless.
inline Elem recover(const LinearCode& code, std::span<const std::optional<Elem>> word) {
    if (word.size() != static_cast<std::size_t>(code.n))
        throw Error(Errc::PreconditionViolation, "word length " + std::to_string(word.size()) + " != n");
    std::optional<std::size_t> erased;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i]) continue;
        if (erased) throw Error(Errc::PreconditionViolation, "more than one erased position");
        erased = i;
    }
    if (!erased) throw Error(Errc::PreconditionViolation, "no erased position");
    std::vector<Elem> filled(word.size(), 0);
    for (std::size_t i = 0; i < word.size(); ++i) filled[i] = word[i].value_or(0);
    return recover_symbol(code, filled, *erased);
}

/// Evaluates the basis at the plan points, keeps the nonzero rows of the
/// reduced row-echelon form as generator and precomputes recovery weights.
inline LinearCode build_code(const EvaluationPlan& plan, ConstructionSpec spec = {}, Predicted predicted = {}) {
    if (plan.fibers.empty()) throw Error(Errc::NoFibers, "evaluation plan has no fibers");
    if (plan.basis.size() == 0) throw Error(Errc::EmptyBasis, "function basis is empty");

    LinearCode code;
    code.field = plan.field;
    code.r = static_cast<int>(plan.r);
    code.n = static_cast<int>(plan.n());
    code.generator = plan.evaluation_matrix().row_basis();
    code.k = static_cast<int>(code.generator.rows());
    code.spec = std::move(spec);
    predicted.k_basis = static_cast<int>(plan.basis.size());
    code.predicted = std::move(predicted);

    for (std::size_t i = 0; i < plan.n(); ++i) {
        RecoveryRule rule = compute_recovery(plan, i);
        code.recovery_sets.push_back(std::move(rule.set));
        code.recovery_weights.push_back(std::move(rule.weights));
    }
    for (std::size_t row = 0; row < code.generator.rows(); ++row) {
        const auto g = code.generator.row(row);
        for (std::size_t i = 0; i < plan.n(); ++i)
            if (recover_symbol(code, g, i) != g[i])
                throw std::logic_error("basis function does not restrict to the slot span at coordinate " +
                                       std::to_string(i));
    }
    code.plan = std::make_shared<const EvaluationPlan>(plan);
    return code;
}

/// Predicted-versus-measured summary of one code.
struct ParamReport {
    enum class DistanceKind { None, Exact, SampledUpper, Witness };

    int n = 0;
    std::optional<int> k_predicted;
    std::optional<int> k_alt;
    int k_basis = 0;
    int k_measured = 0;
    int d_lower_predicted = 0;
    int d_upper_predicted = 0;
    int d_opt = 0;
    std::optional<int> d_measured;
    DistanceKind oracle_mode = DistanceKind::None;
    bool optimal = false;

    /// d_upper is only a valid claim when the measured dimension matches the
    /// dimension it was derived from.
    bool upper_bound_applies() const { return k_predicted && *k_predicted == k_measured; }

    std::string verdict() const {
        if (oracle_mode == DistanceKind::Exact) return *d_measured == d_opt ? "OPTIMAL" : "NOT-OPTIMAL";
        if (d_lower_predicted >= d_opt) return "OPTIMAL-by-bounds";
        // Sampled minima and witnesses are weights of actual codewords.
        if (d_measured && *d_measured < d_opt) return "NOT-OPTIMAL";
        return "UNKNOWN";
    }
};

inline ParamReport make_report(const LinearCode& code, std::optional<int> d_measured = std::nullopt,
                               ParamReport::DistanceKind mode = ParamReport::DistanceKind::None) {
    ParamReport rep;
    rep.n = code.n;
    rep.k_predicted = code.predicted.k;
    rep.k_alt = code.predicted.k_alt;
    rep.k_basis = code.predicted.k_basis;
    rep.k_measured = code.k;
    rep.d_lower_predicted = code.predicted.d_lower;
    rep.d_upper_predicted = code.predicted.d_upper;
    rep.d_opt = code.d_opt();
    rep.d_measured = d_measured;
    rep.oracle_mode = d_measured ? mode : ParamReport::DistanceKind::None;
    rep.optimal = rep.oracle_mode == ParamReport::DistanceKind::Exact && *d_measured == rep.d_opt;
    return rep;
}

}  // namespace lrc

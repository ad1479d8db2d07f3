#pragma once

// One constructor per code family. Each validates its spec, selects fibers,
// fixes the function basis and records the closed-form predictions next to
// the measured code.

#include <algorithm>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lrc/construction.hpp"
#include "lrc/curves.hpp"
#include "lrc/error.hpp"
#include "lrc/gfq.hpp"
#include "lrc/lrcode.hpp"
#include "lrc/polyalg.hpp"

namespace lrc::families {

/// Parameters a family cannot default.
inline std::vector<std::string_view> required_params(Family f) {
    switch (f) {
        case Family::Baseline: return {"r", "b", "M", "N"};
        case Family::TamoBarg: return {"r", "b", "N"};
        case Family::CyclicCover:
        case Family::P1xP1Coarse:
        case Family::P1xP1Refined:
        case Family::HirzebruchCoarse:
        case Family::HirzebruchRefined: return {"r", "dd"};
        case Family::EllipticLegendre:
        case Family::EllipticXEqualsY2:
        case Family::Ulmer: return {"d"};
    }
    return {};
}

namespace detail {

inline int need(const std::optional<int>& v, const char* name) {
    if (!v) throw Error(Errc::PreconditionViolation, std::string("missing parameter ") + name);
    return *v;
}

inline void require(bool ok, Errc code, const std::string& what) {
    if (!ok) throw Error(code, what);
}

inline FieldPtr field_of(ConstructionSpec& spec) {
    FieldPtr f = make_field(spec.p, spec.m, spec.modulus);
    spec.modulus = f->modulus();
    return f;
}

inline std::vector<std::string> power_names(unsigned count, const char* var = "x") {
    std::vector<std::string> names;
    for (unsigned i = 0; i < count; ++i)
        names.push_back(i == 0 ? "1" : i == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(i));
    return names;
}

inline std::vector<EvalPoint> power_points(const Field& f, const curves::Fiber& fiber, unsigned r) {
    std::vector<EvalPoint> pts;
    for (const auto& P : fiber.points) {
        EvalPoint e{fiber.t, {}};
        for (unsigned i = 0; i < r; ++i) e.slots.push_back(f.pow(P.x, i));
        pts.push_back(std::move(e));
    }
    return pts;
}

inline std::vector<curves::Fiber> take_fibers(const curves::FiberedCurveSpec& curve, const std::optional<int>& b) {
    const std::size_t want = b ? static_cast<std::size_t>(*b) : 0;
    if (b && *b < 1) throw Error(Errc::PreconditionViolation, "b >= 1 required");
    auto fibers = curves::split_fibers(curve, want);
    if (fibers.empty()) throw Error(Errc::NotEnoughFibers, "no split fibers over " + curve.field->describe());
    if (b && fibers.size() < want)
        throw Error(Errc::NotEnoughFibers, "requested b = " + std::to_string(want) + ", found " +
                                               std::to_string(fibers.size()) + " split fibers over " +
                                               curve.field->describe());
    return fibers;
}

/// N = (n - dd) / (r + 1) with the divisibility and range checks.
inline int design_degree(int n, int r, int dd, const char* name = "dd") {
    require(dd >= 1 && dd < n, Errc::PreconditionViolation,
            std::string("need 1 <= ") + name + " < n (" + name + " = " + std::to_string(dd) + ", n = " + std::to_string(n) + ")");
    require((n - dd) % (r + 1) == 0, Errc::DivisibilityViolation,
            std::to_string(r + 1) + " does not divide n - " + name + " = " + std::to_string(n - dd));
    return (n - dd) / (r + 1);
}

inline void check_given_N(const ConstructionSpec& spec, int N) {
    if (spec.N && *spec.N != N)
        throw Error(Errc::PreconditionViolation, "N = " + std::to_string(*spec.N) + " but (n - dd)/(r + 1) = " +
                                                     std::to_string(N));
}

inline LinearCode finish(const FieldPtr& f, unsigned r, std::vector<std::vector<EvalPoint>> fibers,
                         FunctionBasis basis, ConstructionSpec spec, Predicted pred) {
    EvaluationPlan plan{f, r, std::move(fibers), std::move(basis)};
    return build_code(plan, std::move(spec), std::move(pred));
}

inline curves::FiberedCurveSpec ruled_curve(const ConstructionSpec& spec, const FieldPtr& f, curves::CurveKind kind,
                                            unsigned r, unsigned alpha) {
    curves::FiberedCurveSpec curve;
    curve.kind = kind;
    curve.field = f;
    curve.r = r;
    curve.alpha = alpha;
    curve.c = spec.c ? *spec.c : 1;
    require(f->contains(curve.c), Errc::PreconditionViolation, "c is not a field element");
    curve.terms = spec.curve_terms;
    return curve;
}

/// Checks a user supplied affine equation has x-degree r + 1 and t-degree at most `t_max`.
inline void check_curve_terms(const ConstructionSpec& spec, const Field& f, unsigned r, unsigned t_max) {
    if (spec.curve_terms.empty()) return;
    unsigned xdeg = 0, tdeg = 0;
    for (const auto& t : spec.curve_terms) {
        require(f.contains(t.coeff), Errc::PreconditionViolation, "curve coefficient is not a field element");
        if (t.coeff == 0) continue;
        xdeg = std::max(xdeg, t.x_exp);
        tdeg = std::max(tdeg, t.t_exp);
    }
    require(xdeg == r + 1, Errc::PreconditionViolation, "curve must have degree r + 1 in x");
    require(tdeg <= t_max, Errc::PreconditionViolation,
            "curve has t-degree " + std::to_string(tdeg) + " > " + std::to_string(t_max));
}

/// d_upper of the refined ruled families: dd + ((a-1)(r-3) + m(r^2-1))/2 - ceil((4a - (a+1)(r+1)) / 2r).
inline int refined_upper(int r, int alpha, int m, int dd) {
    return dd + floor_div((alpha - 1) * (r - 3) + m * (r * r - 1), 2) -
           ceil_div(4 * alpha - (alpha + 1) * (r + 1), 2 * r);
}

}  // namespace detail

/* Closed-form predictions ------------------------------------------------ */

inline Predicted predict_baseline(int r, int b, int M, int N) {
    Predicted p;
    p.k = (M + 1) + (r - 1) * (N + 1);
    p.d_lower = std::min((b - M) * (r + 1), 2 * (b - N));
    p.d_upper = (r + 1) * (b - N - 1) - (M - N) - ceil_div(M - N, r) + 2;
    return p;
}

inline Predicted predict_tamo_barg(int r, int b, int N) {
    Predicted p;
    const int n = b * (r + 1);
    p.k = r * (N + 1);
    p.d_lower = p.d_upper = n - (N * (r + 1) + r - 1);
    return p;
}

inline Predicted predict_cyclic(int r, int n, int dd) {
    Predicted p;
    p.d_lower = dd;
    if (r % 2 == 1) {
        p.k = r * (n - dd) / (r + 1) + (5 - r) / 2;
        p.d_upper = r == 3 ? dd : dd + (r - 5) / 2 + 2;
    } else {
        p.d_upper = r == 2 ? dd : dd + r / 2;
        p.notes.push_back("no closed form for k with even r; k_basis is the degree-cap sum");
    }
    return p;
}

inline Predicted predict_p1xp1_coarse(int r, int alpha, int N, int dd) {
    Predicted p;
    p.k = r * (N + 1);
    p.d_lower = dd - alpha * (r - 1);
    p.d_upper = dd - r + 1;
    return p;
}

inline Predicted predict_p1xp1_refined(int r, int alpha, int N, int dd) {
    Predicted p;
    p.k = alpha == r + 1 ? r * (N + 1) - r * (r - 1) / 2 : r * (N + 1) + 2 * alpha - (alpha + 1) * (r + 1) / 2;
    p.d_lower = dd;
    p.d_upper = detail::refined_upper(r, alpha, 0, dd);
    return p;
}

inline Predicted predict_hirzebruch_coarse(int r, int alpha, int m, int N, int dd) {
    Predicted p;
    p.k = (N + 1) * r + m * r * (r - 1) / 2;
    p.d_lower = dd - (r - 1) * (alpha + m * (r + 1));
    p.d_upper = dd - (r - 1) - floor_div(m * (r * r - 1) + 1, 2);
    // The bound reads dd - (r-1) - m(r^2-1)/2; rounding the subtracted half up floors the bound.
    return p;
}

inline Predicted predict_hirzebruch_refined(int r, int alpha, int m, int N, int dd) {
    Predicted p;
    if (alpha == r + 1) {
        p.k = r * (N + 1) - r * (r - 1) / 2;
    } else {
        p.k = r * (N + 1) + 2 * alpha - (alpha + 1) * (r + 1) / 2 - m * r * (r - 1) / 2;
        if (m != 0) {
            const int cap_sum = r * (N + 1) + 2 * alpha - (alpha + 1) * (r + 1) / 2;
            p.k_alt = cap_sum;
            p.notes.push_back("closed-form k " + std::to_string(*p.k) + " differs from the degree-cap sum " +
                              std::to_string(cap_sum) + " (the m-terms of the caps cancel)");
        }
    }
    p.d_lower = dd;
    p.d_upper = detail::refined_upper(r, alpha, m, dd);
    return p;
}

inline Predicted predict_legendre(int n, int d) {
    Predicted p;
    p.k = 3 * (n - d) / 4 + 1;
    p.d_lower = p.d_upper = d;
    return p;
}

inline Predicted predict_x_eq_y2(int n, int d) {
    Predicted p;
    p.k = 5 * (n - d) / 6;
    p.d_lower = d;
    p.d_upper = d + 2;
    return p;
}

inline Predicted predict_ulmer(int p, int n, int d) {
    Predicted pr;
    const int N0 = (n - d) / (p + 1);
    pr.k = p * (n - d) / (p + 1) - (p - 1) / 2;
    int sum = 0;
    for (int i = 0; i < p; ++i) sum += (i == 0 ? N0 : i % 2 == 1 ? N0 - 1 : N0 - 2) + 1;
    pr.k_alt = sum;
    if (sum != *pr.k)
        pr.notes.push_back("closed-form k " + std::to_string(*pr.k) + " differs from the sum of (N_i + 1) = " +
                           std::to_string(sum));
    pr.d_lower = d;
    pr.d_upper = d + (p + 3) / 2;
    return pr;
}

/* Baseline ---------------------------------------------------------------- */

inline bool general_position(const FieldPtr& f, const std::vector<EvalPoint>& fiber, unsigned r) {
    for (std::size_t skip = 0; skip < fiber.size(); ++skip) {
        Matrix local(f, r, r);
        std::size_t row = 0;
        for (std::size_t j = 0; j < fiber.size(); ++j) {
            if (j == skip) continue;
            for (unsigned l = 0; l < r; ++l) local(row, l) = fiber[j].slots[l];
            ++row;
        }
        if (local.rank() < r) return false;
    }
    return true;
}

inline FunctionBasis baseline_basis(unsigned r, int M, int N) {
    std::vector<std::string> names{"1"};
    std::vector<int> caps{M};
    for (unsigned i = 1; i < r; ++i) {
        names.push_back("x_" + std::to_string(i));
        caps.push_back(N);
    }
    return FunctionBasis::from_caps(std::move(names), std::move(caps));
}

/// Baseline code on caller-chosen points: `coords[i][j]` is the point
/// (x_1, ..., x_{r-1}) of fiber i, the fiber lies over `ts[i]`.
inline LinearCode baseline_from_points(ConstructionSpec spec, const std::vector<Elem>& ts,
                                       const std::vector<std::vector<std::vector<Elem>>>& coords) {
    const FieldPtr f = detail::field_of(spec);
    const int r = detail::need(spec.r, "r");
    const int M = detail::need(spec.M, "M"), N = detail::need(spec.N, "N");
    const int b = static_cast<int>(ts.size());
    spec.b = b;
    detail::require(r >= 2, Errc::PreconditionViolation, "r >= 2 required");
    detail::require(M >= 0 && N >= 0, Errc::PreconditionViolation, "M, N >= 0 required");
    detail::require(b - M >= 1, Errc::PreconditionViolation, "b - M >= 1 violated");
    detail::require(b - N >= 1, Errc::PreconditionViolation, "b - N >= 1 violated");
    detail::require(coords.size() == ts.size(), Errc::PreconditionViolation, "one point list per fiber");

    std::vector<std::vector<EvalPoint>> fibers;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        detail::require(coords[i].size() == static_cast<std::size_t>(r + 1), Errc::PreconditionViolation,
                        "fiber " + std::to_string(i) + " needs r + 1 points");
        std::vector<EvalPoint> fiber;
        for (const auto& c : coords[i]) {
            detail::require(c.size() == static_cast<std::size_t>(r - 1), Errc::PreconditionViolation,
                            "points need r - 1 coordinates");
            EvalPoint e{ts[i], {1}};
            e.slots.insert(e.slots.end(), c.begin(), c.end());
            fiber.push_back(std::move(e));
        }
        if (!general_position(f, fiber, static_cast<unsigned>(r)))
            throw Error(Errc::GeneralPositionFailure,
                        "fiber " + std::to_string(i) + " (t = " + std::to_string(ts[i]) + ") has r points on a hyperplane");
        fibers.push_back(std::move(fiber));
    }
    auto pred = predict_baseline(r, b, M, N);
    return detail::finish(f, static_cast<unsigned>(r), std::move(fibers), baseline_basis(r, M, N), std::move(spec),
                          std::move(pred));
}

/// Fibers over t = 0, ..., b-1. Default points lie on the rational normal
/// curve x -> (x, ..., x^{r-1}) at x = 0, ..., r; the sampled source draws
/// seeded random points and rejects fibers not in general position.
inline LinearCode baseline(ConstructionSpec spec) {
    const FieldPtr f = make_field(spec.p, spec.m, spec.modulus);
    const int r = detail::need(spec.r, "r");
    const int b = detail::need(spec.b, "b");
    detail::require(r >= 2, Errc::PreconditionViolation, "r >= 2 required");
    detail::require(b >= 1, Errc::PreconditionViolation, "b >= 1 required");
    if (static_cast<std::uint64_t>(b) > f->q())
        throw Error(Errc::NotEnoughFibers, "b = " + std::to_string(b) + " exceeds q = " + std::to_string(f->q()));

    std::vector<Elem> ts;
    for (int i = 0; i < b; ++i) ts.push_back(static_cast<Elem>(i));
    std::vector<std::vector<std::vector<Elem>>> coords(b);

    if (spec.point_source == PointSource::RationalNormal) {
        detail::require(static_cast<std::uint64_t>(r) + 1 <= f->q(), Errc::PreconditionViolation,
                        "rational normal points need r + 1 <= q");
        for (int i = 0; i < b; ++i)
            for (Elem x = 0; x <= static_cast<Elem>(r); ++x) {
                std::vector<Elem> c;
                for (int e = 1; e < r; ++e) c.push_back(f->pow(x, static_cast<std::uint64_t>(e)));
                coords[i].push_back(std::move(c));
            }
    } else {
        std::mt19937_64 rng(spec.seed);
        std::uniform_int_distribution<Elem> pick(0, f->q() - 1);
        constexpr int kAttempts = 1000;
        for (int i = 0; i < b; ++i) {
            bool ok = false;
            for (int attempt = 0; attempt < kAttempts && !ok; ++attempt) {
                coords[i].assign(r + 1, std::vector<Elem>(r - 1));
                std::vector<EvalPoint> trial;
                for (auto& c : coords[i]) {
                    for (auto& v : c) v = pick(rng);
                    EvalPoint e{ts[i], {1}};
                    e.slots.insert(e.slots.end(), c.begin(), c.end());
                    trial.push_back(std::move(e));
                }
                ok = general_position(f, trial, static_cast<unsigned>(r));
            }
            if (!ok)
                throw Error(Errc::GeneralPositionFailure, "no point set in general position found for fiber " +
                                                              std::to_string(i) + " after " +
                                                              std::to_string(kAttempts) + " draws");
        }
    }
    return baseline_from_points(std::move(spec), ts, coords);
}

/* Tamo-Barg ---------------------------------------------------------------- */

inline LinearCode tamo_barg(ConstructionSpec spec) {
    const FieldPtr f = detail::field_of(spec);
    const int r = detail::need(spec.r, "r");
    const int N = detail::need(spec.N, "N");
    detail::need(spec.b, "b");
    detail::require(r >= 2, Errc::PreconditionViolation, "r >= 2 required");
    detail::require(N >= 0, Errc::PreconditionViolation, "N >= 0 required");
    if (spec.M && *spec.M != N) throw Error(Errc::PreconditionViolation, "Tamo-Barg codes need M = N");
    if (!spec.g.empty()) {
        detail::require(spec.g.size() == static_cast<std::size_t>(r + 2) && spec.g.back() != 0,
                        Errc::PreconditionViolation, "g must have degree r + 1");
        for (Elem c : spec.g)
            detail::require(f->contains(c), Errc::PreconditionViolation, "g coefficient is not a field element");
    }
    curves::FiberedCurveSpec curve;
    curve.kind = curves::CurveKind::GraphOfG;
    curve.field = f;
    curve.r = static_cast<unsigned>(r);
    curve.g = spec.g;
    const auto fibers = detail::take_fibers(curve, spec.b);

    std::vector<std::vector<EvalPoint>> pts;
    for (const auto& fb : fibers) pts.push_back(detail::power_points(*f, fb, r));
    const int b = static_cast<int>(fibers.size());
    auto pred = predict_tamo_barg(r, b, N);
    auto basis = FunctionBasis::from_caps(detail::power_names(r), std::vector<int>(r, N));
    return detail::finish(f, r, std::move(pts), std::move(basis), std::move(spec), std::move(pred));
}

/* Curves x^{r+1} = t^alpha + c ------------------------------------------- */

namespace detail {

struct RuledSetup {
    FieldPtr field;
    int r = 0;
    int alpha = 0;
    int m = 0;
    int dd = 0;
    int n = 0;
    int N = 0;
    std::vector<std::vector<EvalPoint>> points;
};

inline RuledSetup ruled_setup(ConstructionSpec& spec, curves::CurveKind kind, int alpha_default, bool allow_terms,
                              int m = 0) {
    RuledSetup s;
    s.field = field_of(spec);
    s.r = need(spec.r, "r");
    s.dd = need(spec.dd, "dd");
    s.alpha = spec.alpha.value_or(alpha_default);
    s.m = m;
    require(s.r >= 2, Errc::PreconditionViolation, "r >= 2 required");
    require(s.alpha >= 1, Errc::PreconditionViolation, "alpha >= 1 required");
    if (!allow_terms && !spec.curve_terms.empty())
        throw Error(Errc::PreconditionViolation, "this family uses its fixed curve; explicit curve terms not allowed");
    check_curve_terms(spec, *s.field, s.r, static_cast<unsigned>(s.alpha + s.m * (s.r + 1)));
    const auto curve = ruled_curve(spec, s.field, kind, s.r, s.alpha);
    const auto fibers = take_fibers(curve, spec.b);
    for (const auto& fb : fibers) s.points.push_back(power_points(*s.field, fb, s.r));
    s.n = static_cast<int>(fibers.size()) * (s.r + 1);
    s.N = design_degree(s.n, s.r, s.dd);
    check_given_N(spec, s.N);
    return s;
}

}  // namespace detail

inline LinearCode cyclic_cover(ConstructionSpec spec) {
    if (spec.alpha && *spec.alpha != 2)
        throw Error(Errc::PreconditionViolation, "the cyclic cover family is x^(r+1) = t^2 + c (alpha = 2)");
    auto s = detail::ruled_setup(spec, curves::CurveKind::CyclicCover, 2, false);
    std::vector<int> caps, eps;
    for (int j = 0; j < s.r; ++j) {
        const int e = j == 0 ? 0 : 2 * j <= s.r + 1 ? 1 : 2;
        eps.push_back(e);
        caps.push_back(s.N - e);
    }
    auto basis = FunctionBasis::from_caps(detail::power_names(s.r), caps, eps);
    auto pred = predict_cyclic(s.r, s.n, s.dd);
    return detail::finish(s.field, s.r, std::move(s.points), std::move(basis), std::move(spec), std::move(pred));
}

inline LinearCode p1xp1_coarse(ConstructionSpec spec) {
    auto s = detail::ruled_setup(spec, curves::CurveKind::P1xP1Curve, 2, true);
    auto basis = FunctionBasis::from_caps(detail::power_names(s.r), std::vector<int>(s.r, s.N));
    auto pred = predict_p1xp1_coarse(s.r, s.alpha, s.N, s.dd);
    return detail::finish(s.field, s.r, std::move(s.points), std::move(basis), std::move(spec), std::move(pred));
}

namespace detail {

inline void refined_checks(int r, int alpha, int N) {
    require((r + 1) % alpha == 0, Errc::PreconditionViolation,
            "alpha | (r + 1) violated (alpha = " + std::to_string(alpha) + ", r + 1 = " + std::to_string(r + 1) + ")");
    const int least = ceil_div(alpha * (r - 1), r + 1);
    require(N >= least, Errc::PreconditionViolation,
            "N >= ceil(alpha(r-1)/(r+1)) = " + std::to_string(least) + " violated (N = " + std::to_string(N) + ")");
}

}  // namespace detail

inline LinearCode p1xp1_refined(ConstructionSpec spec) {
    auto s = detail::ruled_setup(spec, curves::CurveKind::P1xP1Curve, 2, false);
    detail::refined_checks(s.r, s.alpha, s.N);
    std::vector<int> caps, eps;
    for (int i = 0; i < s.r; ++i) {
        eps.push_back(ceil_div(s.alpha * i, s.r + 1));
        caps.push_back(s.N - eps.back());
    }
    auto basis = FunctionBasis::from_caps(detail::power_names(s.r), caps, eps);
    auto pred = predict_p1xp1_refined(s.r, s.alpha, s.N, s.dd);
    return detail::finish(s.field, s.r, std::move(s.points), std::move(basis), std::move(spec), std::move(pred));
}

inline LinearCode hirzebruch_coarse(ConstructionSpec spec) {
    const int m = spec.mh.value_or(0);
    detail::require(m >= 0, Errc::PreconditionViolation, "m_h >= 0 required");
    auto s = detail::ruled_setup(spec, curves::CurveKind::HirzebruchCurve, 2, true, m);
    std::vector<int> caps;
    for (int i = 0; i < s.r; ++i) caps.push_back(s.N + i * m);
    auto basis = FunctionBasis::from_caps(detail::power_names(s.r), caps);
    auto pred = predict_hirzebruch_coarse(s.r, s.alpha, m, s.N, s.dd);
    return detail::finish(s.field, s.r, std::move(s.points), std::move(basis), std::move(spec), std::move(pred));
}

inline LinearCode hirzebruch_refined(ConstructionSpec spec) {
    const int m = spec.mh.value_or(0);
    detail::require(m >= 0, Errc::PreconditionViolation, "m_h >= 0 required");
    auto s = detail::ruled_setup(spec, curves::CurveKind::HirzebruchCurve, 2, false, m);
    detail::refined_checks(s.r, s.alpha, s.N);
    std::vector<int> caps, eps;
    for (int i = 0; i < s.r; ++i) {
        eps.push_back(ceil_div(i * (s.alpha + m * (s.r + 1)), s.r + 1));
        caps.push_back(s.N + i * m - eps.back());
    }
    auto basis = FunctionBasis::from_caps(detail::power_names(s.r), caps, eps);
    auto pred = predict_hirzebruch_refined(s.r, s.alpha, m, s.N, s.dd);
    return detail::finish(s.field, s.r, std::move(s.points), std::move(basis), std::move(spec), std::move(pred));
}

/* Elliptic fibrations ------------------------------------------------------ */

namespace detail {

struct EllipticSetup {
    FieldPtr field;
    unsigned r = 0;
    int n = 0;
    int d = 0;
    std::vector<curves::Fiber> fibers;
};

inline EllipticSetup elliptic_setup(ConstructionSpec& spec, curves::EllipticModel model) {
    EllipticSetup s;
    s.field = field_of(spec);
    s.d = need(spec.d, "d");
    if (spec.r || spec.dd || spec.alpha || spec.mh || spec.M || spec.N || spec.c || !spec.g.empty() ||
        !spec.curve_terms.empty())
        throw Error(Errc::PreconditionViolation, "elliptic families take only p, m, b and d");
    curves::FiberedCurveSpec curve;
    curve.kind = curves::CurveKind::EllipticMultisection;
    curve.field = s.field;
    curve.model = model;
    s.r = curves::elliptic_locality(curve);
    curve.r = s.r;
    s.fibers = take_fibers(curve, spec.b);
    s.n = static_cast<int>(s.fibers.size() * (s.r + 1));
    return s;
}

}  // namespace detail

inline LinearCode elliptic_legendre(ConstructionSpec spec) {
    auto s = detail::elliptic_setup(spec, curves::EllipticModel::Legendre);
    const int base = detail::design_degree(s.n, 3, s.d, "d");
    std::vector<std::vector<EvalPoint>> pts;
    for (const auto& fb : s.fibers) {
        std::vector<EvalPoint> fiber;
        for (const auto& P : fb.points) fiber.push_back({fb.t, {1, P.x, P.y}});
        pts.push_back(std::move(fiber));
    }
    auto basis = FunctionBasis::from_caps({"1", "x", "y"}, {base, base - 1, base - 1}, {0, 1, 1});
    auto pred = predict_legendre(s.n, s.d);
    return detail::finish(s.field, s.r, std::move(pts), std::move(basis), std::move(spec), std::move(pred));
}

inline LinearCode elliptic_x_eq_y2(ConstructionSpec spec) {
    auto s = detail::elliptic_setup(spec, curves::EllipticModel::XEqualsY2);
    const Field& f = *s.field;
    const int base = detail::design_degree(s.n, 5, s.d, "d");
    std::vector<std::vector<EvalPoint>> pts;
    for (const auto& fb : s.fibers) {
        std::vector<EvalPoint> fiber;
        for (const auto& P : fb.points)
            fiber.push_back({fb.t, {1, P.x, P.y, f.mul(P.x, P.x), f.mul(P.x, P.y)}});
        pts.push_back(std::move(fiber));
    }
    // x = y^2 on the multisection, so these are the caps of 1, y^2, y, y^4, y^3.
    auto basis = FunctionBasis::from_caps({"1", "x", "y", "x^2", "xy"},
                                          {base, base - 1, base - 1, base - 2, base - 1}, {0, 1, 1, 2, 1});
    auto pred = predict_x_eq_y2(s.n, s.d);
    return detail::finish(s.field, s.r, std::move(pts), std::move(basis), std::move(spec), std::move(pred));
}

/// Slot i of the Ulmer basis: 1, then x^{(i+1)/2} for odd i and y x^{(i-2)/2} for even i.
inline Elem ulmer_slot(const Field& f, unsigned i, Elem x, Elem y) {
    if (i == 0) return 1;
    if (i % 2 == 1) return f.pow(x, (i + 1) / 2);
    return f.mul(y, f.pow(x, (i - 2) / 2));
}

inline std::string ulmer_slot_name(unsigned i) {
    if (i == 0) return "1";
    if (i % 2 == 1) return (i + 1) / 2 == 1 ? "x" : "x^" + std::to_string((i + 1) / 2);
    const unsigned e = (i - 2) / 2;
    return e == 0 ? "y" : e == 1 ? "xy" : "x^" + std::to_string(e) + "y";
}

inline LinearCode ulmer(ConstructionSpec spec) {
    auto s = detail::elliptic_setup(spec, curves::EllipticModel::Ulmer);
    const Field& f = *s.field;
    const int p = static_cast<int>(s.r);
    detail::require(s.d % (p + 1) == 0, Errc::DivisibilityViolation,
                    "(p + 1) | d violated (d = " + std::to_string(s.d) + ", p + 1 = " + std::to_string(p + 1) + ")");
    const int N0 = detail::design_degree(s.n, p, s.d, "d");

    std::vector<std::vector<EvalPoint>> pts;
    for (const auto& fb : s.fibers) {
        std::vector<EvalPoint> fiber;
        for (const auto& P : fb.points) {
            EvalPoint e{fb.t, {}};
            for (unsigned i = 0; i < s.r; ++i) e.slots.push_back(ulmer_slot(f, i, P.x, P.y));
            fiber.push_back(std::move(e));
        }
        pts.push_back(std::move(fiber));
    }
    std::vector<std::string> names;
    std::vector<int> caps, eps;
    for (unsigned i = 0; i < s.r; ++i) {
        names.push_back(ulmer_slot_name(i));
        eps.push_back(i == 0 ? 0 : i % 2 == 1 ? 1 : 2);
        caps.push_back(N0 - eps.back());
    }
    auto basis = FunctionBasis::from_caps(std::move(names), std::move(caps), std::move(eps));
    auto pred = predict_ulmer(p, s.n, s.d);
    const int n_expected = 2 * (p + 1) * (p - 2);
    if (s.n != n_expected)
        pred.notes.push_back("n = " + std::to_string(s.n) + " differs from 2(p+1)(p-2) = " + std::to_string(n_expected));
    return detail::finish(s.field, s.r, std::move(pts), std::move(basis), std::move(spec), std::move(pred));
}

/* Dispatch ----------------------------------------------------------------- */

inline LinearCode construct(const ConstructionSpec& spec) {
    switch (spec.family) {
        case Family::Baseline: return baseline(spec);
        case Family::TamoBarg: return tamo_barg(spec);
        case Family::CyclicCover: return cyclic_cover(spec);
        case Family::P1xP1Coarse: return p1xp1_coarse(spec);
        case Family::P1xP1Refined: return p1xp1_refined(spec);
        case Family::HirzebruchCoarse: return hirzebruch_coarse(spec);
        case Family::HirzebruchRefined: return hirzebruch_refined(spec);
        case Family::EllipticLegendre: return elliptic_legendre(spec);
        case Family::EllipticXEqualsY2: return elliptic_x_eq_y2(spec);
        case Family::Ulmer: return ulmer(spec);
    }
    throw Error(Errc::PreconditionViolation, "unknown family");
}

}  // namespace lrc::families

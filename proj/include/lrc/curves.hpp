#pragma once

// Rational points on fibered curves and Weierstrass group arithmetic.
//
// A fibered curve here is a curve C in a surface fibered over the t-line; a
// fiber over t is kept only when it splits into exactly r + 1 distinct
// rational points. Projective models are evaluated on the affine patch
// y = u = 1, so every returned point is affine.

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lrc/error.hpp"
#include "lrc/gfq.hpp"
#include "lrc/polyalg.hpp"

namespace lrc::curves {

struct EllipticPoint {
    bool infinity = true;
    Elem x = 0;
    Elem y = 0;

    static EllipticPoint identity() { return {}; }
    static EllipticPoint affine(Elem x, Elem y) { return {false, x, y}; }

    bool operator==(const EllipticPoint& o) const {
        return infinity == o.infinity && (infinity || (x == o.x && y == o.y));
    }
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
struct WeierstrassCurve {
    FieldPtr field;
    Elem a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;

    Elem discriminant() const {
        const Field& f = *field;
        auto k = [&](std::int64_t v) { return f.from_int(v); };
        const Elem b2 = f.add(f.mul(a1, a1), f.mul(k(4), a2));
        const Elem b4 = f.add(f.mul(k(2), a4), f.mul(a1, a3));
        const Elem b6 = f.add(f.mul(a3, a3), f.mul(k(4), a6));
        Elem b8 = f.mul(f.mul(a1, a1), a6);
        b8 = f.add(b8, f.mul(k(4), f.mul(a2, a6)));
        b8 = f.sub(b8, f.mul(a1, f.mul(a3, a4)));
        b8 = f.add(b8, f.mul(a2, f.mul(a3, a3)));
        b8 = f.sub(b8, f.mul(a4, a4));
        Elem d = f.neg(f.mul(f.mul(b2, b2), b8));
        d = f.sub(d, f.mul(k(8), f.pow(b4, 3)));
        d = f.sub(d, f.mul(k(27), f.mul(b6, b6)));
        d = f.add(d, f.mul(k(9), f.mul(b2, f.mul(b4, b6))));
        return d;
    }

    bool is_smooth() const { return discriminant() != 0; }

    bool on_curve(const EllipticPoint& P) const {
        if (P.infinity) return true;
        const Field& f = *field;
        const Elem lhs = f.add(f.mul(P.y, P.y), f.add(f.mul(a1, f.mul(P.x, P.y)), f.mul(a3, P.y)));
        Elem rhs = f.pow(P.x, 3);
        rhs = f.add(rhs, f.mul(a2, f.mul(P.x, P.x)));
        rhs = f.add(rhs, f.mul(a4, P.x));
        rhs = f.add(rhs, a6);
        return lhs == rhs;
    }

    void require_on_curve(const EllipticPoint& P) const {
        if (!on_curve(P))
            throw Error(Errc::PointNotOnCurve, "(" + std::to_string(P.x) + ", " + std::to_string(P.y) + ")");
    }

    EllipticPoint neg(const EllipticPoint& P) const {
        require_on_curve(P);
        if (P.infinity) return P;
        const Field& f = *field;
        return EllipticPoint::affine(P.x, f.sub(f.neg(P.y), f.add(f.mul(a1, P.x), a3)));
    }

    EllipticPoint add(const EllipticPoint& P, const EllipticPoint& Q) const {
        require_on_curve(P);
        require_on_curve(Q);
        if (P.infinity) return Q;
        if (Q.infinity) return P;
        const Field& f = *field;
        Elem lambda, nu;
        if (P.x == Q.x) {
            if (f.add(f.add(P.y, Q.y), f.add(f.mul(a1, Q.x), a3)) == 0) return EllipticPoint::identity();
            const Elem denom = f.add(f.add(f.mul(f.from_int(2), P.y), f.mul(a1, P.x)), a3);
            Elem num = f.mul(f.from_int(3), f.mul(P.x, P.x));
            num = f.add(num, f.mul(f.from_int(2), f.mul(a2, P.x)));
            num = f.add(num, a4);
            num = f.sub(num, f.mul(a1, P.y));
            lambda = f.div(num, denom);
            Elem nnum = f.neg(f.pow(P.x, 3));
            nnum = f.add(nnum, f.mul(a4, P.x));
            nnum = f.add(nnum, f.mul(f.from_int(2), a6));
            nnum = f.sub(nnum, f.mul(a3, P.y));
            nu = f.div(nnum, denom);
        } else {
            const Elem dx = f.sub(Q.x, P.x);
            lambda = f.div(f.sub(Q.y, P.y), dx);
            nu = f.div(f.sub(f.mul(P.y, Q.x), f.mul(Q.y, P.x)), dx);
        }
        Elem x3 = f.add(f.mul(lambda, lambda), f.mul(a1, lambda));
        x3 = f.sub(f.sub(f.sub(x3, a2), P.x), Q.x);
        const Elem y3 = f.sub(f.sub(f.neg(f.mul(f.add(lambda, a1), x3)), nu), a3);
        return EllipticPoint::affine(x3, y3);
    }

    bool is_two_torsion(const EllipticPoint& P) const { return neg(P) == P; }

    /// Every affine rational point, by enumeration of x.
    std::vector<EllipticPoint> rational_points() const {
        std::vector<EllipticPoint> pts{EllipticPoint::identity()};
        for (Elem x = 0; x < field->q(); ++x)
            for (Elem y = 0; y < field->q(); ++y)
                if (on_curve(EllipticPoint::affine(x, y))) pts.push_back(EllipticPoint::affine(x, y));
        return pts;
    }
};

inline EllipticPoint ec_add(const WeierstrassCurve& E, const EllipticPoint& P, const EllipticPoint& Q) {
    return E.add(P, Q);
}
inline EllipticPoint ec_neg(const WeierstrassCurve& E, const EllipticPoint& P) { return E.neg(P); }
inline bool is_two_torsion(const WeierstrassCurve& E, const EllipticPoint& P) { return E.is_two_torsion(P); }

/// True iff no point of gamma is 2-torsion and the group-law sum of gamma is.
inline bool check_gamma(const WeierstrassCurve& E, std::span<const EllipticPoint> gamma) {
    EllipticPoint sum = EllipticPoint::identity();
    bool avoids_two_torsion = true;
    for (const auto& P : gamma) {
        if (E.is_two_torsion(P)) avoids_two_torsion = false;
        sum = E.add(sum, P);
    }
    return avoids_two_torsion && E.is_two_torsion(sum);
}

enum class CurveKind { GraphOfG, CyclicCover, P1xP1Curve, HirzebruchCurve, EllipticMultisection };

enum class EllipticModel {
    /// y^2 = x(x-1)(x-t) with the multisection x = u, y = u^2 + t + 1.
    Legendre,
    /// y^2 = x^3 + x - t^2 - 1 with the multisection x = y^2.
    XEqualsY2,
    /// y^2 = x(x+1)(x+t^2+1) over GF(p^2) with x = c, y = c(c+1)^((p+1)/2), c^(p+1) = t^2 + 1.
    Ulmer,
};

/// Monomial c * x^i * t^j of an affine curve equation G(x, t) = 0.
struct CurveTerm {
    unsigned x_exp = 0;
    unsigned t_exp = 0;
    Elem coeff = 0;
    bool operator==(const CurveTerm&) const = default;
};

struct FiberedCurveSpec {
    CurveKind kind = CurveKind::CyclicCover;
    FieldPtr field;
    unsigned r = 3;
    /// Degree of the cover in t for x^(r+1) = t^alpha + c.
    unsigned alpha = 2;
    Elem c = 1;
    /// g(x), lowest degree first, for GraphOfG (default x^(r+1)).
    std::vector<Elem> g;
    /// Optional explicit affine equation for the ruled kinds.
    std::vector<CurveTerm> terms;
    EllipticModel model = EllipticModel::Legendre;
};

struct FiberPoint {
    Elem x = 0;
    Elem y = 1;
    bool operator==(const FiberPoint&) const = default;
};

struct Fiber {
    Elem t = 0;
    std::vector<FiberPoint> points;
    std::optional<WeierstrassCurve> elliptic;
};

struct FiberScanStats {
    std::size_t examined = 0;
    std::size_t split = 0;
    std::size_t singular = 0;
    std::size_t excluded = 0;
    std::size_t gamma_failures = 0;
};

namespace detail {

inline Elem eval_terms(const Field& f, std::span<const CurveTerm> terms, Elem x, Elem t) {
    Elem acc = 0;
    for (const auto& term : terms)
        acc = f.add(acc, f.mul(term.coeff, f.mul(f.pow(x, term.x_exp), f.pow(t, term.t_exp))));
    return acc;
}

inline std::uint64_t ulmer_p(const Field& f) {
    if (f.m() % 2 != 0)
        throw Error(Errc::PreconditionViolation, "Ulmer surface needs a field of square order");
    std::uint64_t root = 1;
    for (std::uint32_t i = 0; i < f.m() / 2; ++i) root *= f.p();
    if (root % 2 == 0) throw Error(Errc::PreconditionViolation, "Ulmer surface needs odd p");
    return root;
}

inline WeierstrassCurve elliptic_fiber(const FiberedCurveSpec& spec, Elem t) {
    const Field& f = *spec.field;
    WeierstrassCurve E{spec.field};
    switch (spec.model) {
        case EllipticModel::Legendre:
            E.a2 = f.neg(f.add(f.one(), t));
            E.a4 = t;
            break;
        case EllipticModel::XEqualsY2:
            E.a4 = f.one();
            E.a6 = f.neg(f.add(f.mul(t, t), f.one()));
            break;
        case EllipticModel::Ulmer: {
            const Elem s = f.add(f.mul(t, t), f.one());
            E.a2 = f.add(s, f.one());
            E.a4 = s;
            break;
        }
    }
    return E;
}

inline std::vector<FiberPoint> elliptic_candidates(const FiberedCurveSpec& spec, Elem t, FiberScanStats& stats) {
    const Field& f = *spec.field;
    std::vector<FiberPoint> pts;
    switch (spec.model) {
        case EllipticModel::Legendre: {
            const Elem s = f.add(t, f.one());
            for (Elem u = 0; u < f.q(); ++u) {
                const Elem y = f.add(f.mul(u, u), s);
                const Elem rhs = f.mul(u, f.mul(f.sub(u, f.one()), f.sub(u, t)));
                if (f.mul(y, y) == rhs) pts.push_back({u, y});
            }
            break;
        }
        case EllipticModel::XEqualsY2: {
            const Elem s = f.add(f.mul(t, t), f.one());
            for (Elem y : f.nth_roots(6, s)) pts.push_back({f.mul(y, y), y});
            break;
        }
        case EllipticModel::Ulmer: {
            const std::uint64_t p = ulmer_p(f);
            const Elem s = f.add(f.mul(t, t), f.one());
            // c = 0 and c^(p+1) = 1 are excluded.
            if (s == 0 || s == 1) {
                ++stats.excluded;
                return {};
            }
            for (Elem c : f.nth_roots(p + 1, s))
                pts.push_back({c, f.mul(c, f.pow(f.add(c, f.one()), (p + 1) / 2))});
            break;
        }
    }
    return pts;
}

}  // namespace detail

/// Fiber degree r + 1 of the multisection behind an elliptic model.
inline unsigned elliptic_locality(const FiberedCurveSpec& spec) {
    switch (spec.model) {
        case EllipticModel::Legendre: return 3;
        case EllipticModel::XEqualsY2: return 5;
        case EllipticModel::Ulmer: return static_cast<unsigned>(detail::ulmer_p(*spec.field));
    }
    return 0;
}

/// Scans t in encoding order and keeps fibers that split into exactly r + 1
/// distinct rational points (for elliptic models additionally: smooth fiber
/// and the recovery-group condition of check_gamma). Stops after
/// `max_fibers` fibers when `max_fibers` > 0.
inline std::vector<Fiber> split_fibers(const FiberedCurveSpec& spec, std::size_t max_fibers,
                                       FiberScanStats* stats_out = nullptr) {
    const Field& f = *spec.field;
    FiberScanStats stats;
    std::vector<Fiber> fibers;
    const unsigned r = spec.kind == CurveKind::EllipticMultisection ? elliptic_locality(spec) : spec.r;

    for (Elem t = 0; t < f.q(); ++t) {
        if (max_fibers > 0 && fibers.size() >= max_fibers) break;
        ++stats.examined;
        Fiber fiber{t, {}, std::nullopt};
        switch (spec.kind) {
            case CurveKind::GraphOfG: {
                std::vector<Elem> g = spec.g;
                if (g.empty()) {
                    g.assign(r + 2, 0);
                    g[r + 1] = 1;
                }
                const UniPoly poly(spec.field, g);
                for (Elem x = 0; x < f.q(); ++x)
                    if (poly.eval(x) == t) fiber.points.push_back({x, 1});
                break;
            }
            case CurveKind::CyclicCover:
            case CurveKind::P1xP1Curve:
            case CurveKind::HirzebruchCurve: {
                if (!spec.terms.empty()) {
                    for (Elem x = 0; x < f.q(); ++x)
                        if (detail::eval_terms(f, spec.terms, x, t) == 0) fiber.points.push_back({x, 1});
                } else {
                    const Elem rhs = f.add(f.pow(t, spec.alpha), spec.c);
                    for (Elem x : f.nth_roots(r + 1, rhs)) fiber.points.push_back({x, 1});
                }
                break;
            }
            case CurveKind::EllipticMultisection: {
                fiber.points = detail::elliptic_candidates(spec, t, stats);
                break;
            }
        }
        if (fiber.points.size() != r + 1) continue;
        std::sort(fiber.points.begin(), fiber.points.end(),
                  [](const FiberPoint& a, const FiberPoint& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
        if (std::adjacent_find(fiber.points.begin(), fiber.points.end()) != fiber.points.end()) continue;
        ++stats.split;

        if (spec.kind == CurveKind::EllipticMultisection) {
            WeierstrassCurve E = detail::elliptic_fiber(spec, t);
            if (!E.is_smooth()) {
                ++stats.singular;
                continue;
            }
            std::vector<EllipticPoint> gamma;
            for (const auto& P : fiber.points) gamma.push_back(EllipticPoint::affine(P.x, P.y));
            if (!check_gamma(E, gamma)) {
                ++stats.gamma_failures;
                continue;
            }
            fiber.elliptic = E;
        }
        fibers.push_back(std::move(fiber));
    }
    if (stats_out) *stats_out = stats;
    return fibers;
}

}  // namespace lrc::curves

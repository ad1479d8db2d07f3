#pragma once

// Finite fields GF(p^m) for q <= 2^16.
//
// Elements are handled as their canonical encoding enc(e) = sum_j c_j p^j,
// where c_j are the coefficients of e in the polynomial basis 1, z, ..., z^{m-1}
// modulo the field's monic irreducible modulus. Multiplication goes through
// log/antilog tables, addition through a full table for q <= 256 and digit
// arithmetic otherwise.

#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lrc/error.hpp"

namespace lrc {

using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense polynomials over the prime field Z/p, lowest degree first.
using PrimePoly = std::vector<std::uint32_t>;

inline void trim(PrimePoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        const std::int64_t quot = r / new_r;
        t = t - quot * new_t;
        std::swap(t, new_t);
        r = r - quot * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

// Remainder of a modulo the nonzero polynomial b.
inline PrimePoly poly_mod(PrimePoly a, PrimePoly b, std::uint32_t p) {
    trim(a);
    trim(b);
    const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            const std::uint64_t sub = factor * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

// Trial division by every monic polynomial of degree 1..floor(m/2).
inline bool is_irreducible(const PrimePoly& f, std::uint32_t p) {
    const std::size_t m = f.size() - 1;
    for (std::size_t deg = 1; deg <= m / 2; ++deg) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < deg; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            PrimePoly g(deg + 1);
            std::uint64_t rest = idx;
            for (std::size_t i = 0; i < deg; ++i) {
                g[i] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            g[deg] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

class Field {
public:
    /// Validated construction. Throws NonPrime, DegreeMismatch or
    /// ReducibleModulus. When `modulus` is omitted the lexicographically
    /// smallest monic irreducible polynomial under coefficient order
    /// (c_0, c_1, ...) is chosen.
    static FieldPtr make(std::uint32_t p, std::uint32_t m,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt) {
        return FieldPtr(new Field(p, m, std::move(modulus)));
    }

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t m() const noexcept { return m_; }
    std::uint32_t q() const noexcept { return q_; }
    /// Full monic modulus, lowest degree first (length m + 1).
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    bool contains(Elem a) const noexcept { return a < q_; }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }

    /// Image of an integer in the prime subfield.
    Elem from_int(std::int64_t v) const noexcept {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<Elem>(r);
    }

    Elem add(Elem a, Elem b) const noexcept {
        if (!add_table_.empty()) return add_table_[a * q_ + b];
        if (p_ == 2) return a ^ b;
        if (m_ == 1) {
            const Elem s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        Elem result = 0, place = 1;
        for (std::uint32_t j = 0; j < m_; ++j) {
            result += ((a % p_ + b % p_) % p_) * place;
            a /= p_;
            b /= p_;
            place *= p_;
        }
        return result;
    }

    Elem neg(Elem a) const noexcept { return neg_table_[a]; }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    Elem inv(Elem a) const {
        if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem pow(Elem a, std::uint64_t e) const noexcept {
        if (e == 0) return 1;
        if (a == 0) return 0;
        const std::uint64_t l = (static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
        return exp_[l];
    }

    /// Generator of the multiplicative group (smallest encoding).
    Elem primitive() const noexcept { return exp_[1]; }

    std::vector<std::uint32_t> coeffs(Elem a) const {
        std::vector<std::uint32_t> c(m_);
        for (std::uint32_t j = 0; j < m_; ++j) {
            c[j] = a % p_;
            a /= p_;
        }
        return c;
    }

    Elem from_coeffs(const std::vector<std::uint32_t>& c) const {
        Elem v = 0, place = 1;
        for (std::uint32_t j = 0; j < m_ && j < c.size(); ++j) {
            v += (c[j] % p_) * place;
            place *= p_;
        }
        return v;
    }

    /// All q elements in increasing encoding order.
    std::vector<Elem> elements() const {
        std::vector<Elem> all(q_);
        std::iota(all.begin(), all.end(), Elem{0});
        return all;
    }

    /// All x with x^n = c, ordered by encoding.
    std::vector<Elem> nth_roots(std::uint64_t n, Elem c) const {
        std::vector<Elem> roots;
        for (Elem x = 0; x < q_; ++x)
            if (pow(x, n) == c) roots.push_back(x);
        return roots;
    }

    bool operator==(const Field& other) const noexcept {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

    std::string describe() const {
        std::string s = "GF(" + std::to_string(q_) + ")";
        if (m_ > 1) {
            s += " mod [";
            for (std::size_t i = 0; i < modulus_.size(); ++i)
                s += (i ? "," : "") + std::to_string(modulus_[i]);
            s += "]";
        }
        return s;
    }

private:
    Field(std::uint32_t p, std::uint32_t m, std::optional<std::vector<std::uint32_t>> modulus)
        : p_(p), m_(m) {
        if (!detail::is_prime(p)) throw Error(Errc::NonPrime, "p = " + std::to_string(p));
        if (m < 1) throw Error(Errc::DegreeMismatch, "extension degree m must be >= 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < m; ++i) {
            q *= p;
            if (q > (1u << 16))
                throw Error(Errc::PreconditionViolation, "field order exceeds 2^16");
        }
        q_ = static_cast<std::uint32_t>(q);

        if (m == 1) {
            // Any monic linear modulus is irreducible and plays no role.
            modulus_ = {0, 1};
            if (modulus && (modulus->size() != 2 || (*modulus)[1] % p != 1))
                throw Error(Errc::DegreeMismatch, "modulus for m = 1 must be monic of degree 1");
        } else if (modulus) {
            if (modulus->size() != m + 1)
                throw Error(Errc::DegreeMismatch, "modulus has " + std::to_string(modulus->size()) +
                                                      " coefficients, expected " + std::to_string(m + 1));
            modulus_ = *modulus;
            for (auto& c : modulus_) {
                if (c >= p) throw Error(Errc::DegreeMismatch, "modulus coefficient out of range");
            }
            if (modulus_.back() != 1) throw Error(Errc::DegreeMismatch, "modulus is not monic");
            if (!detail::is_irreducible(modulus_, p))
                throw Error(Errc::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
        } else {
            modulus_ = default_modulus(p, m);
        }
        build_tables();
    }

    static std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t m) {
        // c_0 is the most significant digit of the search index.
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < m; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            detail::PrimePoly f(m + 1);
            std::uint64_t rest = idx;
            for (std::uint32_t j = m; j-- > 0;) {
                f[j] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            f[m] = 1;
            if (f[0] == 0) continue;
            if (detail::is_irreducible(f, p)) return f;
        }
        throw Error(Errc::ReducibleModulus, "no irreducible polynomial found");  // unreachable
    }

    Elem slow_mul(Elem a, Elem b) const {
        detail::PrimePoly pa = coeffs(a), pb = coeffs(b);
        detail::PrimePoly prod(2 * m_, 0);
        for (std::uint32_t i = 0; i < m_; ++i)
            for (std::uint32_t j = 0; j < m_; ++j)
                prod[i + j] = static_cast<std::uint32_t>(
                    (prod[i + j] + static_cast<std::uint64_t>(pa[i]) * pb[j]) % p_);
        return from_coeffs(detail::poly_mod(prod, modulus_, p_));
    }

    void build_tables() {
        neg_table_.resize(q_);
        for (Elem a = 0; a < q_; ++a) {
            auto c = coeffs(a);
            for (auto& d : c) d = (p_ - d) % p_;
            neg_table_[a] = from_coeffs(c);
        }
        if (q_ <= 256) {
            add_table_.resize(static_cast<std::size_t>(q_) * q_);
            for (Elem a = 0; a < q_; ++a) {
                const auto ca = coeffs(a);
                for (Elem b = 0; b < q_; ++b) {
                    auto cb = coeffs(b);
                    for (std::uint32_t j = 0; j < m_; ++j) cb[j] = (cb[j] + ca[j]) % p_;
                    add_table_[a * q_ + b] = static_cast<std::uint16_t>(from_coeffs(cb));
                }
            }
        }

        exp_.assign(2 * static_cast<std::size_t>(q_), 0);
        log_.assign(q_, 0);
        if (q_ == 2) {
            exp_[0] = exp_[1] = exp_[2] = 1;
            log_[1] = 0;
            return;
        }
        for (Elem g = 2; g < q_; ++g) {
            Elem x = 1;
            std::uint32_t order = 0;
            do {
                x = slow_mul(x, g);
                ++order;
            } while (x != 1 && order < q_);
            if (order != q_ - 1) continue;
            x = 1;
            for (std::uint32_t e = 0; e < q_ - 1; ++e) {
                exp_[e] = x;
                exp_[e + q_ - 1] = x;
                log_[x] = e;
                x = slow_mul(x, g);
            }
            return;
        }
    }

    std::uint32_t p_;
    std::uint32_t m_;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<Elem> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<Elem> neg_table_;
    std::vector<std::uint16_t> add_table_;
};

inline FieldPtr make_field(std::uint32_t p, std::uint32_t m,
                           std::optional<std::vector<std::uint32_t>> modulus = std::nullopt) {
    return Field::make(p, m, std::move(modulus));
}

inline bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
    return a == b || (a && b && *a == *b);
}

/// An element bound to its field; arithmetic between different fields
/// throws FieldMismatch.
class FieldElement {
public:
    FieldElement(FieldPtr field, Elem enc) : field_(std::move(field)), enc_(enc) {
        if (!field_->contains(enc_))
            throw Error(Errc::PreconditionViolation,
                        "encoding " + std::to_string(enc_) + " >= q = " + std::to_string(field_->q()));
    }

    const FieldPtr& field() const noexcept { return field_; }
    Elem enc() const noexcept { return enc_; }
    bool is_zero() const noexcept { return enc_ == 0; }

    FieldElement operator+(const FieldElement& o) const { return {field_, check(o).add(enc_, o.enc_)}; }
    FieldElement operator-(const FieldElement& o) const { return {field_, check(o).sub(enc_, o.enc_)}; }
    FieldElement operator*(const FieldElement& o) const { return {field_, check(o).mul(enc_, o.enc_)}; }
    FieldElement operator/(const FieldElement& o) const { return {field_, check(o).div(enc_, o.enc_)}; }
    FieldElement operator-() const { return {field_, field_->neg(enc_)}; }
    FieldElement operator*(std::int64_t k) const { return {field_, field_->mul(enc_, field_->from_int(k))}; }

    FieldElement inv() const { return {field_, field_->inv(enc_)}; }
    FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(enc_, e)}; }

    bool operator==(const FieldElement& o) const { return same_field(field_, o.field_) && enc_ == o.enc_; }

    friend std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.enc_; }

private:
    const Field& check(const FieldElement& o) const {
        if (!same_field(field_, o.field_))
            throw Error(Errc::FieldMismatch, field_->describe() + " vs " + o.field_->describe());
        return *field_;
    }

    FieldPtr field_;
    Elem enc_;
};

inline std::vector<FieldElement> enumerate(const FieldPtr& field) {
    std::vector<FieldElement> out;
    out.reserve(field->q());
    for (Elem a = 0; a < field->q(); ++a) out.emplace_back(field, a);
    return out;
}

inline std::vector<FieldElement> nth_roots(const FieldPtr& field, std::uint64_t n, const FieldElement& c) {
    if (!same_field(field, c.field())) throw Error(Errc::FieldMismatch, "nth_roots");
    std::vector<FieldElement> out;
    for (Elem x : field->nth_roots(n, c.enc())) out.emplace_back(field, x);
    return out;
}

}  // namespace lrc

#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "lrc/error.hpp"
#include "lrc/gfq.hpp"

namespace lrc {

/// Univariate polynomial, lowest degree first, trailing zeros trimmed.
class UniPoly {
public:
    explicit UniPoly(FieldPtr field, std::vector<Elem> coeffs = {})
        : field_(std::move(field)), coeffs_(std::move(coeffs)) {
        trim();
    }

    static UniPoly monomial(FieldPtr field, std::size_t degree, Elem coeff = 1) {
        std::vector<Elem> c(degree + 1, 0);
        c[degree] = coeff;
        return UniPoly(std::move(field), std::move(c));
    }

    /// prod (t - root)
    static UniPoly from_roots(const FieldPtr& field, std::span<const Elem> roots) {
        UniPoly result(field, {1});
        for (Elem root : roots) result = result * UniPoly(field, {field->neg(root), 1});
        return result;
    }

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    Elem eval(Elem t) const noexcept {
        Elem acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_->add(field_->mul(acc, t), *it);
        return acc;
    }

    FieldElement eval(const FieldElement& t) const {
        if (!same_field(field_, t.field())) throw Error(Errc::FieldMismatch, "poly_eval");
        return {field_, eval(t.enc())};
    }

    UniPoly operator+(const UniPoly& o) const {
        check(o);
        std::vector<Elem> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            const Elem a = i < coeffs_.size() ? coeffs_[i] : 0;
            const Elem b = i < o.coeffs_.size() ? o.coeffs_[i] : 0;
            c[i] = field_->add(a, b);
        }
        return UniPoly(field_, std::move(c));
    }

    UniPoly operator*(const UniPoly& o) const {
        check(o);
        if (is_zero() || o.is_zero()) return UniPoly(field_);
        std::vector<Elem> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                c[i + j] = field_->add(c[i + j], field_->mul(coeffs_[i], o.coeffs_[j]));
        return UniPoly(field_, std::move(c));
    }

    UniPoly scaled(Elem s) const {
        std::vector<Elem> c(coeffs_);
        for (auto& v : c) v = field_->mul(v, s);
        return UniPoly(field_, std::move(c));
    }

    bool operator==(const UniPoly& o) const { return same_field(field_, o.field_) && coeffs_ == o.coeffs_; }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    void check(const UniPoly& o) const {
        if (!same_field(field_, o.field_)) throw Error(Errc::FieldMismatch, "polynomial arithmetic");
    }

    FieldPtr field_;
    std::vector<Elem> coeffs_;
};

/// Homogeneous form of degree d in (t, u): sum_j c_j t^j u^(d-j).
class HomogForm {
public:
    HomogForm(FieldPtr field, std::size_t degree, std::vector<Elem> coeffs)
        : field_(std::move(field)), degree_(degree), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() > degree_ + 1)
            throw Error(Errc::DegreeMismatch, "homogeneous form has more than d + 1 coefficients");
        coeffs_.resize(degree_ + 1, 0);
    }

    static HomogForm homogenize(const UniPoly& f, std::size_t degree) {
        if (f.degree() && *f.degree() > degree)
            throw Error(Errc::DegreeMismatch, "polynomial degree exceeds form degree");
        return HomogForm(f.field(), degree, f.coeffs());
    }

    std::size_t degree() const noexcept { return degree_; }
    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }

    Elem eval(Elem t, Elem u) const noexcept {
        Elem acc = 0;
        for (std::size_t j = 0; j <= degree_; ++j) {
            const Elem term = field_->mul(coeffs_[j], field_->mul(field_->pow(t, j), field_->pow(u, degree_ - j)));
            acc = field_->add(acc, term);
        }
        return acc;
    }

    UniPoly dehomogenize() const { return UniPoly(field_, coeffs_); }

private:
    FieldPtr field_;
    std::size_t degree_;
    std::vector<Elem> coeffs_;
};

/// Dense row-major matrix over a finite field.
class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    Matrix(FieldPtr field, const std::vector<std::vector<Elem>>& rows) : field_(std::move(field)) {
        rows_ = rows.size();
        cols_ = rows.empty() ? 0 : rows.front().size();
        a_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw Error(Errc::PreconditionViolation, "ragged matrix rows");
            a_.insert(a_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(FieldPtr field, std::size_t n) {
        Matrix m(std::move(field), n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Elem& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    Elem operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::span<const Elem> row(std::size_t i) const { return {a_.data() + i * cols_, cols_}; }
    std::span<Elem> row(std::size_t i) { return {a_.data() + i * cols_, cols_}; }

    std::vector<std::vector<Elem>> to_rows() const {
        std::vector<std::vector<Elem>> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out[i].assign(row(i).begin(), row(i).end());
        return out;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (!same_field(field_, o.field_)) throw Error(Errc::FieldMismatch, "matrix product");
        if (cols_ != o.rows_) throw Error(Errc::PreconditionViolation, "matrix product dimension mismatch");
        Matrix out(field_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t l = 0; l < cols_; ++l) {
                const Elem a = (*this)(i, l);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    out(i, j) = field_->add(out(i, j), field_->mul(a, o(l, j)));
            }
        return out;
    }

    /// M * v
    std::vector<Elem> apply(std::span<const Elem> v) const {
        if (v.size() != cols_) throw Error(Errc::PreconditionViolation, "vector length mismatch");
        std::vector<Elem> out(rows_, 0);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out[i] = field_->add(out[i], field_->mul((*this)(i, j), v[j]));
        return out;
    }

    /// v^T * M
    std::vector<Elem> apply_left(std::span<const Elem> v) const {
        if (v.size() != rows_) throw Error(Errc::PreconditionViolation, "vector length mismatch");
        std::vector<Elem> out(cols_, 0);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (v[i] == 0) continue;
            for (std::size_t j = 0; j < cols_; ++j) out[j] = field_->add(out[j], field_->mul(v[i], (*this)(i, j)));
        }
        return out;
    }

    struct Echelon;

    /// Reduced row-echelon form; pivots are the first nonzero entry found
    /// scanning rows in fixed order, so the result is reproducible.
    Echelon rref() const;
    std::size_t rank() const;
    /// Nonzero rows of the reduced row-echelon form.
    Matrix row_basis() const;
    Matrix invert() const;
    std::vector<Elem> solve(std::span<const Elem> b) const;

    /// Vertical concatenation.
    static Matrix stack(const Matrix& top, const Matrix& bottom) {
        if (!same_field(top.field_, bottom.field_)) throw Error(Errc::FieldMismatch, "matrix stack");
        if (top.cols_ != bottom.cols_) throw Error(Errc::PreconditionViolation, "stack column mismatch");
        Matrix out(top.field_, top.rows_ + bottom.rows_, top.cols_);
        std::copy(top.a_.begin(), top.a_.end(), out.a_.begin());
        std::copy(bottom.a_.begin(), bottom.a_.end(), out.a_.begin() + static_cast<std::ptrdiff_t>(top.a_.size()));
        return out;
    }

    bool operator==(const Matrix& o) const {
        return same_field(field_, o.field_) && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    FieldPtr field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> a_;
};

struct Matrix::Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
    std::size_t rank() const noexcept { return pivots.size(); }
};

inline Matrix::Echelon Matrix::rref() const {
    Matrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
        std::size_t sel = lead;
        while (sel < rows_ && m(sel, col) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != lead)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(sel, j), m(lead, j));
        const Elem inv = field_->inv(m(lead, col));
        for (std::size_t j = 0; j < cols_; ++j) m(lead, j) = field_->mul(m(lead, j), inv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == lead || m(i, col) == 0) continue;
            const Elem factor = field_->neg(m(i, col));
            for (std::size_t j = 0; j < cols_; ++j)
                m(i, j) = field_->add(m(i, j), field_->mul(factor, m(lead, j)));
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t Matrix::rank() const { return rref().rank(); }

inline Matrix Matrix::row_basis() const {
    Echelon e = rref();
    Matrix out(field_, e.rank(), cols_);
    for (std::size_t i = 0; i < e.rank(); ++i)
        std::copy(e.reduced.row(i).begin(), e.reduced.row(i).end(), out.row(i).begin());
    return out;
}

inline Matrix Matrix::invert() const {
    if (rows_ != cols_) throw Error(Errc::SingularMatrix, "non-square matrix");
    Matrix aug(field_, rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
        aug(i, cols_ + i) = 1;
    }
    Echelon e = aug.rref();
    if (e.rank() < rows_ || e.pivots[rows_ - 1] >= cols_)
        throw Error(Errc::SingularMatrix, "matrix of size " + std::to_string(rows_) + " is singular");
    Matrix inv(field_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = e.reduced(i, cols_ + j);
    return inv;
}

inline std::vector<Elem> Matrix::solve(std::span<const Elem> b) const {
    if (b.size() != rows_) throw Error(Errc::PreconditionViolation, "right-hand side length mismatch");
    return invert().apply(b);
}

/// Row i is (1, x_i, ..., x_i^(width-1)).
inline Matrix vandermonde(const FieldPtr& field, std::span<const Elem> nodes, std::size_t width) {
    Matrix v(field, nodes.size(), width);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        Elem power = 1;
        for (std::size_t j = 0; j < width; ++j) {
            v(i, j) = power;
            power = field->mul(power, nodes[i]);
        }
    }
    return v;
}

/// Basis of {v : A v = 0}, one vector per free column of rref(A).
inline std::vector<std::vector<Elem>> null_space(const Matrix& a) {
    const Field& f = *a.field();
    const auto e = a.rref();
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::vector<Elem>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Elem> v(a.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < e.rank(); ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Row spaces equal iff both ranks and the rank of the stacked matrix agree.
inline bool same_row_space(const Matrix& a, const Matrix& b) {
    const std::size_t ra = a.rank();
    return ra == b.rank() && Matrix::stack(a, b).rank() == ra;
}

}  // namespace lrc

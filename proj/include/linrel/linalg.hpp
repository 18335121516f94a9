#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linrel/error.hpp"
#include "linrel/scalar.hpp"

namespace linrel {

// Column vector in Q(i)^n.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t n) : v_(n) {}
    Vector(std::initializer_list<Scalar> xs) : v_(xs) {}
    explicit Vector(std::vector<Scalar> xs) : v_(std::move(xs)) {}

    static Vector zero(std::size_t n) { return Vector(n); }
    static Vector unit(std::size_t n, std::size_t k) {
        Vector e(n);
        e[k] = Scalar(1);
        return e;
    }

    [[nodiscard]] std::size_t size() const { return v_.size(); }
    Scalar& operator[](std::size_t k) { return v_[k]; }
    const Scalar& operator[](std::size_t k) const { return v_[k]; }
    [[nodiscard]] const std::vector<Scalar>& entries() const { return v_; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

    [[nodiscard]] bool is_zero() const {
        return std::all_of(v_.begin(), v_.end(), [](const Scalar& s) { return s.is_zero(); });
    }

    [[nodiscard]] Vector slice(std::size_t offset, std::size_t count) const {
        return Vector(std::vector<Scalar>(v_.begin() + offset, v_.begin() + offset + count));
    }

    [[nodiscard]] Vector conj() const {
        Vector r(size());
        for (std::size_t k = 0; k < size(); ++k) r[k] = v_[k].conj();
        return r;
    }

    friend Vector concat(const Vector& a, const Vector& b) {
        std::vector<Scalar> out(a.v_);
        out.insert(out.end(), b.v_.begin(), b.v_.end());
        return Vector(std::move(out));
    }

    friend Vector operator+(const Vector& a, const Vector& b) {
        check_same(a, b);
        Vector r(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
        return r;
    }
    friend Vector operator-(const Vector& a, const Vector& b) {
        check_same(a, b);
        Vector r(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
        return r;
    }
    friend Vector operator-(const Vector& a) {
        Vector r(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) r[k] = -a[k];
        return r;
    }
    friend Vector operator*(const Scalar& s, const Vector& a) {
        Vector r(a.size());
        if (s.is_zero()) return r;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (!a[k].is_zero()) r[k] = s * a[k];
        return r;
    }

    // this += s * other, skipping zeros.
    void axpy(const Scalar& s, const Vector& other) {
        check_same(*this, other);
        if (s.is_zero()) return;
        for (std::size_t k = 0; k < size(); ++k)
            if (!other[k].is_zero()) v_[k] += s * other[k];
    }

    friend bool operator==(const Vector& a, const Vector& b) = default;

private:
    std::vector<Scalar> v_;

    static void check_same(const Vector& a, const Vector& b) {
        if (a.size() != b.size())
            throw dimension_error("vector length mismatch: " + std::to_string(a.size()) + " vs " +
                                  std::to_string(b.size()));
    }
};

// <u, v> = sum_k u_k * conj(v_k): linear in the first slot, conjugate-linear in the second.
inline Scalar inner(const Vector& u, const Vector& v) {
    if (u.size() != v.size()) throw dimension_error("inner product of vectors with different lengths");
    Scalar acc;
    for (std::size_t k = 0; k < u.size(); ++k)
        if (!u[k].is_zero() && !v[k].is_zero()) acc += u[k] * v[k].conj();
    return acc;
}

// Dense row-major matrix over Q(i).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw dimension_error("ragged matrix literal");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t k = 0; k < n; ++k) m(k, k) = Scalar(1);
        return m;
    }
    static Matrix diagonal(std::span<const Scalar> d) {
        Matrix m(d.size(), d.size());
        for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
        return m;
    }
    static Matrix from_columns(std::span<const Vector> cols, std::size_t rows) {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw dimension_error("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    [[nodiscard]] Vector row(std::size_t i) const {
        return Vector(std::vector<Scalar>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_));
    }
    [[nodiscard]] Vector column(std::size_t j) const {
        Vector c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    [[nodiscard]] Matrix conj_transpose() const {
        Matrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j).conj();
        return m;
    }

    [[nodiscard]] bool is_hermitian() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i; j < cols_; ++j)
                if (!((*this)(i, j) == (*this)(j, i).conj())) return false;
        return true;
    }

    friend Vector operator*(const Matrix& m, const Vector& x) {
        if (x.size() != m.cols_) throw dimension_error("matrix-vector size mismatch");
        Vector y(m.rows_);
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j)
                if (!m(i, j).is_zero() && !x[j].is_zero()) y[i] += m(i, j) * x[j];
        return y;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw dimension_error("matrix product size mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend Matrix operator*(const Scalar& s, const Matrix& m) {
        Matrix r = m;
        for (auto& x : r.a_) x = s * x;
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> a_;
};

namespace detail {

// In-place reduced row echelon form of `rows` (all of length `width`).
// Zero rows are dropped; returns the pivot column of each surviving row.
inline std::vector<std::size_t> rref(std::vector<Vector>& rows, std::size_t width) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < width && r < rows.size(); ++col) {
        std::size_t sel = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i)
            if (!rows[i][col].is_zero()) {
                sel = i;
                break;
            }
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        if (!rows[r][col].is_one()) {
            Scalar inv = Scalar(1) / rows[r][col];
            rows[r] = inv * rows[r];
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col].is_zero()) continue;
            Scalar f = -rows[i][col];
            rows[i].axpy(f, rows[r]);
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

// Basis of {x : M x = 0} where M is given in reduced row echelon form.
inline std::vector<Vector> rref_nullspace(const std::vector<Vector>& rref_rows, const std::vector<std::size_t>& pivots,
                                          std::size_t width) {
    std::vector<bool> is_pivot(width, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector> out;
    for (std::size_t f = 0; f < width; ++f) {
        if (is_pivot[f]) continue;
        Vector x(width);
        x[f] = Scalar(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (!rref_rows[r][f].is_zero()) x[pivots[r]] = -rref_rows[r][f];
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace detail

/*
 * Linear subspace of Q(i)^ambient held in canonical form: the basis rows are
 * the nonzero rows of the reduced row echelon form of any spanning set. Each
 * basis vector has a leading 1 at its pivot, pivots strictly increase, and
 * every pivot coordinate is zero in all other basis vectors. Two subspaces
 * are equal as sets iff their canonical bases are identical.
 */
class Subspace {
public:
    Subspace() = default;

    static Subspace span(std::span<const Vector> vectors, std::size_t ambient) {
        std::vector<Vector> rows;
        rows.reserve(vectors.size());
        for (const auto& v : vectors) {
            if (v.size() != ambient)
                throw dimension_error("spanning vector of length " + std::to_string(v.size()) +
                                      " in ambient dimension " + std::to_string(ambient));
            if (!v.is_zero()) rows.push_back(v);
        }
        return from_rows(std::move(rows), ambient);
    }
    static Subspace span(std::initializer_list<Vector> vectors, std::size_t ambient) {
        return span(std::span<const Vector>(vectors.begin(), vectors.size()), ambient);
    }

    static Subspace zero(std::size_t ambient) {
        Subspace s;
        s.ambient_ = ambient;
        return s;
    }
    static Subspace full(std::size_t ambient) {
        Subspace s;
        s.ambient_ = ambient;
        for (std::size_t k = 0; k < ambient; ++k) {
            s.basis_.push_back(Vector::unit(ambient, k));
            s.pivots_.push_back(k);
        }
        return s;
    }

    [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
    [[nodiscard]] std::size_t dim() const { return basis_.size(); }
    [[nodiscard]] bool is_zero() const { return basis_.empty(); }
    [[nodiscard]] bool is_full() const { return basis_.size() == ambient_; }
    [[nodiscard]] const std::vector<Vector>& basis() const { return basis_; }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }

    // Coordinates of v in the canonical basis; empty when v is not in the subspace.
    [[nodiscard]] std::optional<std::vector<Scalar>> coordinates(const Vector& v) const {
        check_ambient(v.size());
        std::vector<Scalar> c(dim());
        Vector rest = v;
        for (std::size_t j = 0; j < dim(); ++j) {
            c[j] = v[pivots_[j]];
            rest.axpy(-c[j], basis_[j]);
        }
        if (!rest.is_zero()) return std::nullopt;
        return c;
    }

    [[nodiscard]] bool contains(const Vector& v) const { return coordinates(v).has_value(); }
    [[nodiscard]] bool contains(const Subspace& other) const {
        check_ambient(other.ambient_);
        if (other.dim() > dim()) return false;
        return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vector& v) { return contains(v); });
    }

    [[nodiscard]] Vector combine(std::span<const Scalar> coords) const {
        if (coords.size() != dim()) throw dimension_error("coordinate count does not match subspace dimension");
        Vector v(ambient_);
        for (std::size_t j = 0; j < dim(); ++j) v.axpy(coords[j], basis_[j]);
        return v;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

    void check_ambient(std::size_t n) const {
        if (n != ambient_)
            throw dimension_error("ambient dimension mismatch: " + std::to_string(n) + " vs " +
                                  std::to_string(ambient_));
    }

private:
    std::size_t ambient_ = 0;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;

    static Subspace from_rows(std::vector<Vector> rows, std::size_t ambient) {
        Subspace s;
        s.ambient_ = ambient;
        s.pivots_ = detail::rref(rows, ambient);
        s.basis_ = std::move(rows);
        return s;
    }
};

inline Subspace canonicalize(std::span<const Vector> vectors, std::size_t ambient) {
    return Subspace::span(vectors, ambient);
}

inline Subspace sum_subspaces(const Subspace& u, const Subspace& v) {
    u.check_ambient(v.ambient_dim());
    if (u.is_zero()) return v;
    if (v.is_zero()) return u;
    std::vector<Vector> all = u.basis();
    all.insert(all.end(), v.basis().begin(), v.basis().end());
    return Subspace::span(all, u.ambient_dim());
}

// Zassenhaus: reduce the rows [u | u] and [v | 0]; rows whose left half
// vanishes carry a basis of U ∩ V in their right half.
inline Subspace intersect(const Subspace& u, const Subspace& v) {
    u.check_ambient(v.ambient_dim());
    const std::size_t n = u.ambient_dim();
    if (u.is_zero() || v.is_zero()) return Subspace::zero(n);
    if (u.is_full()) return v;
    if (v.is_full()) return u;
    std::vector<Vector> rows;
    rows.reserve(u.dim() + v.dim());
    for (const auto& b : u.basis()) rows.push_back(concat(b, b));
    for (const auto& b : v.basis()) rows.push_back(concat(b, Vector::zero(n)));
    auto pivots = detail::rref(rows, 2 * n);
    std::vector<Vector> out;
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (pivots[r] >= n) out.push_back(rows[r].slice(n, n));
    return Subspace::span(out, n);
}

// Basis of {x : M x = 0} for M given by its rows.
inline Subspace nullspace(std::vector<Vector> rows, std::size_t width) {
    for (const auto& r : rows)
        if (r.size() != width) throw dimension_error("nullspace: row length mismatch");
    auto pivots = detail::rref(rows, width);
    return Subspace::span(detail::rref_nullspace(rows, pivots, width), width);
}

// U^⊥ with respect to the standard inner product.
inline Subspace orth_complement(const Subspace& u) {
    std::vector<Vector> rows;
    rows.reserve(u.dim());
    for (const auto& b : u.basis()) rows.push_back(b.conj());
    return nullspace(std::move(rows), u.ambient_dim());
}

// W with V ⊕ W = U and W ⊥ V. Requires V ⊆ U.
inline Subspace orth_complement_within(const Subspace& u, const Subspace& v) {
    if (!u.contains(v)) throw precondition_error("orth_complement_within: V is not contained in U");
    return intersect(u, orth_complement(v));
}

/*
 * Exact check that a square matrix is Hermitian positive-definite: Hermitian
 * symmetry, then Gaussian elimination without pivoting, which succeeds with
 * strictly positive real pivots iff every leading principal minor is positive.
 */
inline bool is_hermitian_positive_definite(const Matrix& g) {
    if (!g.is_hermitian()) return false;
    const std::size_t m = g.rows();
    std::vector<Vector> a;
    for (std::size_t i = 0; i < m; ++i) a.push_back(g.row(i));
    for (std::size_t k = 0; k < m; ++k) {
        const Scalar& p = a[k][k];
        if (!p.is_real() || p.re().sign() <= 0) return false;
        for (std::size_t i = k + 1; i < m; ++i) {
            if (a[i][k].is_zero()) continue;
            Scalar f = -(a[i][k] / p);
            a[i].axpy(f, a[k]);
        }
    }
    return true;
}

/*
 * Complement of V inside U orthogonal for the form whose Gram matrix on U's
 * canonical basis is G (G(j,k) = form(u_j, u_k), linear in the first slot).
 * Requires V ⊆ U and G Hermitian positive-definite.
 */
inline Subspace gram_orth_complement_within(const Subspace& u, const Subspace& v, const Matrix& g) {
    if (!u.contains(v)) throw precondition_error("gram_orth_complement_within: V is not contained in U");
    if (g.rows() != u.dim() || g.cols() != u.dim()) throw dimension_error("Gram matrix size does not match dim U");
    if (!is_hermitian_positive_definite(g))
        throw precondition_error("gram_orth_complement_within: form is not Hermitian positive-definite");
    const std::size_t m = u.dim();
    // For v = sum a_j u_j and w = sum b_k u_k: form(v, w) = sum_k (sum_j a_j G(j,k)) conj(b_k).
    // Vanishing of conj(form(v, w)) is linear in b with coefficients conj(r_k).
    std::vector<Vector> rows;
    for (const auto& vb : v.basis()) {
        auto a = *u.coordinates(vb);
        Vector r(m);
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t j = 0; j < m; ++j)
                if (!a[j].is_zero()) r[k] += a[j] * g(j, k);
        rows.push_back(r.conj());
    }
    Subspace coeffs = nullspace(std::move(rows), m);
    std::vector<Vector> out;
    for (const auto& b : coeffs.basis()) out.push_back(u.combine(b.entries()));
    return Subspace::span(out, u.ambient_dim());
}

// dim(U / V). Requires V ⊆ U; never intersects silently.
inline std::size_t quotient_dim(const Subspace& u, const Subspace& v) {
    if (!u.contains(v)) throw precondition_error("quotient_dim: V is not contained in U");
    return u.dim() - v.dim();
}

struct Solution {
    std::optional<Vector> particular;
    Subspace nullspace;
};

// General solution of sum_j x_j * columns[j] = b.
inline Solution solve(std::span<const Vector> columns, const Vector& b) {
    const std::size_t m = b.size();
    const std::size_t k = columns.size();
    std::vector<Vector> rows(m, Vector(k + 1));
    for (std::size_t j = 0; j < k; ++j) {
        if (columns[j].size() != m) throw dimension_error("solve: column length mismatch");
        for (std::size_t i = 0; i < m; ++i) rows[i][j] = columns[j][i];
    }
    for (std::size_t i = 0; i < m; ++i) rows[i][k] = b[i];
    auto pivots = detail::rref(rows, k + 1);

    Solution sol;
    std::vector<std::size_t> coeff_pivots;
    bool consistent = true;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == k)
            consistent = false;
        else
            coeff_pivots.push_back(pivots[r]);
    }
    std::vector<Vector> coeff_rows;
    for (std::size_t r = 0; r < coeff_pivots.size(); ++r) coeff_rows.push_back(rows[r].slice(0, k));
    sol.nullspace = Subspace::span(detail::rref_nullspace(coeff_rows, coeff_pivots, k), k);
    if (consistent) {
        Vector x(k);
        for (std::size_t r = 0; r < coeff_pivots.size(); ++r) x[coeff_pivots[r]] = rows[r][k];
        sol.particular = std::move(x);
    }
    return sol;
}

// Orthogonal projection of y onto W (standard inner product).
inline Vector orthogonal_projection(const Subspace& w, const Vector& y) {
    w.check_ambient(y.size());
    const std::size_t m = w.dim();
    if (m == 0) return Vector::zero(y.size());
    // Unknown c with sum_k c_k <w_k, w_j> = <y, w_j> for every j.
    std::vector<Vector> cols(m, Vector(m));
    Vector rhs(m);
    for (std::size_t j = 0; j < m; ++j) {
        rhs[j] = inner(y, w.basis()[j]);
        for (std::size_t k = 0; k < m; ++k) cols[k][j] = inner(w.basis()[k], w.basis()[j]);
    }
    auto sol = solve(cols, rhs);
    if (!sol.particular || !sol.nullspace.is_zero()) throw internal_error("singular Gram matrix of a basis");
    return w.combine(sol.particular->entries());
}

inline std::size_t rank(const Matrix& m) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return detail::rref(rows, m.cols()).size();
}

inline bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

}  // namespace linrel

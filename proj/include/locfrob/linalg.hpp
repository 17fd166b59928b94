#pragma once

/**
 * Exact dense linear algebra over Field scalars.
 *
 * Eigen supplies storage and expression arithmetic; the elimination
 * routines below are hand-rolled because exact fields pivot on "first
 * nonzero", not on magnitude. Everything is a free function template on
 * the scalar so the kernel stays usable with any exact field-like type.
 *
 * Subspaces of k^n are represented by matrices whose rows form a basis.
 * The canonical form of a subspace is the reduced row echelon form of any
 * row basis with zero rows dropped; two subspaces are equal iff their
 * canonical forms are equal entrywise.
 */

#include "locfrob/field.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace locfrob {

using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using RowVec = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;
using Index = Eigen::Index;

template <class S> using MatT = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S> using VecT = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S> struct Echelon {
    MatT<S> mat;
    std::vector<Index> pivots;
    Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Reduced row echelon form by Gauss-Jordan with first-nonzero pivoting.
template <class S> Echelon<S> rref(MatT<S> a)
{
    Echelon<S> e;
    Index r = 0;
    for (Index c = 0; c < a.cols() && r < a.rows(); ++c) {
        Index pr = -1;
        for (Index i = r; i < a.rows(); ++i) {
            if (a(i, c) != S(0)) {
                pr = i;
                break;
            }
        }
        if (pr < 0)
            continue;
        if (pr != r)
            a.row(pr).swap(a.row(r));
        S inv = S(1) / a(r, c);
        a.row(r) *= inv;
        for (Index i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == S(0))
                continue;
            S f = a(i, c);
            a.row(i) -= f * a.row(r);
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.mat = std::move(a);
    return e;
}

template <class S> Index rankOf(const MatT<S>& a) { return rref<S>(a).rank(); }

/// Canonical row basis of the row space (RREF, zero rows dropped).
template <class S> MatT<S> rowBasis(const MatT<S>& rows)
{
    Echelon<S> e = rref<S>(rows);
    return e.mat.topRows(e.rank());
}

/// Rows spanning the right null space {x : a x = 0}, canonical form.
template <class S> MatT<S> kernel(const MatT<S>& a)
{
    Echelon<S> e = rref<S>(a);
    const Index n = a.cols();
    std::vector<bool> isPivot(static_cast<size_t>(n), false);
    for (Index p : e.pivots)
        isPivot[static_cast<size_t>(p)] = true;
    MatT<S> k(n - e.rank(), n);
    k.setZero();
    Index row = 0;
    for (Index f = 0; f < n; ++f) {
        if (isPivot[static_cast<size_t>(f)])
            continue;
        k(row, f) = S(1);
        for (Index j = 0; j < e.rank(); ++j)
            k(row, e.pivots[static_cast<size_t>(j)]) = -e.mat(j, f);
        ++row;
    }
    return rowBasis<S>(k);
}

/// Canonical row basis of the column space of a.
template <class S> MatT<S> image(const MatT<S>& a)
{
    MatT<S> t = a.transpose();
    return rowBasis<S>(t);
}

/// One solution of a x = b, if any.
template <class S> std::optional<VecT<S>> solve(const MatT<S>& a, const VecT<S>& b)
{
    if (a.rows() != b.rows())
        throw DimensionMismatch("solve: shape mismatch");
    MatT<S> aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = b;
    Echelon<S> e = rref<S>(aug);
    if (!e.pivots.empty() && e.pivots.back() == a.cols())
        return std::nullopt;
    VecT<S> x(a.cols());
    x.setZero();
    for (Index j = 0; j < e.rank(); ++j)
        x(e.pivots[static_cast<size_t>(j)]) = e.mat(j, a.cols());
    return x;
}

template <class S> std::optional<MatT<S>> invert(const MatT<S>& a)
{
    if (a.rows() != a.cols())
        throw DimensionMismatch("invert: matrix not square");
    const Index n = a.rows();
    MatT<S> aug(n, 2 * n);
    aug.leftCols(n) = a;
    aug.rightCols(n) = MatT<S>::Identity(n, n);
    Echelon<S> e = rref<S>(aug);
    if (e.rank() < n || e.pivots.back() >= n)
        return std::nullopt;
    return MatT<S>(e.mat.rightCols(n));
}

template <class S> MatT<S> vstack(const MatT<S>& a, const MatT<S>& b)
{
    if (a.rows() == 0)
        return b;
    if (b.rows() == 0)
        return a;
    if (a.cols() != b.cols())
        throw DimensionMismatch("vstack: column counts differ");
    MatT<S> m(a.rows() + b.rows(), a.cols());
    m.topRows(a.rows()) = a;
    m.bottomRows(b.rows()) = b;
    return m;
}

/// Is v in the row space of rows?
template <class S> bool member(const MatT<S>& rows, const VecT<S>& v)
{
    if (rows.rows() == 0) {
        for (Index i = 0; i < v.size(); ++i)
            if (v(i) != S(0))
                return false;
        return true;
    }
    MatT<S> ext = vstack<S>(rows, MatT<S>(v.transpose()));
    return rankOf<S>(rows) == rankOf<S>(ext);
}

template <class S> MatT<S> sumSpace(const MatT<S>& u, const MatT<S>& v)
{
    return rowBasis<S>(vstack<S>(u, v));
}

/// Intersection of two row spaces, Zassenhaus block elimination.
template <class S> MatT<S> intersectSpace(const MatT<S>& u, const MatT<S>& v)
{
    if (u.cols() != v.cols())
        throw DimensionMismatch("intersectSpace: ambient dimensions differ");
    const Index n = u.cols();
    MatT<S> block(u.rows() + v.rows(), 2 * n);
    block.setZero();
    block.topLeftCorner(u.rows(), n) = u;
    block.block(0, n, u.rows(), n) = u;
    block.block(u.rows(), 0, v.rows(), n) = v;
    Echelon<S> e = rref<S>(block);
    std::vector<Index> meetRows;
    for (Index i = 0; i < e.rank(); ++i)
        if (e.pivots[static_cast<size_t>(i)] >= n)
            meetRows.push_back(i);
    MatT<S> meet(static_cast<Index>(meetRows.size()), n);
    for (size_t i = 0; i < meetRows.size(); ++i)
        meet.row(static_cast<Index>(i)) = e.mat.block(meetRows[i], n, 1, n);
    return rowBasis<S>(meet);
}

/// Kronecker product; index (i, k) of the factors maps to i * rowsB + k.
template <class S> MatT<S> kron(const MatT<S>& a, const MatT<S>& b)
{
    MatT<S> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            for (Index k = 0; k < b.rows(); ++k)
                for (Index l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

/**
 * Characteristic polynomial det(t I - A) by the Samuelson-Berkowitz
 * scheme (division free, exact over any commutative ring). Returns
 * coefficients c[0..n] with c[0] = 1, so chi(t) = sum c[k] t^(n-k).
 *
 * Per leading principal block of size r the Toeplitz column is
 *   t0 = 1, t1 = -A(r-1,r-1), t_{j+2} = -(row_r . M^j . col_r)
 * and the coefficient vector is the Toeplitz product with the previous one.
 */
template <class S> std::vector<S> charPoly(const MatT<S>& a)
{
    if (a.rows() != a.cols())
        throw DimensionMismatch("charPoly: matrix not square");
    const Index n = a.rows();
    std::vector<S> c{S(1)};
    for (Index r = 1; r <= n; ++r) {
        std::vector<S> t(static_cast<size_t>(r) + 1, S(0));
        t[0] = S(1);
        t[1] = -a(r - 1, r - 1);
        if (r >= 2) {
            VecT<S> w = a.block(0, r - 1, r - 1, 1);
            MatT<S> row = a.block(r - 1, 0, 1, r - 1);
            MatT<S> m = a.topLeftCorner(r - 1, r - 1);
            for (Index j = 0; j + 2 <= r; ++j) {
                S s(0);
                for (Index i = 0; i < r - 1; ++i)
                    s += row(0, i) * w(i);
                t[static_cast<size_t>(j) + 2] = -s;
                if (j + 3 <= r)
                    w = m * w;
            }
        }
        std::vector<S> nc(static_cast<size_t>(r) + 1, S(0));
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t d = 0; i + d <= static_cast<size_t>(r); ++d)
                nc[i + d] += t[d] * c[i];
        c = std::move(nc);
    }
    return c;
}

/**
 * Characteristic polynomial over a field, same coefficient convention as
 * charPoly but cubic instead of quartic: similarity-reduce to Hessenberg
 * form with exact division, then expand the leading principal minors of
 * det(t I - H) by their last column.
 */
template <class S> std::vector<S> charPolyHessenberg(MatT<S> h)
{
    if (h.rows() != h.cols())
        throw DimensionMismatch("charPolyHessenberg: matrix not square");
    const Index n = h.rows();
    for (Index j = 0; j + 2 < n; ++j) {
        Index pivot = -1;
        for (Index i = j + 1; i < n; ++i)
            if (h(i, j) != S(0)) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != j + 1) {
            h.row(pivot).swap(h.row(j + 1));
            h.col(pivot).swap(h.col(j + 1));
        }
        for (Index i = j + 2; i < n; ++i) {
            if (h(i, j) == S(0))
                continue;
            S f = h(i, j) / h(j + 1, j);
            h.row(i) -= f * h.row(j + 1);
            h.col(j + 1) += f * h.col(i);
        }
    }
    // p_r(t) = (t - H(r-1,r-1)) p_{r-1}(t)
    //          - sum_k H(r-1-k, r-1) (prod of k subdiagonals) p_{r-1-k}(t)
    std::vector<std::vector<S>> p;
    p.push_back({S(1)});
    for (Index r = 1; r <= n; ++r) {
        std::vector<S> cur(static_cast<size_t>(r) + 1, S(0));
        const std::vector<S>& prev = p.back();
        for (size_t i = 0; i < prev.size(); ++i) {
            cur[i] += prev[i];
            cur[i + 1] -= h(r - 1, r - 1) * prev[i];
        }
        S sub(1);
        for (Index k = 1; k < r; ++k) {
            sub *= h(r - k, r - k - 1);
            if (sub == S(0))
                break;
            S coeff = h(r - 1 - k, r - 1) * sub;
            const std::vector<S>& low = p[static_cast<size_t>(r - 1 - k)];
            for (size_t i = 0; i < low.size(); ++i)
                cur[i + static_cast<size_t>(k) + 1] -= coeff * low[i];
        }
        p.push_back(std::move(cur));
    }
    return p.back();
}

template <class S> S traceProduct(const MatT<S>& a, const MatT<S>& b)
{
    if (a.cols() != b.rows() || a.rows() != b.cols())
        throw DimensionMismatch("traceProduct: shape mismatch");
    S s(0);
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            s += a(i, j) * b(j, i);
    return s;
}

template <class S> bool matEq(const MatT<S>& a, const MatT<S>& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j))
                return false;
    return true;
}

template <class S> bool isZeroMat(const MatT<S>& a)
{
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != S(0))
                return false;
    return true;
}

inline Vec unitVec(Index n, Index i)
{
    Vec v(n);
    v.setZero();
    v(i) = Scalar(1);
    return v;
}

/// Flatten a matrix row-major into a vector; inverse of unflatten below.
inline Vec flatten(const Mat& m)
{
    Vec v(m.rows() * m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            v(i * m.cols() + j) = m(i, j);
    return v;
}

inline Mat unflatten(const Vec& v, Index rows, Index cols)
{
    if (v.size() != rows * cols)
        throw DimensionMismatch("unflatten: size mismatch");
    Mat m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
            m(i, j) = v(i * cols + j);
    return m;
}

/// Normalizes every entry into the given field (integer literals embed,
/// anything from a different prime field throws).
void imprint(const Field& f, Mat& m);
void imprint(const Field& f, Vec& v);
void imprint(const Field& f, RowVec& v);

} // namespace locfrob

#pragma once

#include "bredon/integer.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace bredon {

/// a * b, skipping zero entries. Integer matrices here are mostly sparse, and
/// the blocked dense product copies every multiprecision entry.
template <typename DA, typename DB>
MatrixX<typename DA::Scalar> product(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
    using Scalar = typename DA::Scalar;
    const MatrixX<Scalar> x = a;
    const MatrixX<Scalar> y = b;
    MatrixX<Scalar> c = MatrixX<Scalar>::Zero(x.rows(), y.cols());
    const Scalar zero(0);
    for (Index j = 0; j < y.cols(); ++j)
        for (Index k = 0; k < y.rows(); ++k) {
            const Scalar& ykj = y(k, j);
            if (ykj == zero) continue;
            for (Index i = 0; i < x.rows(); ++i)
                if (x(i, k) != zero) c(i, j) += x(i, k) * ykj;
        }
    return c;
}

/// Result of a Smith normal form computation: U * A * V == D.
///
/// D is diagonal with d_0 | d_1 | ... | d_{rank-1}, all positive, followed by
/// zeros. U and V are unimodular; their inverses are tracked alongside when
/// requested, which is what the subquotient code needs.
template <typename Scalar>
struct SmithForm {
    MatrixX<Scalar> D;
    MatrixX<Scalar> U, Uinv;
    MatrixX<Scalar> V, Vinv;
    Index rank = 0;

    [[nodiscard]] std::vector<Scalar> diagonal() const {
        std::vector<Scalar> d;
        for (Index i = 0; i < rank; ++i) d.push_back(D(i, i));
        return d;
    }
};

namespace detail {

template <typename Scalar>
struct SmithWork {
    MatrixX<Scalar>& A;
    MatrixX<Scalar>* U;
    MatrixX<Scalar>* Uinv;
    MatrixX<Scalar>* V;
    MatrixX<Scalar>* Vinv;

    // row_i += c * row_j
    void add_row(Index i, Index j, const Scalar& c) {
        A.row(i) += c * A.row(j);
        if (U) U->row(i) += c * U->row(j);
        if (Uinv) Uinv->col(j) -= c * Uinv->col(i);
    }
    void swap_rows(Index i, Index j) {
        if (i == j) return;
        A.row(i).swap(A.row(j));
        if (U) U->row(i).swap(U->row(j));
        if (Uinv) Uinv->col(i).swap(Uinv->col(j));
    }
    void negate_row(Index i) {
        A.row(i) = -A.row(i);
        if (U) U->row(i) = -U->row(i);
        if (Uinv) Uinv->col(i) = -Uinv->col(i);
    }
    // col_j += c * col_i
    void add_col(Index j, Index i, const Scalar& c) {
        A.col(j) += c * A.col(i);
        if (V) V->col(j) += c * V->col(i);
        if (Vinv) Vinv->row(i) -= c * Vinv->row(j);
    }
    void swap_cols(Index i, Index j) {
        if (i == j) return;
        A.col(i).swap(A.col(j));
        if (V) V->col(i).swap(V->col(j));
        if (Vinv) Vinv->row(i).swap(Vinv->row(j));
    }
};

}  // namespace detail

/// Smith normal form with smallest-absolute-value pivoting.
template <typename Scalar>
SmithForm<Scalar> smith_normal_form(const MatrixX<Scalar>& A, bool track = true) {
    SmithForm<Scalar> out;
    const Index m = A.rows(), n = A.cols();
    out.D = A;
    if (track) {
        out.U = MatrixX<Scalar>::Identity(m, m);
        out.Uinv = MatrixX<Scalar>::Identity(m, m);
        out.V = MatrixX<Scalar>::Identity(n, n);
        out.Vinv = MatrixX<Scalar>::Identity(n, n);
    }
    detail::SmithWork<Scalar> w{out.D, track ? &out.U : nullptr, track ? &out.Uinv : nullptr,
                                track ? &out.V : nullptr, track ? &out.Vinv : nullptr};
    MatrixX<Scalar>& D = out.D;
    const Scalar zero(0);

    Index t = 0;
    for (; t < std::min(m, n); ++t) {
        // smallest nonzero entry of the trailing block
        Index pi = -1, pj = -1;
        Scalar best;
        for (Index j = t; j < n; ++j)
            for (Index i = t; i < m; ++i)
                if (D(i, j) != zero) {
                    Scalar a = abs_of(D(i, j));
                    if (pi < 0 || a < best) {
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
        if (pi < 0) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        for (;;) {
            bool dirty = false;
            for (Index i = t + 1; i < m; ++i) {
                if (D(i, t) == zero) continue;
                const Scalar q = D(i, t) / D(t, t);
                if (q != zero) w.add_row(i, t, -q);
                if (D(i, t) != zero) dirty = true;
            }
            for (Index j = t + 1; j < n; ++j) {
                if (D(t, j) == zero) continue;
                const Scalar q = D(t, j) / D(t, t);
                if (q != zero) w.add_col(j, t, -q);
                if (D(t, j) != zero) dirty = true;
            }
            if (dirty) {
                // move the smallest remainder in row/column t into the pivot
                Index bi = t, bj = t;
                Scalar b = abs_of(D(t, t));
                for (Index i = t + 1; i < m; ++i)
                    if (D(i, t) != zero && abs_of(D(i, t)) < b) {
                        b = abs_of(D(i, t));
                        bi = i;
                        bj = t;
                    }
                for (Index j = t + 1; j < n; ++j)
                    if (D(t, j) != zero && abs_of(D(t, j)) < b) {
                        b = abs_of(D(t, j));
                        bi = t;
                        bj = j;
                    }
                w.swap_rows(t, bi);
                w.swap_cols(t, bj);
                continue;
            }
            // divisibility of the trailing block
            Index bad = -1;
            for (Index i = t + 1; i < m && bad < 0; ++i)
                for (Index j = t + 1; j < n; ++j)
                    if (D(i, j) % D(t, t) != zero) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            w.add_row(t, bad, Scalar(1));
        }
        if (D(t, t) < zero) w.negate_row(t);
    }
    out.rank = t;
    return out;
}

/// Column-style Hermite normal form of the lattice spanned by the columns of A.
///
/// `basis` has full column rank and is in column echelon form: column j has its
/// first nonzero entry, positive, in row pivots[j], pivots strictly increase, and
/// every entry left of a pivot lies in [0, pivot). This form is unique for the
/// lattice. `transform` (if requested) is unimodular with A * transform ==
/// [basis | 0].
template <typename Scalar>
struct HermiteForm {
    MatrixX<Scalar> basis;
    std::vector<Index> pivots;
    MatrixX<Scalar> transform;
};

template <typename Scalar>
HermiteForm<Scalar> column_hermite(const MatrixX<Scalar>& A, bool track = false) {
    const Index m = A.rows(), n = A.cols();
    MatrixX<Scalar> W = A;
    MatrixX<Scalar> T;
    if (track) T = MatrixX<Scalar>::Identity(n, n);
    detail::SmithWork<Scalar> w{W, nullptr, nullptr, track ? &T : nullptr, nullptr};
    const Scalar zero(0);

    HermiteForm<Scalar> out;
    Index r = 0;
    for (Index i = 0; i < m && r < n; ++i) {
        for (;;) {
            Index best = -1;
            for (Index j = r; j < n; ++j)
                if (W(i, j) != zero && (best < 0 || abs_of(W(i, j)) < abs_of(W(i, best)))) best = j;
            if (best < 0) break;
            w.swap_cols(r, best);
            bool done = true;
            for (Index j = r + 1; j < n; ++j) {
                if (W(i, j) == zero) continue;
                const Scalar q = W(i, j) / W(i, r);
                w.add_col(j, r, -q);
                if (W(i, j) != zero) done = false;
            }
            if (done) break;
        }
        if (r >= n || W(i, r) == zero) continue;
        if (W(i, r) < zero) {
            W.col(r) = -W.col(r);
            if (track) T.col(r) = -T.col(r);
        }
        for (Index k = 0; k < r; ++k) {
            const Scalar q = floor_div(W(i, k), W(i, r));
            if (q != zero) w.add_col(k, r, -q);
        }
        out.pivots.push_back(i);
        ++r;
    }
    out.basis = W.leftCols(r);
    if (track) out.transform = std::move(T);
    return out;
}

/// Basis (columns) of the integer kernel {x : A x = 0}, in Hermite form.
template <typename Scalar>
MatrixX<Scalar> integer_kernel(const MatrixX<Scalar>& A) {
    const auto h = column_hermite(A, true);
    const Index r = static_cast<Index>(h.pivots.size());
    MatrixX<Scalar> k = h.transform.rightCols(A.cols() - r);
    return column_hermite(k).basis;
}

/// Solves basis * c == v for an integer vector c, where basis is a column
/// Hermite basis with the given pivots. Returns nothing if v is not in the span.
template <typename Scalar>
std::optional<VectorX<Scalar>> hermite_coordinates(const MatrixX<Scalar>& basis,
                                                   const std::vector<Index>& pivots,
                                                   const VectorX<Scalar>& v) {
    const Index r = basis.cols();
    VectorX<Scalar> c(r);
    VectorX<Scalar> rest = v;
    for (Index j = 0; j < r; ++j) {
        const Scalar& p = basis(pivots[j], j);
        if (rest(pivots[j]) % p != Scalar(0)) return std::nullopt;
        c(j) = rest(pivots[j]) / p;
        if (c(j) != Scalar(0)) rest -= c(j) * basis.col(j);
    }
    for (Index i = 0; i < rest.size(); ++i)
        if (rest(i) != Scalar(0)) return std::nullopt;
    return c;
}

}  // namespace bredon

#pragma once

#include <utility>
#include <vector>

#include "umlat/rational_function.hpp"

namespace umlat {

// Dense matrix over F_p(t), row-major. Everything here is exact.
struct RatMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<RationalFunction> a;

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {
        if (r <= 0 || c <= 0) throw ValidationError("matrix dimensions must be positive");
    }

    RationalFunction& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const RationalFunction& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    bool operator==(const RatMatrix& o) const = default;
};

namespace matrix {

inline RatMatrix identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = ratfun::one();
    return m;
}

inline RatMatrix concat_cols(const RatMatrix& A, const RatMatrix& B) {
    if (A.rows != B.rows) throw ValidationError("concat_cols: row mismatch");
    RatMatrix m(A.rows, A.cols + B.cols);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) m.at(i, j) = A.at(i, j);
        for (int j = 0; j < B.cols; ++j) m.at(i, A.cols + j) = B.at(i, j);
    }
    return m;
}

inline RatMatrix transpose(const PrimeField&, const RatMatrix& A) {
    RatMatrix m(A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) m.at(j, i) = A.at(i, j);
    return m;
}

inline RatMatrix mul(const PrimeField& F, const RatMatrix& A, const RatMatrix& B) {
    if (A.cols != B.rows) throw ValidationError("matrix product shape mismatch");
    RatMatrix m(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            if (A.at(i, k).is_zero()) continue;
            for (int j = 0; j < B.cols; ++j) {
                if (B.at(k, j).is_zero()) continue;
                m.at(i, j) = ratfun::add(F, m.at(i, j), ratfun::mul(F, A.at(i, k), B.at(k, j)));
            }
        }
    return m;
}

inline RatMatrix scale(const PrimeField& F, const RatMatrix& A, const RationalFunction& c) {
    RatMatrix m = A;
    for (auto& e : m.a) e = ratfun::mul(F, e, c);
    return m;
}

inline RationalFunction det(const PrimeField& F, RatMatrix M) {
    if (M.rows != M.cols) throw ValidationError("determinant of non-square matrix");
    int n = M.rows;
    RationalFunction d = ratfun::one();
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (!M.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) return ratfun::zero();
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(M.at(piv, j), M.at(c, j));
            d = ratfun::neg(F, d);
        }
        d = ratfun::mul(F, d, M.at(c, c));
        RationalFunction pinv = ratfun::inv(F, M.at(c, c));
        for (int i = c + 1; i < n; ++i) {
            if (M.at(i, c).is_zero()) continue;
            RationalFunction f = ratfun::mul(F, M.at(i, c), pinv);
            for (int j = c; j < n; ++j)
                M.at(i, j) = ratfun::sub(F, M.at(i, j), ratfun::mul(F, f, M.at(c, j)));
        }
    }
    return d;
}

// Solves M X = B for square nonsingular M; B may have several columns.
inline RatMatrix solve(const PrimeField& F, RatMatrix M, RatMatrix B) {
    if (M.rows != M.cols) throw ValidationError("solve needs a square matrix");
    if (M.rows != B.rows) throw ValidationError("solve: rhs row mismatch");
    int n = M.rows;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (!M.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) throw ArithmeticError("singular matrix");
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(M.at(piv, j), M.at(c, j));
            for (int j = 0; j < B.cols; ++j) std::swap(B.at(piv, j), B.at(c, j));
        }
        RationalFunction pinv = ratfun::inv(F, M.at(c, c));
        for (int j = 0; j < n; ++j) M.at(c, j) = ratfun::mul(F, M.at(c, j), pinv);
        for (int j = 0; j < B.cols; ++j) B.at(c, j) = ratfun::mul(F, B.at(c, j), pinv);
        for (int i = 0; i < n; ++i) {
            if (i == c || M.at(i, c).is_zero()) continue;
            RationalFunction f = M.at(i, c);
            for (int j = 0; j < n; ++j)
                M.at(i, j) = ratfun::sub(F, M.at(i, j), ratfun::mul(F, f, M.at(c, j)));
            for (int j = 0; j < B.cols; ++j)
                B.at(i, j) = ratfun::sub(F, B.at(i, j), ratfun::mul(F, f, B.at(c, j)));
        }
    }
    return B;
}

inline std::vector<RationalFunction> solve_vec(const PrimeField& F, const RatMatrix& M,
                                               const std::vector<RationalFunction>& b) {
    RatMatrix B(M.rows, 1);
    for (int i = 0; i < M.rows; ++i) B.at(i, 0) = b[static_cast<std::size_t>(i)];
    RatMatrix X = solve(F, M, B);
    std::vector<RationalFunction> x(static_cast<std::size_t>(M.rows));
    for (int i = 0; i < M.rows; ++i) x[static_cast<std::size_t>(i)] = X.at(i, 0);
    return x;
}

inline RatMatrix inverse(const PrimeField& F, const RatMatrix& M) {
    return solve(F, M, identity(M.rows));
}

// True iff x lies in the R-span of H's columns (all solve coordinates in R).
inline bool in_column_span(const PrimeField& F, const RatMatrix& H,
                           const std::vector<RationalFunction>& x) {
    auto y = solve_vec(F, H, x);
    for (const auto& c : y)
        if (!c.is_zero() && ratfun::val(c) < 0) return false;
    return true;
}

// Canonical generator matrix of the R-module spanned by M's columns, where
// R = { f : val(f) >= 0 } is the valuation ring of F_p(t) at t = 0.
//
// Column echelon over R. Pivot selection: globally minimal valuation over
// entries in still-unused rows, ties broken by least row index. The pivot of
// step k is normalized to exactly t^{a_k}; remaining columns are zeroed in
// that row, and earlier pivot columns are reduced there so their entry has
// Laurent support strictly below a_k. The output depends only on the module:
// two generator matrices span the same module iff their forms are identical.
inline RatMatrix dvr_hermite(const PrimeField& F, const RatMatrix& M) {
    int n = M.rows;
    if (M.cols < n) throw ValidationError("dvr_hermite needs at least n columns");
    using Col = std::vector<RationalFunction>;
    std::vector<Col> remaining;
    for (int j = 0; j < M.cols; ++j) {
        Col c(static_cast<std::size_t>(n));
        bool nonzero = false;
        for (int i = 0; i < n; ++i) {
            c[static_cast<std::size_t>(i)] = M.at(i, j);
            nonzero |= !c[static_cast<std::size_t>(i)].is_zero();
        }
        if (nonzero) remaining.push_back(std::move(c));
    }
    std::vector<bool> row_used(static_cast<std::size_t>(n), false);
    std::vector<std::pair<int, Col>> pivots;

    for (int step = 0; step < n; ++step) {
        int best_v = kValInfinity;
        for (const Col& c : remaining)
            for (int i = 0; i < n; ++i) {
                if (row_used[static_cast<std::size_t>(i)]) continue;
                int v = ratfun::val(c[static_cast<std::size_t>(i)]);
                if (v < best_v) best_v = v;
            }
        if (best_v == kValInfinity) throw ValidationError("dvr_hermite: rank-deficient input");
        int prow = -1;
        for (int i = 0; i < n && prow < 0; ++i) {
            if (row_used[static_cast<std::size_t>(i)]) continue;
            for (const Col& c : remaining)
                if (ratfun::val(c[static_cast<std::size_t>(i)]) == best_v) {
                    prow = i;
                    break;
                }
        }
        std::size_t pcol_idx = 0;
        while (ratfun::val(remaining[pcol_idx][static_cast<std::size_t>(prow)]) != best_v) ++pcol_idx;
        Col pivot = std::move(remaining[pcol_idx]);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pcol_idx));

        // unit-normalize: pivot entry becomes exactly t^{a}
        RationalFunction unit = ratfun::div(F, ratfun::t_power(best_v), pivot[static_cast<std::size_t>(prow)]);
        for (auto& e : pivot) e = ratfun::mul(F, e, unit);

        RationalFunction tpow = ratfun::t_power(best_v);
        for (Col& c : remaining) {
            const RationalFunction& e = c[static_cast<std::size_t>(prow)];
            if (e.is_zero()) continue;
            RationalFunction f = ratfun::div(F, e, tpow);  // val >= 0 by pivot minimality
            for (int i = 0; i < n; ++i)
                c[static_cast<std::size_t>(i)] = ratfun::sub(
                    F, c[static_cast<std::size_t>(i)],
                    ratfun::mul(F, f, pivot[static_cast<std::size_t>(i)]));
        }
        for (auto& [r, pc] : pivots) {
            const RationalFunction& e = pc[static_cast<std::size_t>(prow)];
            if (e.is_zero()) continue;
            RationalFunction rem = ratfun::series_prefix(F, e, best_v);
            RationalFunction q = ratfun::div(F, ratfun::sub(F, e, rem), tpow);
            for (int i = 0; i < n; ++i)
                pc[static_cast<std::size_t>(i)] = ratfun::sub(
                    F, pc[static_cast<std::size_t>(i)],
                    ratfun::mul(F, q, pivot[static_cast<std::size_t>(i)]));
        }
        pivots.emplace_back(prow, std::move(pivot));
        row_used[static_cast<std::size_t>(prow)] = true;
    }
    for (const Col& c : remaining)
        for (const auto& e : c)
            if (!e.is_zero()) throw ValidationError("dvr_hermite: more than n independent columns");

    RatMatrix H(n, n);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) H.at(i, k) = pivots[static_cast<std::size_t>(k)].second[static_cast<std::size_t>(i)];
    return H;
}

}  // namespace matrix
}  // namespace umlat

#pragma once

// Exact dense linear algebra over a field scalar (Rational in practice).
// Everything here is Gaussian elimination without pivoting heuristics: the
// scalar is exact, so the first nonzero pivot is as good as any.

#include <optional>
#include <utility>
#include <vector>

#include "ftflag/types.hpp"

namespace ftflag::linalg {

/// Reduced row echelon form in place. Returns the pivot column of each pivot row.
template <class Scalar>
std::vector<Eigen::Index> rref(mat_type<Scalar>& a) {
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
        Eigen::Index p = row;
        while (p < a.rows() && a(p, col) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != row) a.row(p).swap(a.row(row));
        const Scalar inv = Scalar(1) / a(row, col);
        for (Eigen::Index c = col; c < a.cols(); ++c) a(row, c) *= inv;
        for (Eigen::Index r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == 0) continue;
            const Scalar f = a(r, col);
            for (Eigen::Index c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class Scalar>
Eigen::Index rank(mat_type<Scalar> a) {
    return static_cast<Eigen::Index>(rref(a).size());
}

/// Basis of the right kernel {v : a v = 0}, one vector per column.
template <class Scalar>
mat_type<Scalar> nullspace(mat_type<Scalar> a) {
    const auto pivots = rref(a);
    std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
    for (auto c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<Eigen::Index> free_cols;
    for (Eigen::Index c = 0; c < a.cols(); ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);

    mat_type<Scalar> basis(a.cols(), static_cast<Eigen::Index>(free_cols.size()));
    basis.setZero();
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const auto f = free_cols[k];
        const auto col = static_cast<Eigen::Index>(k);
        basis(f, col) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            basis(pivots[r], col) = -a(static_cast<Eigen::Index>(r), f);
    }
    return basis;
}

template <class Scalar>
Scalar determinant(mat_type<Scalar> a) {
    const Eigen::Index n = a.rows();
    Scalar det = 1;
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index p = col;
        while (p < n && a(p, col) == 0) ++p;
        if (p == n) return Scalar(0);
        if (p != col) {
            a.row(p).swap(a.row(col));
            det = -det;
        }
        det *= a(col, col);
        for (Eigen::Index r = col + 1; r < n; ++r) {
            if (a(r, col) == 0) continue;
            const Scalar f = a(r, col) / a(col, col);
            for (Eigen::Index c = col; c < n; ++c) a(r, c) -= f * a(col, c);
        }
    }
    return det;
}

/// det of the top-left k×k blocks, k = 1..n.
template <class Scalar>
std::vector<Scalar> leading_principal_minors(const mat_type<Scalar>& a) {
    std::vector<Scalar> minors;
    for (Eigen::Index k = 1; k <= a.rows(); ++k)
        minors.push_back(determinant<Scalar>(a.topLeftCorner(k, k)));
    return minors;
}

/// Sylvester's criterion; `a` must be symmetric.
template <class Scalar>
bool is_positive_definite(const mat_type<Scalar>& a) {
    for (const auto& m : leading_principal_minors(a))
        if (!(m > 0)) return false;
    return true;
}

/// Unique solution of a x = b for square nonsingular a; nullopt when singular.
template <class Scalar>
std::optional<vec_type<Scalar>> solve(const mat_type<Scalar>& a, const vec_type<Scalar>& b) {
    const Eigen::Index n = a.rows();
    mat_type<Scalar> aug(n, n + 1);
    aug.leftCols(n) = a;
    aug.col(n) = b;
    const auto pivots = rref(aug);
    if (static_cast<Eigen::Index>(pivots.size()) != n || pivots.back() != n - 1)
        return std::nullopt;
    return vec_type<Scalar>(aug.col(n));
}

/// Scale a rational vector to the primitive integer vector on the same ray.
inline IntVector primitive_integer_vector(const RatVector& v) {
    BigInt lcm_den = 1;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        mpq_class q = v(i);
        q.canonicalize();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
    }
    std::vector<BigInt> scaled;
    BigInt g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        mpq_class q = v(i) * lcm_den;
        q.canonicalize();
        scaled.push_back(q.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.back().get_mpz_t());
    }
    IntVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        BigInt e = g == 0 ? BigInt(0) : BigInt(scaled[static_cast<std::size_t>(i)] / g);
        out(i) = e.get_si();
    }
    return out;
}

} // namespace ftflag::linalg

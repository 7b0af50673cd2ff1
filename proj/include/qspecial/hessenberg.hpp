#pragma once

/**
 * @file hessenberg.hpp
 * @brief Exact determinant oracles over BigRat.
 *
 * det_cofactor and det_bareiss are deliberately independent of the
 * coefficient-recurrence machinery elsewhere in the library, so that
 * determinant-vs-recurrence comparisons actually cross-validate two
 * different computations.
 */

#include <span>
#include <stdexcept>
#include <vector>

#include <qspecial/bigint.hpp>
#include <qspecial/bigrat.hpp>

namespace qspecial {

class SquareMatrix {
public:
    explicit SquareMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n, BigRat(0)) {
        if (n < 0) throw std::domain_error("SquareMatrix: negative dimension");
    }

    int size() const { return n_; }
    BigRat& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
    const BigRat& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

private:
    int n_;
    std::vector<BigRat> e_;
};

namespace detail {

inline BigRat det_cofactor_rec(const SquareMatrix& m, std::vector<int>& cols, int row) {
    const int n = m.size();
    if (row == n) return 1;
    BigRat acc = 0;
    int sign = 1;
    for (size_t ci = 0; ci < cols.size(); ++ci) {
        int col = cols[ci];
        if (!m.at(row, col).is_zero()) {
            cols.erase(cols.begin() + ci);
            acc += BigRat(sign) * m.at(row, col) * det_cofactor_rec(m, cols, row + 1);
            cols.insert(cols.begin() + ci, col);
        }
        sign = -sign;
    }
    return acc;
}

}  // namespace detail

/// Laplace expansion along the first row; factorial cost, so n <= 8.
inline BigRat det_cofactor(const SquareMatrix& m) {
    if (m.size() > 8) throw std::length_error("det_cofactor: n > 8, use det_bareiss");
    if (m.size() == 0) return 1;
    std::vector<int> cols(m.size());
    for (int j = 0; j < m.size(); ++j) cols[j] = j;
    return detail::det_cofactor_rec(m, cols, 0);
}

/// Fraction-free Gaussian elimination with row-swap sign tracking.
///
/// Rows are first scaled by the LCM of their denominators so the
/// elimination runs on integers (Bareiss keeps intermediates integral,
/// which controls coefficient blow-up); the scale is divided back out
/// exactly at the end.
inline BigRat det_bareiss(const SquareMatrix& m) {
    const int n = m.size();
    if (n == 0) return 1;

    std::vector<BigInt> a(static_cast<size_t>(n) * n);
    BigInt scale = 1;
    for (int i = 0; i < n; ++i) {
        BigInt l = 1;
        for (int j = 0; j < n; ++j) l = lcm(l, m.at(i, j).denominator());
        for (int j = 0; j < n; ++j) {
            const BigRat v = m.at(i, j) * BigRat(l);
            a[static_cast<size_t>(i) * n + j] = v.numerator();  // v is integral here
        }
        scale *= l;
    }

    auto at = [&](int i, int j) -> BigInt& { return a[static_cast<size_t>(i) * n + j]; };
    int sign = 1;
    BigInt prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (at(k, k).is_zero()) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (!at(i, k).is_zero()) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;  // singular
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                at(i, j) = divexact(at(i, j) * at(k, k) - at(i, k) * at(k, j), prev);
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    BigInt det = at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return BigRat(det, scale);
}

/// Determinant of the n x n Toeplitz-Hessenberg matrix with subdiagonal
/// bands a_1..a_n down the first column and a superdiagonal of ones.
inline SquareMatrix toeplitz_hessenberg(std::span<const BigRat> a, int n) {
    if (static_cast<int>(a.size()) < n)
        throw std::length_error("toeplitz_hessenberg: need a_1..a_n");
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) m.at(i, j) = a[i - j];
        if (i + 1 < n) m.at(i, i + 1) = 1;
    }
    return m;
}

/// First-row-expansion recurrence d_n = sum_{k=1..n} (-1)^{k-1} a_k d_{n-k};
/// O(n^2) scalar ops, equal to det_bareiss of the assembled matrix.
inline BigRat det_toeplitz_hessenberg(std::span<const BigRat> a, int n) {
    if (static_cast<int>(a.size()) < n)
        throw std::length_error("det_toeplitz_hessenberg: need a_1..a_n");
    std::vector<BigRat> d(n + 1);
    d[0] = 1;
    for (int m = 1; m <= n; ++m) {
        BigRat acc = 0;
        int sign = 1;
        for (int k = 1; k <= m; ++k) {
            acc += BigRat(sign) * a[k - 1] * d[m - k];
            sign = -sign;
        }
        d[m] = acc;
    }
    return d[n];
}

}  // namespace qspecial

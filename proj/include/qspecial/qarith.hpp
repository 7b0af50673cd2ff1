#pragma once

/**
 * @file qarith.hpp
 * @brief q-integers, q-factorials, q-binomials, harmonic and hyperharmonic
 *        numbers, multinomial coefficients.
 *
 * q-integers use the sum form [n]_q = 1 + q + ... + q^{n-1}, so q = 1 is a
 * regular point and every classical limit is an exact evaluation.
 */

#include <span>
#include <stdexcept>
#include <vector>

#include <qspecial/bigrat.hpp>

namespace qspecial {

/// The deformation parameter is an exact rational, not a symbolic variable;
/// q = 1 is a regular point of every formula below.
using QParam = BigRat;

/// [n]_q = 1 + q + ... + q^{n-1}; equals (1-q^n)/(1-q) for q != 1 and n at q = 1.
inline BigRat q_integer(int n, const BigRat& q) {
    if (n < 0) throw std::domain_error("q_integer: n must be >= 0");
    BigRat acc = 0;
    for (int k = n - 1; k >= 0; --k) acc = acc * q + BigRat(1);  // Horner
    return acc;
}

/// [n]_q! = [n]_q [n-1]_q ... [1]_q, with [0]_q! = 1.
inline BigRat q_factorial(int n, const BigRat& q) {
    if (n < 0) throw std::domain_error("q_factorial: n must be >= 0");
    BigRat acc = 1;
    for (int k = 2; k <= n; ++k) acc *= q_integer(k, q);
    return acc;
}

/// Gauss q-binomial [n]_q! / ([k]_q! [n-k]_q!).
inline BigRat q_binomial(int n, int k, const BigRat& q) {
    if (k < 0 || k > n) throw std::domain_error("q_binomial: need 0 <= k <= n");
    return q_factorial(n, q) / (q_factorial(k, q) * q_factorial(n - k, q));
}

/// H_n = 1 + 1/2 + ... + 1/n, H_0 = 0.
inline BigRat harmonic(int n) {
    if (n < 0) throw std::domain_error("harmonic: n must be >= 0");
    BigRat acc = 0;
    for (int k = 1; k <= n; ++k) acc += BigRat(1, k);
    return acc;
}

namespace detail {

// Memoized hyperharmonic triangle. Row r holds H_1^{(r)}..H_n^{(r)};
// per-thread so callers never need external locking.
inline const BigRat& hyperharmonic_memo(int n, int r) {
    thread_local std::vector<std::vector<BigRat>> rows;
    if (static_cast<int>(rows.size()) <= r) rows.resize(r + 1);
    for (int i = 0; i <= r; ++i) {
        auto& row = rows[i];
        while (static_cast<int>(row.size()) < n) {
            int k = static_cast<int>(row.size()) + 1;
            if (i == 0) {
                row.push_back(BigRat(1, k));
            } else {
                BigRat prev = (k == 1) ? BigRat(0) : row[k - 2];
                row.push_back(prev + rows[i - 1][k - 1]);
            }
        }
    }
    return rows[r][n - 1];
}

}  // namespace detail

/// H_n^{(r)}: r-fold iterated partial sums of 1/n (H_n^{(0)} = 1/n).
inline BigRat hyperharmonic(int n, int r) {
    if (n < 1) throw std::domain_error("hyperharmonic: n must be >= 1");
    if (r < 0) throw std::domain_error("hyperharmonic: r must be >= 0");
    return detail::hyperharmonic_memo(n, r);
}

/// Closed form binom(n+r-1, r-1) (H_{n+r-1} - H_{r-1}); requires r >= 1.
inline BigRat hyperharmonic_closed(int n, int r) {
    if (n < 1) throw std::domain_error("hyperharmonic_closed: n must be >= 1");
    if (r < 1) throw std::domain_error("hyperharmonic_closed: r must be >= 1 (use hyperharmonic)");
    BigRat binom(BigInt::binomial(n + r - 1, r - 1));
    return binom * (harmonic(n + r - 1) - harmonic(r - 1));
}

/// (sum t_i)! / prod t_i!.
inline BigInt multinomial(std::span<const int> t) {
    long total = 0;
    for (int v : t) {
        if (v < 0) throw std::domain_error("multinomial: entries must be >= 0");
        total += v;
    }
    BigInt r = BigInt::factorial(total);
    for (int v : t) r = divexact(r, BigInt::factorial(v));
    return r;
}

}  // namespace qspecial

#pragma once

/**
 * @file framework.hpp
 * @brief The unified correspondence: a reciprocal coefficient family with a
 *        truncation window, five forward routes to f_n, two inverse routes
 *        back to the coefficients, and continued-fraction convergents.
 *
 * All routes are exact and must agree bit-for-bit; they are implemented
 * independently on purpose (the determinant route delegates to the
 * hessenberg oracles rather than the first-row-expansion recurrence, which
 * would be algebraically identical to the inversion route).
 */

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include <qspecial/bigrat.hpp>
#include <qspecial/hessenberg.hpp>
#include <qspecial/poly.hpp>
#include <qspecial/qarith.hpp>
#include <qspecial/series.hpp>

namespace qspecial {

/// Index window [lo, hi] of live coefficients; hi = nullopt means unbounded.
/// The infinite framework is window(1, unbounded).
class CoefficientWindow {
public:
    CoefficientWindow(int lo, std::optional<int> hi) : lo_(lo), hi_(hi) {
        if (lo < 1) throw std::domain_error("CoefficientWindow: r must be >= 1");
        if (hi && *hi < lo) throw std::domain_error("CoefficientWindow: need r <= R");
    }
    static CoefficientWindow unbounded(int lo = 1) { return {lo, std::nullopt}; }
    static CoefficientWindow finite(int lo, int hi) { return {lo, hi}; }

    int lo() const { return lo_; }
    const std::optional<int>& hi() const { return hi_; }
    bool is_finite() const { return hi_.has_value(); }
    bool contains(int j) const { return j >= lo_ && (!hi_ || j <= *hi_); }
    /// Largest live index not exceeding n.
    int clamp_hi(int n) const { return hi_ ? std::min(*hi_, n) : n; }

private:
    int lo_;
    std::optional<int> hi_;
};

/// Coefficient sequence a_j with a_0 = 1, masked to a window; grade s means
/// the underlying series variable is y = x^s (everything here is computed in
/// y, regrading to x happens at the presentation layer only).
class ReciprocalFamily {
public:
    ReciprocalFamily(CoefficientWindow window, int grade, std::function<BigRat(int)> a)
        : window_(window), grade_(grade), a_(std::move(a)) {
        if (grade_ < 1) throw std::domain_error("ReciprocalFamily: grade must be >= 1");
    }

    const CoefficientWindow& window() const { return window_; }
    int grade() const { return grade_; }

    /// a_0 = 1 by convention; 0 outside the window.
    BigRat coeff(int j) const {
        if (j < 0) throw std::domain_error("coeff: j must be >= 0");
        if (j == 0) return 1;
        if (!window_.contains(j)) return 0;
        return a_(j);
    }

private:
    CoefficientWindow window_;
    int grade_;
    std::function<BigRat(int)> a_;
};

/// Generator pair (g_j, h_j) with a_j = (h_1...h_j)/(g_1...g_j) on the window.
class GHForm {
public:
    GHForm(CoefficientWindow window, int grade, std::function<BigRat(int)> g,
           std::function<BigRat(int)> h)
        : window_(window), grade_(grade), g_(std::move(g)), h_(std::move(h)) {}

    const CoefficientWindow& window() const { return window_; }
    int grade() const { return grade_; }

    BigRat g(int j) const {
        BigRat v = g_(j);
        if (v.is_zero()) throw std::domain_error("GHForm: g_" + std::to_string(j) + " vanishes");
        return v;
    }
    BigRat h(int j) const { return h_(j); }

    /// H_j/G_j = (h_1...h_j)/(g_1...g_j); the family coefficient before masking.
    BigRat coeff_ratio(int j) const {
        BigRat num = 1, den = 1;
        for (int i = 1; i <= j; ++i) {
            num *= h(i);
            den *= g(i);
        }
        return num / den;
    }

    /// Coefficient view of the same family.
    ReciprocalFamily to_reciprocal() const {
        GHForm self = *this;
        return ReciprocalFamily(window_, grade_, [self](int j) { return self.coeff_ratio(j); });
    }

private:
    CoefficientWindow window_;
    int grade_;
    std::function<BigRat(int)> g_, h_;
};

/// f_0..f_n with f_0 = 1 (indexed by the graded variable).
using FrameSeq = std::vector<BigRat>;

// ---------------------------------------------------------------------------
// Forward routes: coefficients -> f_n
// ---------------------------------------------------------------------------

/// f_0..f_n via the inversion relation f_m = -sum_{k<m} f_k a_{m-k}.
inline FrameSeq f_inversion_prefix(const ReciprocalFamily& fam, int n) {
    std::vector<BigRat> a(n + 1);
    for (int j = 1; j <= n; ++j) a[j] = fam.coeff(j);
    FrameSeq f(n + 1);
    f[0] = 1;
    for (int m = 1; m <= n; ++m) {
        BigRat acc = 0;
        for (int k = 0; k < m; ++k)
            if (!a[m - k].is_zero()) acc += f[k] * a[m - k];
        f[m] = -acc;
    }
    return f;
}

inline BigRat f_via_inversion(const ReciprocalFamily& fam, int n) {
    if (n < 0) throw std::domain_error("f_via_inversion: n must be >= 0");
    return f_inversion_prefix(fam, n)[n];
}

/// f_n = (-1)^n det of the n x n Toeplitz-Hessenberg coefficient matrix,
/// evaluated by an independent oracle (cofactor for n <= 8, Bareiss above).
inline BigRat f_via_determinant(const ReciprocalFamily& fam, int n) {
    if (n < 0) throw std::domain_error("f_via_determinant: n must be >= 0");
    if (n == 0) return 1;
    std::vector<BigRat> a(n);
    for (int j = 1; j <= n; ++j) a[j - 1] = fam.coeff(j);
    SquareMatrix m = toeplitz_hessenberg(a, n);
    BigRat det = (n <= 8) ? det_cofactor(m) : det_bareiss(m);
    return (n % 2 == 0) ? det : -det;
}

/// Trudi-type sum over partitions of n with parts in the window:
/// multiplicity vectors t with sum j*t_j = n, each contributing
/// multinomial(t) * (-1)^{sum t} * prod a_j^{t_j}.
inline BigRat f_via_partitions(const ReciprocalFamily& fam, int n) {
    if (n < 0) throw std::domain_error("f_via_partitions: n must be >= 0");
    if (n == 0) return 1;
    const int lo = fam.window().lo(), hi = fam.window().clamp_hi(n);
    std::vector<int> parts;
    std::vector<BigRat> val;
    for (int j = lo; j <= hi; ++j) {
        parts.push_back(j);
        val.push_back(fam.coeff(j));
    }
    BigRat total = 0;
    std::vector<int> t(parts.size(), 0);
    auto rec = [&](auto&& self, size_t idx, int remaining) -> void {
        if (idx == parts.size()) {
            if (remaining != 0) return;
            BigRat term(multinomial(t));
            int count = 0;
            for (size_t i = 0; i < parts.size(); ++i) {
                if (t[i] == 0) continue;
                count += t[i];
                term *= pow(val[i], t[i]);
            }
            total += (count % 2 == 0) ? term : -term;
            return;
        }
        for (int c = 0; c * parts[idx] <= remaining; ++c) {
            t[idx] = c;
            self(self, idx + 1, remaining - c * parts[idx]);
        }
        t[idx] = 0;
    };
    rec(rec, 0, n);
    return total;
}

/// Signed sum over ordered compositions of n with parts in the window.
inline BigRat f_via_compositions(const ReciprocalFamily& fam, int n) {
    if (n < 0) throw std::domain_error("f_via_compositions: n must be >= 0");
    if (n == 0) return 1;  // empty composition, by convention
    const int lo = fam.window().lo();
    std::vector<BigRat> a(n + 1);
    for (int j = 1; j <= n; ++j) a[j] = fam.coeff(j);
    BigRat total = 0;
    auto rec = [&](auto&& self, int remaining, const BigRat& prod, bool odd) -> void {
        for (int j = lo; j <= fam.window().clamp_hi(remaining); ++j) {
            if (a[j].is_zero()) continue;
            BigRat p = prod * a[j];
            if (j == remaining)
                total += odd ? -p : p;
            else
                self(self, remaining - j, p, !odd);
        }
    };
    rec(rec, n, 1, true);
    return total;
}

// ---------------------------------------------------------------------------
// Inverse routes: f -> coefficients
// ---------------------------------------------------------------------------

/// (-1)^n det of the Toeplitz-Hessenberg matrix built from f_1..f_n;
/// recovers coeff(fam, n), including 0 outside the window.
inline BigRat a_via_f_determinant(const FrameSeq& f, int n) {
    if (n < 1 || static_cast<size_t>(n) >= f.size())
        throw std::domain_error("a_via_f_determinant: need f_1..f_n");
    std::vector<BigRat> b(f.begin() + 1, f.begin() + 1 + n);
    SquareMatrix m = toeplitz_hessenberg(b, n);
    BigRat det = (n <= 8) ? det_cofactor(m) : det_bareiss(m);
    return (n % 2 == 0) ? det : -det;
}

/// Signed composition sum over unrestricted parts >= 1 applied to f.
inline BigRat a_via_f_compositions(const FrameSeq& f, int n) {
    if (n < 1 || static_cast<size_t>(n) >= f.size())
        throw std::domain_error("a_via_f_compositions: need f_1..f_n");
    BigRat total = 0;
    auto rec = [&](auto&& self, int remaining, const BigRat& prod, bool odd) -> void {
        for (int j = 1; j <= remaining; ++j) {
            if (f[j].is_zero()) continue;
            BigRat p = prod * f[j];
            if (j == remaining)
                total += odd ? -p : p;
            else
                self(self, remaining - j, p, !odd);
        }
    };
    rec(rec, n, 1, true);
    return total;
}

// ---------------------------------------------------------------------------
// Continued fractions
// ---------------------------------------------------------------------------

/// Depth-n convergent P_n/Q_n of the infinite-window continued fraction
///   1 - h_1 x / (g_1 + h_1 x - g_1 h_2 x / (g_2 + h_2 x - ...)),
/// via the three-term recurrence P_n = (g_n + h_n x) P_{n-1} - g_{n-1} h_n x P_{n-2}
/// seeded with P_{-1} = P_0 = Q_0 = 1, Q_{-1} = 0. P_n is the constant
/// g_1...g_n and Q_n = g_1...g_n sum_{j<=n} a_j x^j.
inline RatFunc cf_convergent(const GHForm& gh, int n) {
    if (n < 0) throw std::domain_error("cf_convergent: n must be >= 0");
    if (gh.window().lo() != 1 || gh.window().is_finite())
        throw std::domain_error("cf_convergent: requires window [1, unbounded)");
    Poly p_prev2 = 1, p_prev = 1;  // P_{-1}, P_0
    Poly q_prev2 = 0, q_prev = 1;  // Q_{-1}, Q_0
    const Poly x = Poly::monomial(1);
    for (int k = 1; k <= n; ++k) {
        const Poly b = Poly(gh.g(k)) + Poly(gh.h(k)) * x;
        const Poly a = (k == 1) ? -(Poly(gh.h(1)) * x) : -(Poly(gh.g(k - 1) * gh.h(k)) * x);
        Poly p = b * p_prev + a * p_prev2;
        Poly q = b * q_prev + a * q_prev2;
        p_prev2 = std::move(p_prev);
        p_prev = std::move(p);
        q_prev2 = std::move(q_prev);
        q_prev = std::move(q);
    }
    return RatFunc{p_prev, q_prev};
}

/// Finite-window continued fraction
///   1 - H_r x^r / (G_r + H_r x^r - G_r h_{r+1} x / (g_{r+1} + h_{r+1} x - ...
///        - g_{R-1} h_R x / (g_R + h_R x)))
/// evaluated bottom-up as an exact rational function. At full depth
/// (R - r + 1) the result equals 1 / (1 + sum_{j=r..R} a_j x^j) exactly.
inline RatFunc cf_convergent_finite(const GHForm& gh, int depth) {
    if (!gh.window().is_finite() || gh.window().lo() >= *gh.window().hi())
        throw std::domain_error("cf_convergent_finite: requires finite window with r < R");
    const int r = gh.window().lo(), R = *gh.window().hi();
    const int max_depth = R - r + 1;
    if (depth < 1 || depth > max_depth)
        throw std::domain_error("cf_convergent_finite: depth must be in [1, R-r+1]");

    BigRat hr = 1, gr = 1;  // h_1...h_r, g_1...g_r
    for (int i = 1; i <= r; ++i) {
        hr *= gh.h(i);
        gr *= gh.g(i);
    }
    const Poly x = Poly::monomial(1);
    auto node_num = [&](int j) -> Poly {  // j >= 2
        const BigRat lead = (j == 2) ? gr : gh.g(r + j - 2);
        return Poly(lead * gh.h(r + j - 1)) * x;
    };
    auto node_den = [&](int j) -> Poly {  // j >= 2
        return Poly(gh.g(r + j - 1)) + Poly(gh.h(r + j - 1)) * x;
    };

    Poly num, den;
    bool have_tail = false;
    for (int j = depth; j >= 2; --j) {
        if (!have_tail) {
            num = node_num(j);
            den = node_den(j);
            have_tail = true;
        } else {
            Poly combined = node_den(j) * den - num;
            num = node_num(j) * den;
            den = std::move(combined);
        }
    }
    const Poly head_num = Poly(hr) * Poly::monomial(r);
    const Poly head_den = Poly(gr) + head_num;
    Poly p, q;
    if (!have_tail) {
        p = head_num;
        q = head_den;
    } else {
        q = head_den * den - num;
        p = head_num * den;
    }
    return RatFunc{q - p, q};
}

/// One level of a generic continued fraction with polynomial partial
/// quotients: value = head + num_1/(den_1 + num_2/(den_2 + ...)).
struct CFNode {
    Poly num;
    Poly den;
};

/// Evaluates the nodes bottom-up as exact rational functions, then expands
/// to a series at the given order. Throws if the accumulated denominator at
/// some node has zero constant term (reported by 1-based node index).
inline TruncSeries eval_generic_cf(const Poly& head, const std::vector<CFNode>& nodes,
                                   int order) {
    Poly p = 0, q = 1;
    bool have_tail = false;
    for (size_t i = nodes.size(); i-- > 0;) {
        Poly den = have_tail ? nodes[i].den * q + p : nodes[i].den;
        if (den.coeff(0).is_zero())
            throw std::domain_error("eval_generic_cf: zero constant term in denominator at node " +
                                    std::to_string(i + 1));
        p = have_tail ? nodes[i].num * q : nodes[i].num;
        q = std::move(den);
        have_tail = true;
    }
    return to_series(RatFunc{head * q + p, q}, order);
}

/// True iff the depth-n convergent agrees with the inversion-route series
/// through x^n.
inline bool check_convergent_congruence(const GHForm& gh, int n) {
    const RatFunc conv = cf_convergent(gh, n);
    const TruncSeries s = to_series(conv, n);
    const FrameSeq f = f_inversion_prefix(gh.to_reciprocal(), n);
    for (int k = 0; k <= n; ++k)
        if (!(s.coeff(k) == f[k])) return false;
    return true;
}

}  // namespace qspecial

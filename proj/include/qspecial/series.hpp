#pragma once

/**
 * @file series.hpp
 * @brief Truncated formal power series over BigRat.
 *
 * A TruncSeries of order d represents a series modulo x^{d+1}. The order is
 * explicit and operations never silently extend it; mixing orders is an
 * error, since silent truncation mismatches are the main hazard when
 * comparing continued-fraction convergents with series.
 */

#include <stdexcept>
#include <utility>
#include <vector>

#include <qspecial/poly.hpp>

namespace qspecial {

class TruncSeries {
public:
    explicit TruncSeries(int order) : c_(order + 1, BigRat(0)) {
        if (order < 0) throw std::domain_error("TruncSeries: order must be >= 0");
    }
    TruncSeries(std::vector<BigRat> coeffs, int order) : TruncSeries(order) {
        for (size_t k = 0; k < coeffs.size() && k <= static_cast<size_t>(order); ++k)
            c_[k] = std::move(coeffs[k]);
    }

    static TruncSeries from_poly(const Poly& p, int order) {
        TruncSeries s(order);
        for (int k = 0; k <= std::min(order, p.degree()); ++k) s.c_[k] = p.coeff(k);
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const BigRat& coeff(int k) const {
        if (k < 0 || k > order()) throw std::out_of_range("TruncSeries: coefficient index");
        return c_[k];
    }
    void set_coeff(int k, BigRat v) { c_.at(k) = std::move(v); }
    const std::vector<BigRat>& coeffs() const { return c_; }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        a.require_same_order(b);
        TruncSeries r(a.order());
        for (int k = 0; k <= a.order(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        a.require_same_order(b);
        TruncSeries r(a.order());
        for (int k = 0; k <= a.order(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
        return r;
    }

    /// Cauchy product truncated to the common order.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.require_same_order(b);
        TruncSeries r(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; i + j <= a.order(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

private:
    void require_same_order(const TruncSeries& o) const {
        if (order() != o.order())
            throw std::domain_error("TruncSeries: order mismatch (" +
                                    std::to_string(order()) + " vs " +
                                    std::to_string(o.order()) + ")");
    }

    std::vector<BigRat> c_;
};

/// b with a*b = 1 at a's order; requires a(0) != 0. Standard convolution
/// recurrence, O(order^2) exact ops.
inline TruncSeries reciprocal(const TruncSeries& a) {
    if (a.coeff(0).is_zero())
        throw std::domain_error("reciprocal: series has zero constant term");
    const int d = a.order();
    TruncSeries b(d);
    const BigRat inv0 = a.coeff(0).reciprocal();
    b.set_coeff(0, inv0);
    for (int n = 1; n <= d; ++n) {
        BigRat acc = 0;
        for (int k = 0; k < n; ++k) acc += b.coeff(k) * a.coeff(n - k);
        b.set_coeff(n, -acc * inv0);
    }
    return b;
}

/// log(1+x) = x - x^2/2 + x^3/3 - ...
inline TruncSeries log1p_series(int order) {
    TruncSeries s(order);
    for (int n = 1; n <= order; ++n) s.set_coeff(n, BigRat((n % 2) ? 1 : -1, n));
    return s;
}

/// (1+x)^r; exact polynomial for r >= 0, binomial series for r < 0.
inline TruncSeries binomial_pow_series(long r, int order) {
    TruncSeries s(order);
    BigRat c = 1;
    s.set_coeff(0, c);
    for (int k = 1; k <= order; ++k) {
        if (r >= 0 && k > r) break;
        c *= BigRat(r - k + 1, k);
        s.set_coeff(k, c);
    }
    return s;
}

/// num * reciprocal(den) truncated; requires den(0) != 0.
inline TruncSeries to_series(const RatFunc& f, int order) {
    if (f.den.coeff(0).is_zero())
        throw std::domain_error("to_series: denominator has zero constant term");
    return TruncSeries::from_poly(f.num, order) * reciprocal(TruncSeries::from_poly(f.den, order));
}

/// Substitutes x <- x^s; the order is multiplied by s.
inline TruncSeries regrade(const TruncSeries& a, int s) {
    if (s < 1) throw std::domain_error("regrade: step must be >= 1");
    TruncSeries r(a.order() * s);
    for (int k = 0; k <= a.order(); ++k) r.set_coeff(k * s, a.coeff(k));
    return r;
}

}  // namespace qspecial

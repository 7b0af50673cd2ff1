#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials and rational functions over BigRat.
 */

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <qspecial/bigrat.hpp>

namespace qspecial {

class Poly {
public:
    Poly() = default;
    Poly(const BigRat& constant) {  // NOLINT: implicit by design
        if (!constant.is_zero()) c_.push_back(constant);
    }
    Poly(long constant) : Poly(BigRat(constant)) {}  // NOLINT
    explicit Poly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(int degree, const BigRat& coeff = 1) {
        std::vector<BigRat> c(degree + 1, BigRat(0));
        c[degree] = coeff;
        return Poly(std::move(c));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    BigRat coeff(int k) const {
        if (k < 0 || k > degree()) return 0;
        return c_[k];
    }
    const std::vector<BigRat>& coeffs() const { return c_; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<BigRat> c(std::max(a.c_.size(), b.c_.size()), BigRat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        std::vector<BigRat> c(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigRat> c(a.c_.size() + b.c_.size() - 1, BigRat(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const BigRat& s) {
        if (s.is_zero()) return {};
        std::vector<BigRat> c(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i] * s;
        return Poly(std::move(c));
    }
    friend Poly operator*(const BigRat& s, const Poly& a) { return a * s; }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    BigRat eval(const BigRat& x) const {
        BigRat acc = 0;
        for (int k = degree(); k >= 0; --k) acc = acc * x + c_[k];
        return acc;
    }

    /// Substitutes x <- x^s.
    Poly regrade(int s) const {
        if (s < 1) throw std::domain_error("Poly::regrade: step must be >= 1");
        if (is_zero() || s == 1) return *this;
        std::vector<BigRat> c(static_cast<size_t>(degree()) * s + 1, BigRat(0));
        for (int k = 0; k <= degree(); ++k) c[static_cast<size_t>(k) * s] = c_[k];
        return Poly(std::move(c));
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = 0; k <= degree(); ++k) {
            if (c_[k].is_zero()) continue;
            BigRat a = c_[k];
            if (out.empty()) {
                if (a.sign() < 0) {
                    out += "-";
                    a = -a;
                }
            } else {
                out += (a.sign() < 0) ? " - " : " + ";
                if (a.sign() < 0) a = -a;
            }
            if (k == 0) {
                out += a.str();
            } else {
                if (!a.is_one()) out += a.str() + "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<BigRat> c_;  // dense, index = degree, trailing zeros trimmed
};

/// Numerator/denominator pair; den must be nonzero.
struct RatFunc {
    Poly num;
    Poly den;

    RatFunc(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    }
};

}  // namespace qspecial

#pragma once

/**
 * @file bigrat.hpp
 * @brief Exact rational scalar: always in lowest terms, denominator > 0,
 *        never rounded. Every value in this library is a BigRat.
 */

#include <gmp.h>

#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <qspecial/bigint.hpp>

namespace qspecial {

class BigRat {
public:
    BigRat() { mpq_init(q_); }
    BigRat(long v) {  // NOLINT: implicit by design
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    BigRat(long num, long den) {
        if (den == 0) throw std::domain_error("BigRat: zero denominator");
        mpq_init(q_);
        mpz_set_si(mpq_numref(q_), num);
        mpz_set_si(mpq_denref(q_), den);
        mpq_canonicalize(q_);
    }
    explicit BigRat(const BigInt& v) {
        mpq_init(q_);
        mpq_set_z(q_, v.raw());
    }
    BigRat(const BigInt& num, const BigInt& den) {
        if (den.is_zero()) throw std::domain_error("BigRat: zero denominator");
        mpq_init(q_);
        mpq_set_num(q_, num.raw());
        mpq_set_den(q_, den.raw());
        mpq_canonicalize(q_);
    }
    BigRat(const BigRat& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    BigRat(BigRat&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    BigRat& operator=(const BigRat& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    BigRat& operator=(BigRat&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~BigRat() { mpq_clear(q_); }

    /// Parses "a/b" or a plain integer literal.
    static BigRat from_string(std::string_view s) {
        std::string buf(s);
        BigRat r;
        if (buf.empty() || mpq_set_str(r.q_, buf.c_str(), 10) != 0)
            throw std::invalid_argument("BigRat: cannot parse \"" + buf + "\"");
        if (mpz_sgn(mpq_denref(r.q_)) == 0)
            throw std::domain_error("BigRat: zero denominator in \"" + buf + "\"");
        mpq_canonicalize(r.q_);
        return r;
    }

    BigInt numerator() const { return BigInt::from_mpz(mpq_numref(q_)); }
    BigInt denominator() const { return BigInt::from_mpz(mpq_denref(q_)); }

    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }
    bool is_integer() const { return mpz_cmp_si(mpq_denref(q_), 1) == 0; }
    int sign() const { return mpq_sgn(q_); }

    friend BigRat operator+(const BigRat& a, const BigRat& b) {
        BigRat r;
        mpq_add(r.q_, a.q_, b.q_);
        return r;
    }
    friend BigRat operator-(const BigRat& a, const BigRat& b) {
        BigRat r;
        mpq_sub(r.q_, a.q_, b.q_);
        return r;
    }
    friend BigRat operator*(const BigRat& a, const BigRat& b) {
        BigRat r;
        mpq_mul(r.q_, a.q_, b.q_);
        return r;
    }
    friend BigRat operator/(const BigRat& a, const BigRat& b) {
        if (b.is_zero()) throw std::domain_error("BigRat: division by zero");
        BigRat r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    BigRat operator-() const {
        BigRat r;
        mpq_neg(r.q_, q_);
        return r;
    }
    BigRat& operator+=(const BigRat& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    BigRat& operator-=(const BigRat& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    BigRat& operator*=(const BigRat& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }
    BigRat& operator/=(const BigRat& o) { return *this = *this / o; }

    friend bool operator==(const BigRat& a, const BigRat& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
        return mpq_cmp(a.q_, b.q_) <=> 0;
    }

    BigRat reciprocal() const {
        if (is_zero()) throw std::domain_error("BigRat: reciprocal of zero");
        BigRat r;
        mpq_inv(r.q_, q_);
        return r;
    }

    friend BigRat abs(const BigRat& a) {
        BigRat r;
        mpq_abs(r.q_, a.q_);
        return r;
    }

    /// a^e for e >= 0 (lowest terms are preserved by coprime powers).
    friend BigRat pow(const BigRat& a, unsigned long e) {
        BigRat r;
        mpz_pow_ui(mpq_numref(r.q_), mpq_numref(a.q_), e);
        mpz_pow_ui(mpq_denref(r.q_), mpq_denref(a.q_), e);
        return r;
    }

    std::string str() const {
        char* s = mpq_get_str(nullptr, 10, q_);
        std::string out(s);
        std::free(s);
        return out;
    }

private:
    mpq_t q_;
};

inline std::ostream& operator<<(std::ostream& os, const BigRat& v) { return os << v.str(); }

}  // namespace qspecial

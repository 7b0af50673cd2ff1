#pragma once

/**
 * @file bigint.hpp
 * @brief Arbitrary-precision integer with value semantics, backed by GMP.
 */

#include <gmp.h>

#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace qspecial {

class BigInt {
public:
    BigInt() { mpz_init(z_); }
    BigInt(long v) { mpz_init_set_si(z_, v); }  // NOLINT: implicit by design
    explicit BigInt(std::string_view s) {
        std::string buf(s);
        if (mpz_init_set_str(z_, buf.c_str(), 10) != 0) {
            mpz_clear(z_);
            throw std::invalid_argument("BigInt: cannot parse \"" + buf + "\"");
        }
    }
    BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~BigInt() { mpz_clear(z_); }

    bool is_zero() const { return mpz_sgn(z_) == 0; }
    bool is_one() const { return mpz_cmp_si(z_, 1) == 0; }
    int sign() const { return mpz_sgn(z_); }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_add(r.z_, a.z_, b.z_);
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_sub(r.z_, a.z_, b.z_);
        return r;
    }
    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_mul(r.z_, a.z_, b.z_);
        return r;
    }
    BigInt operator-() const {
        BigInt r;
        mpz_neg(r.z_, z_);
        return r;
    }
    BigInt& operator+=(const BigInt& o) {
        mpz_add(z_, z_, o.z_);
        return *this;
    }
    BigInt& operator-=(const BigInt& o) {
        mpz_sub(z_, z_, o.z_);
        return *this;
    }
    BigInt& operator*=(const BigInt& o) {
        mpz_mul(z_, z_, o.z_);
        return *this;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        return mpz_cmp(a.z_, b.z_) <=> 0;
    }

    /// Exact division; quotient must have no remainder (caller's invariant).
    friend BigInt divexact(const BigInt& a, const BigInt& b) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        BigInt r;
        mpz_divexact(r.z_, a.z_, b.z_);
        return r;
    }

    friend BigInt abs(const BigInt& a) {
        BigInt r;
        mpz_abs(r.z_, a.z_);
        return r;
    }
    friend BigInt gcd(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_gcd(r.z_, a.z_, b.z_);
        return r;
    }
    friend BigInt lcm(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_lcm(r.z_, a.z_, b.z_);
        return r;
    }

    static BigInt from_mpz(mpz_srcptr z) {
        BigInt r;
        mpz_set(r.z_, z);
        return r;
    }
    static BigInt factorial(unsigned long n) {
        BigInt r;
        mpz_fac_ui(r.z_, n);
        return r;
    }
    static BigInt binomial(unsigned long n, unsigned long k) {
        BigInt r;
        mpz_bin_uiui(r.z_, n, k);
        return r;
    }

    std::string str() const {
        char* s = mpz_get_str(nullptr, 10, z_);
        std::string out(s);
        std::free(s);
        return out;
    }

    mpz_srcptr raw() const { return z_; }

private:
    mpz_t z_;
};

inline std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.str(); }

}  // namespace qspecial

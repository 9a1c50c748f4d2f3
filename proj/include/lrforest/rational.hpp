#pragma once

/**
 * @file rational.hpp
 * @brief Exact arbitrary-precision rationals.
 *
 * Canonical form is enforced after every construction and operation:
 * denominator > 0, gcd(|num|, den) = 1, zero stored as 0/1. Canonical
 * form makes equality component-wise and ordering a cross-multiply.
 *
 * Values are immutable in spirit: every operator returns a fresh value
 * and nothing mutates shared state, so concurrent reads are safe.
 */

#include <compare>
#include <gmpxx.h>
#include <iosfwd>
#include <string>

#include "lrforest/error.hpp"

namespace lrforest {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}
    Rational(const mpz_class& n) : num_(n), den_(1) {}
    Rational(long num, long den) : num_(num), den_(den) { canonicalize(); }
    Rational(mpz_class num, mpz_class den)
        : num_(std::move(num)), den_(std::move(den)) {
        canonicalize();
    }

    const mpz_class& num() const { return num_; }
    const mpz_class& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_positive() const { return num_ > 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    /// Throws DomainError when b is zero.
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& r) { return *this = *this + r; }
    Rational& operator-=(const Rational& r) { return *this = *this - r; }
    Rational& operator*=(const Rational& r) { return *this = *this * r; }
    Rational& operator/=(const Rational& r) { return *this = *this / r; }

    /// Throws DomainError on zero.
    Rational reciprocal() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "n" when integral, "n/d" otherwise.
    std::string to_string() const;

    /// Float view; used only where plotting output is wanted.
    double to_double() const;

private:
    void canonicalize();

    mpz_class num_;
    mpz_class den_; // always > 0
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);

/// Largest integer <= r.
mpz_class floor(const Rational& r);
/// Smallest integer >= r.
mpz_class ceil(const Rational& r);

} // namespace lrforest

#pragma once

/**
 * @file gaussian.hpp
 * @brief Exact elements of Q(i): z = x + yi with rational x, y.
 *
 * Both components stay in canonical reduced form, so equality is
 * component-wise and every predicate on these numbers is decidable.
 *
 * Literal syntax (parse_number / format_number round-trip):
 *
 *     number := [sign] rat [ sign rat 'i' ]
 *     rat    := digits [ '/' digits ]
 *
 * e.g. "2", "3/5+4/5i", "1/2-1/4i", "-1+2i", "0+1i". No whitespace.
 */

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "lrforest/rational.hpp"

namespace lrforest {

class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im)
        : re_(std::move(re)), im_(std::move(im)) {}

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }

    /// |z|^2 = x^2 + y^2, exact.
    Rational norm_sq() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    /// Quotient by conjugate multiplication; throws DomainError when b = 0.
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);

    GaussianRational& operator+=(const GaussianRational& w) { return *this = *this + w; }
    GaussianRational& operator-=(const GaussianRational& w) { return *this = *this - w; }
    GaussianRational& operator*=(const GaussianRational& w) { return *this = *this * w; }
    GaussianRational& operator/=(const GaussianRational& w) { return *this = *this / w; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;
    /// Lexicographic (re, im); gives these values a total order for use in sets.
    friend std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b);

    std::string to_string() const;

private:
    Rational re_;
    Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/// Parses the literal grammar above; throws ParseError (with byte offset)
/// on malformed input, including zero denominators.
GaussianRational parse_number(std::string_view text);

/// Inverse of parse_number; omits a zero imaginary part.
std::string format_number(const GaussianRational& z);

} // namespace lrforest

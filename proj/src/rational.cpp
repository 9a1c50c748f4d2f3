#include "lrforest/rational.hpp"

#include <ostream>

namespace lrforest {

void Rational::canonicalize() {
    if (den_ == 0)
        throw DomainError("rational with zero denominator");
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero())
        throw DomainError("division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::reciprocal() const {
    if (is_zero())
        throw DomainError("reciprocal of zero");
    return Rational(den_, num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // denominators positive, so a/b <=> c/d reduces to ad <=> cb
    int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    if (den_ == 1)
        return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

double Rational::to_double() const {
    mpq_class q(num_, den_);
    return q.get_d();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

Rational abs(const Rational& r) {
    return r.is_negative() ? -r : r;
}

mpz_class floor(const Rational& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    return q;
}

mpz_class ceil(const Rational& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    return q;
}

} // namespace lrforest

#include "lrforest/gaussian.hpp"

#include <cctype>
#include <ostream>

namespace lrforest {

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero())
        throw DomainError("division by zero");
    Rational n = b.norm_sq();
    GaussianRational prod = a * b.conj();
    return {prod.re() / n, prod.im() / n};
}

std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
    if (auto c = a.re() <=> b.re(); c != 0)
        return c;
    return a.im() <=> b.im();
}

std::string GaussianRational::to_string() const {
    std::string s = re_.to_string();
    if (im_.is_zero())
        return s;
    s += im_.is_negative() ? '-' : '+';
    s += abs(im_).to_string();
    s += 'i';
    return s;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.to_string();
}

std::string format_number(const GaussianRational& z) {
    return z.to_string();
}

namespace {

struct NumberScanner {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    // sign is optional; returns +1/-1
    int scan_sign() {
        if (!done() && (peek() == '+' || peek() == '-'))
            return text[pos++] == '-' ? -1 : 1;
        return 1;
    }

    int require_sign() {
        if (done() || (peek() != '+' && peek() != '-'))
            throw ParseError("expected sign or end of number", pos);
        return text[pos++] == '-' ? -1 : 1;
    }

    mpz_class scan_integer() {
        std::size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos;
        if (pos == start)
            throw ParseError("expected digits", pos);
        return mpz_class(std::string(text.substr(start, pos - start)), 10);
    }

    // rat := digits ['/' digits]
    Rational scan_rational(int sign) {
        mpz_class num = scan_integer();
        mpz_class den = 1;
        if (!done() && peek() == '/') {
            ++pos;
            std::size_t den_pos = pos;
            den = scan_integer();
            if (den == 0)
                throw ParseError("zero denominator", den_pos);
        }
        if (sign < 0)
            num = -num;
        return Rational(num, den);
    }
};

} // namespace

GaussianRational parse_number(std::string_view text) {
    NumberScanner sc{text};
    Rational re = sc.scan_rational(sc.scan_sign());
    if (sc.done())
        return GaussianRational(re);
    Rational im = sc.scan_rational(sc.require_sign());
    if (sc.done() || sc.peek() != 'i')
        throw ParseError("expected 'i'", sc.pos);
    ++sc.pos;
    if (!sc.done())
        throw ParseError("trailing characters after number", sc.pos);
    return GaussianRational(re, im);
}

} // namespace lrforest

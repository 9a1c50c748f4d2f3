#include "lrforest/moebius.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace lrforest {

char to_char(Letter t) {
    return t == Letter::L ? 'L' : 'R';
}

Mat::Mat(mpz_class a, mpz_class b, mpz_class c, mpz_class d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_ * d_ - b_ * c_ != 1)
        throw DomainError("matrix determinant must be 1: " + to_string());
}

const Mat& Mat::identity() {
    static const Mat id;
    return id;
}

Mat Mat::inverse() const {
    return Mat(d_, -b_, -c_, a_);
}

GaussianRational Mat::apply(const GaussianRational& z) const {
    GaussianRational num = GaussianRational(Rational(a_)) * z + GaussianRational(Rational(b_));
    GaussianRational den = GaussianRational(Rational(c_)) * z + GaussianRational(Rational(d_));
    if (den.is_zero())
        throw DomainError("singular input: cz + d = 0 at z = " + z.to_string());
    return num / den;
}

Mat operator*(const Mat& s, const Mat& t) {
    return Mat(s.a_ * t.a_ + s.b_ * t.c_, s.a_ * t.b_ + s.b_ * t.d_,
               s.c_ * t.a_ + s.d_ * t.c_, s.c_ * t.b_ + s.d_ * t.d_);
}

std::string Mat::to_string() const {
    return "[[" + a_.get_str() + "," + b_.get_str() + "],[" + c_.get_str() +
           "," + d_.get_str() + "]]";
}

std::ostream& operator<<(std::ostream& os, const Mat& m) {
    return os << m.to_string();
}

namespace {

struct MatrixScanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    void expect(char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }

    mpz_class scan_integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-'))
            ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == digits)
            throw ParseError("expected integer", start);
        return mpz_class(std::string(text.substr(start, pos - start)), 10);
    }
};

} // namespace

Mat Mat::parse(std::string_view text) {
    MatrixScanner sc{text};
    sc.expect('[');
    sc.expect('[');
    mpz_class a = sc.scan_integer();
    sc.expect(',');
    mpz_class b = sc.scan_integer();
    sc.expect(']');
    sc.expect(',');
    sc.expect('[');
    mpz_class c = sc.scan_integer();
    sc.expect(',');
    mpz_class d = sc.scan_integer();
    sc.expect(']');
    sc.expect(']');
    sc.skip_ws();
    if (sc.pos != text.size())
        throw ParseError("trailing characters after matrix", sc.pos);
    return Mat(a, b, c, d);
}

PairParams::PairParams(long u, long v) : u_(u), v_(v) {
    if (u < 1 || v < 1)
        throw DomainError("pair parameters must satisfy u >= 1 and v >= 1");
    left_ = Mat(mpz_class(1), mpz_class(0), mpz_class(u), mpz_class(1));
    right_ = Mat(mpz_class(1), mpz_class(v), mpz_class(0), mpz_class(1));
}

Word Word::from_string(std::string_view text) {
    Word w;
    w.letters.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == 'L')
            w.letters.push_back(Letter::L);
        else if (text[i] == 'R')
            w.letters.push_back(Letter::R);
        else
            throw ParseError("word letters must be 'L' or 'R'", i);
    }
    return w;
}

std::string Word::to_string() const {
    std::string s;
    s.reserve(letters.size());
    for (Letter t : letters)
        s.push_back(to_char(t));
    return s;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
    return os << w.to_string();
}

Mat matrix_of_word(const Word& w, const PairParams& p) {
    // letters are in application order, so each new letter multiplies
    // on the left: (t1, ..., tk) -> Tk ... T1
    Mat m;
    for (Letter t : w.letters)
        m = p.generator(t) * m;
    return m;
}

std::optional<Word> decompose_word(const Mat& t, const PairParams& p) {
    if (!t.nonneg())
        throw DomainError("decompose_word requires nonnegative entries: " + t.to_string());

    const mpz_class u = p.u();
    const mpz_class v = p.v();
    mpz_class a = t.a(), b = t.b(), c = t.c(), d = t.d();

    // Peel the outermost (last applied) generator. At most one peel can
    // keep all entries nonnegative: a >= vc and c >= ua force a = c = 0
    // and hence det 0, so the loop never needs to backtrack. Each peel
    // strictly decreases a + b + c + d, which bounds the iteration.
    std::vector<Letter> reversed;
    while (!(a == 1 && b == 0 && c == 0 && d == 1)) {
        if (a >= v * c && b >= v * d) {
            // strip R_v: top row -= v * bottom row
            a -= v * c;
            b -= v * d;
            reversed.push_back(Letter::R);
        } else if (c >= u * a && d >= u * b) {
            // strip L_u: bottom row -= u * top row
            c -= u * a;
            d -= u * b;
            reversed.push_back(Letter::L);
        } else {
            return std::nullopt;
        }
    }
    std::reverse(reversed.begin(), reversed.end());
    return Word(std::move(reversed));
}

bool is_member(const Mat& t, const PairParams& p) {
    if (!t.nonneg() || t.is_identity())
        return false;
    return decompose_word(t, p).has_value();
}

bool is_left_right_pair(const Mat& l, const Mat& r) {
    if (!l.nonneg() || !r.nonneg())
        throw DomainError("pair test requires nonnegative matrices");
    if (l.is_identity() || r.is_identity())
        throw DomainError("pair test requires non-identity matrices");

    Mat m = l.inverse() * r;
    mpz_class ac = m.a() * m.c();
    mpz_class ad_bc = m.a() * m.d() + m.b() * m.c();
    mpz_class bd = m.b() * m.d();
    // g(x,y) = ac(x^2+y^2) + (ad+bc)x + bd reaches a positive value on
    // the open quadrant iff one of the coefficients is positive:
    //   ac > 0    -> g -> +inf as y grows
    //   bd > 0    -> g -> bd > 0 toward the origin
    //   ad+bc > 0 -> along y -> 0 the parabola's critical value is
    //                bd - (ad+bc)^2/(4ac) = -1/(4ac) > 0 when ac < 0
    //                (det 1 gives (ad+bc)^2 = 1 + 4*ac*bd), and the
    //                vertex sits at x > 0; for ac = 0 it is unbounded.
    return ac <= 0 && ad_bc <= 0 && bd <= 0;
}

std::optional<OverlapWitness> find_overlap_witness(const Mat& l, const Mat& r,
                                                   long bound) {
    if (!l.nonneg() || !r.nonneg())
        throw DomainError("pair test requires nonnegative matrices");
    if (l.is_identity() || r.is_identity())
        throw DomainError("pair test requires non-identity matrices");
    if (bound < 1)
        throw DomainError("search bound must be >= 1");

    Mat m = l.inverse() * r;
    for (long q = 1; q <= bound; ++q) {
        for (long p = 1; p <= bound; ++p) {
            for (long rr = 1; rr <= bound; ++rr) {
                GaussianRational z2(Rational(p, q), Rational(rr, q));
                GaussianRational z1 = m.apply(z2);
                if (z1.re().is_positive() && z1.im().is_positive()) {
                    if (l.apply(z1) != r.apply(z2))
                        throw Error("internal: witness failed exact recheck");
                    return OverlapWitness{z1, z2};
                }
            }
        }
    }
    return std::nullopt;
}

FixedPointClass fixed_point_class(const Mat& t) {
    if (!t.nonneg())
        throw DomainError("fixed point classification requires nonnegative entries");

    FixedPointClass out;
    if (t.is_identity()) {
        out.kind = FixedPointKind::Identity;
        return out;
    }
    if (t.c() == 0) {
        // det 1 with nonneg entries forces a = d = 1: a translation
        // z -> z + b, whose only fixed point is at infinity.
        out.kind = FixedPointKind::ParabolicReal;
        out.translation = t.b();
        return out;
    }
    // c != 0: roots of cz^2 + (d-a)z - b are (a-d +- sqrt(disc))/(2c)
    // with disc = (a+d)^2 - 4 >= 0, since a + d < 2 would force
    // ad = 0 and bc = -1, impossible for nonnegative entries.
    mpz_class tr = t.trace();
    mpz_class disc = tr * tr - 4;
    if (disc < 0)
        throw Error("internal: negative discriminant for nonneg det-1 matrix " + t.to_string());
    out.kind = disc == 0 ? FixedPointKind::ParabolicReal
                         : FixedPointKind::HyperbolicReal;
    out.discriminant = std::move(disc);
    return out;
}

} // namespace lrforest

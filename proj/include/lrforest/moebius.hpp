#pragma once

/**
 * @file moebius.hpp
 * @brief Determinant-one integer matrices acting on the open quadrant.
 *
 * Mat always has determinant 1; entries may be signed so that inverses
 * are representable. The semigroup of interest is the subset with all
 * entries nonnegative (see Mat::nonneg), acting on the quadrant
 * {x + yi : x > 0, y > 0} by z -> (az + b)/(cz + d).
 *
 * A Word lists generator letters in application order from the root:
 * the vertex of word (t1, ..., tk) at root w is (tk o ... o t1)(w) and
 * its matrix is the product Tk ... T1.
 */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lrforest/gaussian.hpp"

namespace lrforest {

enum class Letter : unsigned char { L, R };

char to_char(Letter t);

class Mat {
public:
    /// Identity.
    Mat() : a_(1), b_(0), c_(0), d_(1) {}

    /// Throws DomainError unless ad - bc = 1.
    Mat(mpz_class a, mpz_class b, mpz_class c, mpz_class d);
    Mat(long a, long b, long c, long d)
        : Mat(mpz_class(a), mpz_class(b), mpz_class(c), mpz_class(d)) {}

    static const Mat& identity();

    const mpz_class& a() const { return a_; }
    const mpz_class& b() const { return b_; }
    const mpz_class& c() const { return c_; }
    const mpz_class& d() const { return d_; }

    bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }

    /// True when all four entries are >= 0, i.e. the matrix lies in the
    /// nonnegative semigroup rather than just in SL2(Z).
    bool nonneg() const { return a_ >= 0 && b_ >= 0 && c_ >= 0 && d_ >= 0; }

    mpz_class trace() const { return a_ + d_; }

    /// (d -b; -c a); exact inverse since det = 1.
    Mat inverse() const;

    /// z -> (az + b)/(cz + d), exact. Throws DomainError when cz + d = 0
    /// (impossible for z in the open quadrant).
    GaussianRational apply(const GaussianRational& z) const;

    friend Mat operator*(const Mat& s, const Mat& t);

    friend bool operator==(const Mat& s, const Mat& t) = default;

    /// "[[a,b],[c,d]]"
    std::string to_string() const;

    /// Parses "[[a,b],[c,d]]" (optional whitespace, arbitrary-precision
    /// entries). Throws ParseError on malformed text, DomainError when
    /// the determinant is not 1.
    static Mat parse(std::string_view text);

private:
    mpz_class a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const Mat& m);

/// Matrix product; apply(compose(S,T), z) = apply(S, apply(T, z)).
inline Mat compose(const Mat& s, const Mat& t) { return s * t; }

/// The generator pair L_u = (1 0; u 1), R_v = (1 v; 0 1).
class PairParams {
public:
    /// Throws DomainError unless u >= 1 and v >= 1.
    PairParams(long u, long v);

    long u() const { return u_; }
    long v() const { return v_; }
    const Mat& left() const { return left_; }
    const Mat& right() const { return right_; }
    const Mat& generator(Letter t) const { return t == Letter::L ? left_ : right_; }

private:
    long u_, v_;
    Mat left_, right_;
};

struct Word {
    std::vector<Letter> letters; // application order, root first

    Word() = default;
    explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

    /// Parses a string over {'L','R'}; throws ParseError otherwise.
    static Word from_string(std::string_view text);
    std::string to_string() const;

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    void push_back(Letter t) { letters.push_back(t); }

    friend bool operator==(const Word&, const Word&) = default;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Product Tk ... T1 for word (t1, ..., tk); empty word gives I.
Mat matrix_of_word(const Word& w, const PairParams& p);

/// Inverse of matrix_of_word: the unique word whose product is T, or
/// nullopt when T is not in the semigroup generated by the pair.
/// Peels the outermost generator repeatedly; each peel strictly lowers
/// the entry sum, which bounds the number of steps. Throws DomainError
/// when T has a negative entry.
std::optional<Word> decompose_word(const Mat& t, const PairParams& p);

/// True iff T is a nonempty product of the pair's generators. The
/// identity is excluded: the semigroup is generated without identity.
bool is_member(const Mat& t, const PairParams& p);

/// Decides L(D0) and R(D0) disjoint, exactly, via the sign criterion on
/// M = L^-1 R = (a b; c d): the images intersect iff
/// g(x,y) = ac(x^2+y^2) + (ad+bc)x + bd is positive somewhere on the
/// open quadrant, which happens iff ac > 0 or ad+bc > 0 or bd > 0.
/// Preconditions: L, R nonneg and not the identity (DomainError).
bool is_left_right_pair(const Mat& l, const Mat& r);

struct OverlapWitness {
    GaussianRational z1, z2; // apply(L, z1) == apply(R, z2), both in D0
};

/// Search oracle for is_left_right_pair, independent of the sign
/// criterion: scans z2 = p/q + (r/q)i over 1 <= p,q,r <= bound in
/// (q,p,r) order and returns the first grid point whose image under
/// L^-1 R stays in the quadrant. nullopt when the grid is exhausted.
std::optional<OverlapWitness> find_overlap_witness(const Mat& l, const Mat& r,
                                                   long bound);

enum class FixedPointKind {
    NoneComputed,  // default-constructed placeholder
    Identity,      // T = I: fixes everything, excluded from the claim below
    ParabolicReal, // single fixed point on the boundary (translation: at infinity)
    HyperbolicReal // two distinct real fixed points
};

struct FixedPointClass {
    FixedPointKind kind = FixedPointKind::NoneComputed;
    std::optional<mpz_class> translation;  // c = 0, T != I: z -> z + b
    std::optional<mpz_class> discriminant; // c != 0: (a+d)^2 - 4, always >= 0
    bool fixed_point_in_d0 = false;        // never true for nonneg T != I
};

/// Classifies the fixed-point equation cz^2 + (d-a)z - b = 0 of a
/// nonneg det-1 matrix. No such matrix other than I fixes a point of
/// the open quadrant. Throws DomainError on negative entries.
FixedPointClass fixed_point_class(const Mat& t);

} // namespace lrforest

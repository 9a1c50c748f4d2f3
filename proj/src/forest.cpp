#include "lrforest/forest.hpp"

#include <algorithm>

namespace lrforest {

bool in_d0(const GaussianRational& z) {
    return z.re().is_positive() && z.im().is_positive();
}

namespace {

void require_d0(const GaussianRational& z) {
    if (!in_d0(z))
        throw DomainError("point not in D0: " + z.to_string());
}

} // namespace

bool in_dn(const GaussianRational& z, long u, const mpz_class& n) {
    require_d0(z);
    if (u < 1 || n < 1)
        throw DomainError("in_dn requires u >= 1 and n >= 1");
    return Rational(n * u) * z.norm_sq() < z.re();
}

RegionIndex crescent_index(const GaussianRational& z, long u) {
    require_d0(z);
    if (u < 1)
        throw DomainError("crescent_index requires u >= 1");
    Rational t = z.re() / (Rational(mpz_class(u)) * z.norm_sq());
    // largest n with n < t: ceil(t) - 1 (t > 0 always)
    return ceil(t) - 1;
}

ChildPair children(const GaussianRational& z, const PairParams& p) {
    require_d0(z);
    return {p.left().apply(z), p.right().apply(z)};
}

std::optional<ParentStep> parent(const GaussianRational& z, const PairParams& p) {
    require_d0(z);
    Rational v(mpz_class(p.v()));
    if (z.re() > v)
        return ParentStep{GaussianRational(z.re() - v, z.im()), Letter::R};
    if (in_dn(z, p.u(), 1)) {
        Mat l_inv = p.left().inverse(); // (1 0; -u 1), i.e. z -> z/(1 - uz)
        return ParentStep{l_inv.apply(z), Letter::L};
    }
    return std::nullopt;
}

bool is_orphan(const GaussianRational& z, const PairParams& p) {
    require_d0(z);
    return Rational(mpz_class(p.u())) * z.norm_sq() >= z.re() &&
           z.re() <= Rational(mpz_class(p.v()));
}

TraceResult trace_to_root(const GaussianRational& z, const PairParams& p,
                          long max_steps) {
    require_d0(z);
    TraceResult out;
    out.chain.push_back(z);

    GaussianRational cur = z;
    std::vector<Letter> reversed;
    long steps = 0;
    while (auto step = parent(cur, p)) {
        if (++steps > max_steps)
            throw StepLimitError("trace exceeded " + std::to_string(max_steps) +
                                 " steps from " + z.to_string());
        reversed.push_back(step->letter);
        cur = std::move(step->value);
        out.chain.push_back(cur);
    }
    std::reverse(reversed.begin(), reversed.end());
    out.word = Word(std::move(reversed));
    out.root = cur;
    return out;
}

bool same_tree(const GaussianRational& z1, const GaussianRational& z2,
               const PairParams& p, long max_steps) {
    return trace_to_root(z1, p, max_steps).root == trace_to_root(z2, p, max_steps).root;
}

namespace {

std::unique_ptr<OrbitNode> grow(const GaussianRational& z, const PairParams& p,
                                int remaining) {
    auto node = std::make_unique<OrbitNode>();
    node->value = z;
    if (remaining > 0) {
        ChildPair c = children(z, p);
        node->left = grow(c.left, p, remaining - 1);
        node->right = grow(c.right, p, remaining - 1);
    }
    return node;
}

} // namespace

OrbitTree orbit(const GaussianRational& z, const PairParams& p, int depth,
                int depth_cap) {
    require_d0(z);
    if (depth < 0)
        throw DomainError("orbit depth must be >= 0");
    if (depth > depth_cap)
        throw DepthCapError("orbit depth " + std::to_string(depth) +
                            " exceeds cap " + std::to_string(depth_cap));
    OrbitTree tree;
    tree.root = z;
    tree.depth = depth;
    tree.nodes = grow(z, p, depth);
    return tree;
}

CuspClass classify_path(const PathSpec& spec, const PairParams&) {
    // The limit only depends on the tail; the finite prefix moves the
    // starting vertex without affecting convergence.
    switch (spec.tail) {
    case PathTail::AllL:
        return CuspClass::Zero;
    case PathTail::AllR:
        return CuspClass::Infinity;
    case PathTail::BothInfinitelyOften:
        return CuspClass::Divergent;
    }
    throw Error("internal: unhandled path tail");
}

Rational lu_iterate_bound(const GaussianRational& z, long u, long n) {
    require_d0(z);
    if (u < 1 || n < 1)
        throw DomainError("lu_iterate_bound requires u >= 1 and n >= 1");
    mpz_class nu = mpz_class(n) * mpz_class(u);
    // L_u^n = (1 0; nu 1)
    Mat power(mpz_class(1), mpz_class(0), nu, mpz_class(1));
    Rational value = power.apply(z).norm_sq();
    if (value >= Rational(mpz_class(1), nu * nu))
        throw Error("internal: half-disk diameter bound violated at " + z.to_string());
    return value;
}

} // namespace lrforest

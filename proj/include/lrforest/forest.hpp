#pragma once

/**
 * @file forest.hpp
 * @brief Geometry and combinatorics of the forest generated by (L_u, R_v).
 *
 * The vertex set is the open quadrant D0 = {x + yi : x > 0, y > 0}.
 * D_n (n >= 1) is the open half disk {z in D0 : nu(x^2+y^2) < x}, a disk
 * of center 1/(2nu) and radius 1/(2nu) cut to the upper half plane. The
 * half crescents D_n \ D_{n+1} tile the region below Re(z) = 1/u, and
 * L_u shifts crescent n onto crescent n+1.
 *
 * Boundary conventions are exact and fixed: D_n membership is strict,
 * the orphan region uses the non-strict u(x^2+y^2) >= x and x <= v.
 */

#include <memory>
#include <vector>

#include "lrforest/moebius.hpp"

namespace lrforest {

/// The unique n >= 0 with z in D_n \ D_{n+1}.
using RegionIndex = mpz_class;

inline constexpr long kDefaultTraceMaxSteps = 10000;
inline constexpr int kDefaultOrbitDepthCap = 20;

/// Strict quadrant test: Re(z) > 0 and Im(z) > 0.
bool in_d0(const GaussianRational& z);

/// Strict half-disk test: n*u*(x^2+y^2) < x. Throws DomainError when
/// z is outside D0 or u, n < 1.
bool in_dn(const GaussianRational& z, long u, const mpz_class& n);

/// Crescent index: the largest n >= 0 with n < x/(u(x^2+y^2)); integer
/// values of the ratio t belong to crescent t - 1. Throws DomainError
/// when z is outside D0.
RegionIndex crescent_index(const GaussianRational& z, long u);

struct ChildPair {
    GaussianRational left;  // L_u(z), real part < 1/u
    GaussianRational right; // R_v(z) = z + v, real part > v
};

/// Both children of z; stays in D0. Throws DomainError when z is outside D0.
ChildPair children(const GaussianRational& z, const PairParams& p);

struct ParentStep {
    GaussianRational value;
    Letter letter; // the edge from parent back down to z
};

/// The unique parent, or nullopt when z is an orphan. An R-parent
/// (z - v) exists iff Re(z) > v; an L-parent (z/(1 - uz)) exists iff
/// z lies in D_1. The two conditions exclude each other.
std::optional<ParentStep> parent(const GaussianRational& z, const PairParams& p);

/// Fundamental-domain test: u(x^2+y^2) >= x and x <= v. Equivalent to
/// parent(z, p) being empty.
bool is_orphan(const GaussianRational& z, const PairParams& p);

struct TraceResult {
    GaussianRational root;             // an orphan
    Word word;                         // path from root down to the query
    std::vector<GaussianRational> chain; // query first, root last
};

/// Walks parent steps up to the root orphan. Every point descends from
/// an orphan after finitely many steps; max_steps is a safety valve and
/// exceeding it throws StepLimitError.
TraceResult trace_to_root(const GaussianRational& z, const PairParams& p,
                          long max_steps = kDefaultTraceMaxSteps);

/// True iff both points trace to the same root orphan.
bool same_tree(const GaussianRational& z1, const GaussianRational& z2,
               const PairParams& p, long max_steps = kDefaultTraceMaxSteps);

struct OrbitNode {
    GaussianRational value;
    std::unique_ptr<OrbitNode> left;  // edge label L
    std::unique_ptr<OrbitNode> right; // edge label R
};

struct OrbitTree {
    GaussianRational root;
    int depth = 0;
    std::unique_ptr<OrbitNode> nodes; // complete binary tree, 2^(depth+1) - 1 values
};

/// The first `depth` generations of descendants of z. Throws
/// DepthCapError when depth exceeds depth_cap (the cap bounds memory:
/// the tree holds 2^(depth+1) - 1 exact values).
OrbitTree orbit(const GaussianRational& z, const PairParams& p, int depth,
                int depth_cap = kDefaultOrbitDepthCap);

enum class CuspClass { Zero, Infinity, Divergent };

enum class PathTail : unsigned char {
    AllL,               // eventually always left
    AllR,               // eventually always right
    BothInfinitelyOften // neither letter eventually constant
};

/// An infinite path given by a finite prefix and an eventually-constant
/// tail (or the flag that both letters recur forever).
struct PathSpec {
    Word prefix;
    PathTail tail = PathTail::AllL;
};

/// Limit of the path: an all-L tail contracts to 0, an all-R tail
/// walks to infinity, and a path using both letters infinitely often
/// has no limit. Independent of the starting vertex.
CuspClass classify_path(const PathSpec& spec, const PairParams& p);

/// |L_u^n(z)|^2, exact; always < 1/(nu)^2 because L_u^n(z) lands in
/// D_n, whose diameter is 1/(nu). Throws DomainError when z is outside
/// D0 or u, n < 1.
Rational lu_iterate_bound(const GaussianRational& z, long u, long n);

} // namespace lrforest

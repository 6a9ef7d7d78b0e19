#pragma once

#include "spp/polynomial.hpp"

namespace spp {

// A real algebraic number: a squarefree primitive polynomial together with a
// rational interval certified (by Sturm count) to contain exactly one of its
// roots.  The interval endpoints are never roots.
struct AlgebraicNumber {
  ZPoly poly;
  mpq_class lo, hi;
};

// Certifies and normalizes: squarefrees p, checks that (lo,hi) isolates
// exactly one root with non-root endpoints.  Throws std::invalid_argument if
// the interval does not isolate.
AlgebraicNumber make_algebraic(const ZPoly& p, const mpq_class& lo, const mpq_class& hi);

// One bisection step.  The root must be irrational (guaranteed for every
// number this project constructs, which are pre-filtered against rational
// roots); hitting it exactly raises std::logic_error.
void alg_refine(AlgebraicNumber& r);

// Whether q vanishes at r.  Decided without refining: g = gcd(q, r.poly)
// changes sign on the interval iff g has a root there; g divides r.poly, so
// that root can only be r itself.
bool alg_is_zero(const ZPoly& q, const AlgebraicNumber& r);

// sign(p(r) - q(r)): 0 via alg_is_zero, otherwise exact interval evaluation
// of the difference, refining r until the sign is constant.
int alg_compare(const ZPoly& p, const ZPoly& q, AlgebraicNumber& r);

double alg_approx(const AlgebraicNumber& r);  // midpoint after a few refinements

// {r^e : e in exponents}: a geometric-type set over an algebraic ratio r > 1.
struct AlgebraicSet {
  AlgebraicNumber ratio;
  std::vector<u32> exponents;  // strictly increasing
};

// (n, |S+S|, |SS|) computed exactly: products are distinct powers of r (r > 1
// makes exponent sums faithful); sums are compared as polynomials in r.
SppTriple alg_spp(const AlgebraicSet& s);

}  // namespace spp

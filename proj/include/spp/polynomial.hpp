#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "spp/core.hpp"

namespace spp {

// Integer polynomials as ascending coefficient vectors with no trailing
// zeros; the zero polynomial is the empty vector.  Everything here is exact.
using ZPoly = std::vector<mpz_class>;

void zp_trim(ZPoly& p);
int zp_deg(const ZPoly& p);  // -1 for the zero polynomial

ZPoly zp_add(const ZPoly& a, const ZPoly& b);
ZPoly zp_sub(const ZPoly& a, const ZPoly& b);
ZPoly zp_mul(const ZPoly& a, const ZPoly& b);
ZPoly zp_derivative(const ZPoly& p);

mpz_class zp_content(const ZPoly& p);
// Content divided out, leading coefficient made positive.
ZPoly zp_primitive(const ZPoly& p);

mpq_class zp_eval(const ZPoly& p, const mpq_class& x);
int zp_sign_at(const ZPoly& p, const mpq_class& x);  // -1, 0, +1

// Primitive gcd via the pseudo-remainder sequence; positive leading
// coefficient; gcd(0,0) = 0.
ZPoly zp_gcd(const ZPoly& a, const ZPoly& b);

// Exact quotient p / d; throws std::invalid_argument if d does not divide p
// over the rationals (quotients of integer primitives stay integral by Gauss).
ZPoly zp_div_exact(const ZPoly& p, const ZPoly& d);

// p / gcd(p, p'): same distinct roots, all simple.
ZPoly zp_squarefree_part(const ZPoly& p);

// Sturm chain of a squarefree polynomial (primitive parts, signs preserved).
std::vector<ZPoly> sturm_chain(const ZPoly& squarefree);
int sturm_variations(const std::vector<ZPoly>& chain, const mpq_class& x);

// Number of distinct real roots of p in the open interval (lo, hi).
u64 zp_count_roots_open(const ZPoly& p, const mpq_class& lo, const mpq_class& hi);

// Whether p has a rational root strictly inside (lo, hi).  Decided by the
// rational-root theorem over the divisors of the outer coefficients.
bool zp_has_rational_root_open(const ZPoly& p, const mpq_class& lo, const mpq_class& hi);

// Isolating intervals (one simple root of p each, endpoints non-roots) for
// every distinct root in (lo, hi), left to right.  Requires that no rational
// bisection point hits a root, which holds whenever p has no rational root in
// the interval; throws std::invalid_argument otherwise.
std::vector<std::pair<mpq_class, mpq_class>> zp_isolate_roots_open(const ZPoly& p,
                                                                   const mpq_class& lo,
                                                                   const mpq_class& hi);

std::string zp_to_string(const ZPoly& p);  // "x^3 - x - 1"

}  // namespace spp

#include "spp/polynomial.hpp"

#include <algorithm>

namespace spp {

void zp_trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int zp_deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  zp_trim(r);
  return r;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  zp_trim(r);
  return r;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  zp_trim(r);
  return r;
}

ZPoly zp_derivative(const ZPoly& p) {
  if (p.size() <= 1) return {};
  ZPoly r(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * static_cast<unsigned long>(i);
  return r;
}

mpz_class zp_content(const ZPoly& p) {
  mpz_class g = 0;
  for (const mpz_class& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly zp_primitive(const ZPoly& p) {
  if (p.empty()) return {};
  mpz_class g = zp_content(p);
  if (p.back() < 0) g = -g;
  ZPoly r = p;
  for (mpz_class& c : r) c /= g;
  return r;
}

mpq_class zp_eval(const ZPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + mpq_class(*it);
  return acc;
}

int zp_sign_at(const ZPoly& p, const mpq_class& x) { return sgn(zp_eval(p, x)); }

namespace {

// Pseudo-remainder of a by d, scaled so the result is a POSITIVE multiple of
// the true rational remainder (each step multiplies by |lc(d)|); Sturm chains
// rely on that sign convention.
ZPoly pseudo_rem(ZPoly a, const ZPoly& d) {
  const int dd = zp_deg(d);
  const mpz_class lead = abs(d.back());
  const int leadSign = sgn(d.back());
  while (zp_deg(a) >= dd) {
    const int da = zp_deg(a);
    const mpz_class top = a.back() * leadSign;
    for (mpz_class& c : a) c *= lead;
    for (int i = 0; i <= dd; ++i) a[da - dd + i] -= top * d[i];
    zp_trim(a);
    if (zp_deg(a) == da) throw std::logic_error("pseudo-remainder failed to reduce degree");
  }
  return a;
}

}  // namespace

ZPoly zp_gcd(const ZPoly& a, const ZPoly& b) {
  ZPoly x = zp_primitive(a), y = zp_primitive(b);
  while (!y.empty()) {
    ZPoly r = zp_primitive(pseudo_rem(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

ZPoly zp_div_exact(const ZPoly& p, const ZPoly& d) {
  if (d.empty()) throw std::invalid_argument("division by the zero polynomial");
  if (p.empty()) return {};
  if (zp_deg(p) < zp_deg(d)) throw std::invalid_argument("quotient is not a polynomial");
  // Rational long division, then verified integral.
  std::vector<mpq_class> rem(p.begin(), p.end());
  std::vector<mpq_class> quot(p.size() - d.size() + 1, 0);
  const mpq_class lead{d.back()};
  for (int i = static_cast<int>(rem.size()) - 1; i >= zp_deg(d); --i) {
    mpq_class f = rem[i] / lead;
    quot[i - zp_deg(d)] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) rem[i - zp_deg(d) + j] -= f * mpq_class(d[j]);
  }
  for (const mpq_class& c : rem)
    if (c != 0) throw std::invalid_argument("inexact polynomial division");
  ZPoly out(quot.size());
  for (std::size_t i = 0; i < quot.size(); ++i) {
    if (quot[i].get_den() != 1) throw std::invalid_argument("non-integer quotient");
    out[i] = quot[i].get_num();
  }
  zp_trim(out);
  return out;
}

ZPoly zp_squarefree_part(const ZPoly& p) {
  if (zp_deg(p) <= 1) return zp_primitive(p);
  const ZPoly g = zp_gcd(p, zp_derivative(p));
  if (zp_deg(g) == 0) return zp_primitive(p);
  return zp_primitive(zp_div_exact(zp_primitive(p), g));
}

std::vector<ZPoly> sturm_chain(const ZPoly& squarefree) {
  std::vector<ZPoly> chain;
  chain.push_back(zp_primitive(squarefree));
  if (zp_deg(squarefree) < 1) return chain;
  chain.push_back(zp_primitive(zp_derivative(squarefree)));
  while (zp_deg(chain.back()) >= 0) {
    ZPoly r = pseudo_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    // Negate, and keep only positive content so the sign is preserved.
    for (mpz_class& c : r) c = -c;
    mpz_class g = zp_content(r);
    for (mpz_class& c : r) c /= g;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sturm_variations(const std::vector<ZPoly>& chain, const mpq_class& x) {
  int vars = 0, prev = 0;
  for (const ZPoly& p : chain) {
    const int s = zp_sign_at(p, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++vars;
    prev = s;
  }
  return vars;
}

namespace {

// Removes the factor (q*x - p) when x = p/q is a root; exact.
ZPoly deflate_rational_root(const ZPoly& poly, const mpq_class& r) {
  ZPoly lin{-r.get_num(), r.get_den()};
  return zp_div_exact(poly, lin);
}

}  // namespace

u64 zp_count_roots_open(const ZPoly& p, const mpq_class& lo, const mpq_class& hi) {
  if (lo >= hi) throw std::invalid_argument("empty interval");
  ZPoly sf = zp_squarefree_part(p);
  if (zp_deg(sf) <= 0) return 0;
  // Roots at the endpoints are outside the open interval: deflate them away
  // so the Sturm count applies cleanly.
  if (zp_sign_at(sf, lo) == 0) sf = deflate_rational_root(sf, lo);
  if (zp_deg(sf) >= 1 && zp_sign_at(sf, hi) == 0) sf = deflate_rational_root(sf, hi);
  if (zp_deg(sf) <= 0) return 0;
  const auto chain = sturm_chain(sf);
  const int c = sturm_variations(chain, lo) - sturm_variations(chain, hi);
  if (c < 0) throw std::logic_error("Sturm variation count decreased");
  return static_cast<u64>(c);
}

bool zp_has_rational_root_open(const ZPoly& p, const mpq_class& lo, const mpq_class& hi) {
  ZPoly q = zp_primitive(p);
  if (q.empty()) return true;  // identically zero
  std::size_t shift = 0;       // strip x^k: root 0 matters only if 0 in (lo,hi)
  while (shift < q.size() && q[shift] == 0) ++shift;
  if (shift) {
    if (lo < 0 && 0 < hi) return true;
    q.erase(q.begin(), q.begin() + shift);
  }
  if (zp_deg(q) < 1) return false;
  const mpz_class a0 = abs(q.front()), lead = abs(q.back());
  if (!a0.fits_ulong_p() || !lead.fits_ulong_p())
    throw std::invalid_argument("coefficients too large for rational-root enumeration");
  const std::vector<u64> ps = [&] {
    std::vector<u64> v;
    const u64 a = a0.get_ui();
    for (u64 d = 1; d * d <= a; ++d)
      if (a % d == 0) {
        v.push_back(d);
        if (d != a / d) v.push_back(a / d);
      }
    return v;
  }();
  const std::vector<u64> qs = [&] {
    std::vector<u64> v;
    const u64 a = lead.get_ui();
    for (u64 d = 1; d * d <= a; ++d)
      if (a % d == 0) {
        v.push_back(d);
        if (d != a / d) v.push_back(a / d);
      }
    return v;
  }();
  for (u64 num : ps)
    for (u64 den : qs)
      for (int sign : {1, -1}) {
        mpq_class cand(mpz_class(num) * sign, mpz_class(den));
        cand.canonicalize();
        if (cand <= lo || cand >= hi) continue;
        if (zp_sign_at(q, cand) == 0) return true;
      }
  return false;
}

std::vector<std::pair<mpq_class, mpq_class>> zp_isolate_roots_open(const ZPoly& p,
                                                                   const mpq_class& lo,
                                                                   const mpq_class& hi) {
  ZPoly sf = zp_squarefree_part(p);
  std::vector<std::pair<mpq_class, mpq_class>> out;
  if (zp_deg(sf) <= 0) return out;
  if (zp_sign_at(sf, lo) == 0) sf = deflate_rational_root(sf, lo);
  if (zp_deg(sf) >= 1 && zp_sign_at(sf, hi) == 0) sf = deflate_rational_root(sf, hi);
  if (zp_deg(sf) <= 0) return out;
  const auto chain = sturm_chain(sf);
  auto rec = [&](auto&& self, const mpq_class& a, const mpq_class& b, int va, int vb) -> void {
    const int k = va - vb;
    if (k == 0) return;
    if (k == 1) {
      out.emplace_back(a, b);
      return;
    }
    const mpq_class m = (a + b) / 2;
    if (zp_sign_at(sf, m) == 0)
      throw std::invalid_argument("bisection hit a rational root; filter rational roots first");
    const int vm = sturm_variations(chain, m);
    self(self, a, m, va, vm);
    self(self, m, b, vm, vb);
  };
  rec(rec, lo, hi, sturm_variations(chain, lo), sturm_variations(chain, hi));
  return out;
}

std::string zp_to_string(const ZPoly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (int i = zp_deg(p); i >= 0; --i) {
    const mpz_class& c = p[i];
    if (c == 0) continue;
    const bool first = out.empty();
    if (c > 0 && !first) out += " + ";
    if (c < 0) out += first ? "-" : " - ";
    const mpz_class a = abs(c);
    if (a != 1 || i == 0) out += a.get_str();
    if (i > 0) {
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace spp

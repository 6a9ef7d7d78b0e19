#include "spp/normalize.hpp"

#include <cmath>

namespace spp {

namespace {

void require_n(u64 n) {
  if (n < 3) throw std::domain_error("normalization requires n >= 3");
}

double log_n(u64 n, double z) { return std::log(z) / std::log(static_cast<double>(n)); }

}  // namespace

double norm_K(u64 n, double x) {
  require_n(n);
  const double dn = static_cast<double>(n);
  if (x < 2 * dn - 1 || x > dn * (dn + 1) / 2)
    throw std::domain_error("coordinate outside [2n-1, n(n+1)/2]");
  const double c2 = (dn - 1) * (dn - 2) / 2;  // C(n-1,2), positive for n >= 3
  const double full = dn * (dn + 1) / 2;      // C(n+1,2)
  const double m = log_n(n, (4 * dn - 2) / (dn + 1)) / c2;
  const double b = (dn * dn - 7 * dn + 4) / (dn * dn - 3 * dn + 2) +
                   ((2 * dn - 1) * log_n(n, full) - full * log_n(n, 2 * dn - 1)) / c2;
  return log_n(n, x) + m * x + b;
}

double norm_L(u64 n, double x) {
  require_n(n);
  if (x < 1) throw std::domain_error("coordinate must be >= 1");
  return log_n(n, x);
}

double norm_K2(u64 n, double x) {
  require_n(n);
  const double dn = static_cast<double>(n);
  const double arg = (2 * x - 3 * dn) / (1 - 2 / dn);
  if (arg <= 0) throw std::domain_error("K2 requires x > 3n/2");
  return log_n(n, arg);
}

double norm_K3(u64 n, double x) {
  require_n(n);
  if (x < 1) throw std::domain_error("coordinate must be >= 1");
  const double dn = static_cast<double>(n);
  const double base = dn * (dn + 1) / (4 * dn - 2);
  return std::log(dn * (dn + 1) * x / (2 * (2 * dn - 1) * (2 * dn - 1))) / std::log(base);
}

double norm_value(Scheme s, u64 n, double x) {
  switch (s) {
    case Scheme::K: return norm_K(n, x);
    case Scheme::L: return norm_L(n, x);
    case Scheme::K2: return norm_K2(n, x);
    case Scheme::K3: return norm_K3(n, x);
  }
  throw std::logic_error("unknown scheme");
}

NormalizedPair nspp_point(const SppTriple& t, Scheme s) {
  return NormalizedPair{t.n, norm_value(s, t.n, static_cast<double>(t.sumSize)),
                        norm_value(s, t.n, static_cast<double>(t.prodSize)), s};
}

}  // namespace spp

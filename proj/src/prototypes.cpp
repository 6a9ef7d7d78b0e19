#include "spp/prototypes.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace spp {

bool Prototype::valid() const {
  if (n == 0) return false;
  if (rank.size() != pair_count(n)) return false;
  if (numClasses == 0 || numClasses > rank.size()) return false;
  std::vector<char> seen(numClasses, 0);
  for (u32 r : rank) {
    if (r >= numClasses) return false;
    seen[r] = 1;
  }
  for (char s : seen)
    if (!s) return false;
  for (u32 i = 1; i <= n; ++i)
    for (u32 j = i; j <= n; ++j) {
      u32 r = rank[pair_ordinal(n, i, j)];
      if (i + 1 <= j && r >= rank[pair_ordinal(n, i + 1, j)]) return false;
      if (j + 1 <= n && r >= rank[pair_ordinal(n, i, j + 1)]) return false;
    }
  return true;
}

std::string Prototype::to_text() const {
  std::string out;
  for (u32 i = 1; i <= n; ++i) {
    if (i > 1) out += ';';
    for (u32 j = i; j <= n; ++j) {
      if (j > i) out += ' ';
      out += std::to_string(rank[pair_ordinal(n, i, j)]);
    }
  }
  return out;
}

Prototype Prototype::from_text(const std::string& text) {
  std::vector<std::string> rows;
  std::size_t start = 0;
  while (true) {
    std::size_t semi = text.find(';', start);
    rows.push_back(text.substr(start, semi == std::string::npos ? std::string::npos : semi - start));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  Prototype p;
  p.n = static_cast<u32>(rows.size());
  p.rank.reserve(pair_count(p.n));
  u32 maxRank = 0;
  for (u32 i = 1; i <= p.n; ++i) {
    std::istringstream in(rows[i - 1]);
    std::string tok;
    u32 got = 0;
    while (in >> tok) {
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("prototype text: bad rank token '" + tok + "'");
      unsigned long v = std::stoul(tok);
      p.rank.push_back(static_cast<u32>(v));
      maxRank = std::max(maxRank, static_cast<u32>(v));
      ++got;
    }
    if (got != p.n - i + 1)
      throw std::invalid_argument("prototype text: row " + std::to_string(i) + " has " +
                                  std::to_string(got) + " entries, expected " +
                                  std::to_string(p.n - i + 1));
  }
  p.numClasses = maxRank + 1;
  if (!p.valid()) throw std::invalid_argument("prototype text violates ordering invariants");
  return p;
}

u64 enumerate_prototypes(u32 n, const std::function<void(const Prototype&)>& sink) {
  if (n < 1 || n > 7) throw std::invalid_argument("prototype enumeration supports 1 <= n <= 7");
  const u32 m = pair_count(n);  // <= 28, so pair subsets fit in u64
  std::vector<u64> pred(m, 0);  // immediate predecessors in the pair poset
  for (u32 i = 1; i <= n; ++i)
    for (u32 j = i; j <= n; ++j) {
      u32 k = pair_ordinal(n, i, j);
      if (i >= 2) pred[k] |= u64{1} << pair_ordinal(n, i - 1, j);
      if (j >= i + 1) pred[k] |= u64{1} << pair_ordinal(n, i, j - 1);
    }
  Prototype proto;
  proto.n = n;
  proto.rank.assign(m, 0);
  u64 count = 0;
  // Rank classes are assigned bottom-up, so the unranked remainder is always
  // an up-set; a pair is minimal there iff both immediate predecessors are
  // already ranked.  Each weak order is reached exactly once because its rank
  // classes are recovered in order.
  auto rec = [&](auto&& self, u64 rem, u32 nextRank) -> void {
    if (rem == 0) {
      proto.numClasses = nextRank;
      ++count;
      sink(proto);
      return;
    }
    u64 minim = 0;
    for (u64 w = rem; w != 0; w &= w - 1) {
      u32 p = static_cast<u32>(std::countr_zero(w));
      if ((pred[p] & rem) == 0) minim |= u64{1} << p;
    }
    for (u64 s = minim; s != 0; s = (s - 1) & minim) {
      for (u64 w = s; w != 0; w &= w - 1)
        proto.rank[static_cast<u32>(std::countr_zero(w))] = nextRank;
      self(self, rem & ~s, nextRank + 1);
    }
  };
  rec(rec, m == 64 ? ~u64{0} : (u64{1} << m) - 1, 0);
  return count;
}

namespace {

Prototype type_from_values(u32 n, const std::vector<u64>& vals) {
  std::vector<u64> sorted(vals);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Prototype p;
  p.n = n;
  p.rank.resize(vals.size());
  for (std::size_t k = 0; k < vals.size(); ++k)
    p.rank[k] = static_cast<u32>(std::lower_bound(sorted.begin(), sorted.end(), vals[k]) -
                                 sorted.begin());
  p.numClasses = static_cast<u32>(sorted.size());
  return p;
}

}  // namespace

Prototype addition_type(const PosIntSet& A) {
  const auto& a = A.elements();
  const u32 n = static_cast<u32>(a.size());
  std::vector<u64> vals(pair_count(n));
  for (u32 i = 1; i <= n; ++i)
    for (u32 j = i; j <= n; ++j) vals[pair_ordinal(n, i, j)] = a[i - 1] + a[j - 1];
  return type_from_values(n, vals);
}

Prototype multiplication_type(const PosIntSet& A) {
  const auto& a = A.elements();
  const u32 n = static_cast<u32>(a.size());
  std::vector<u64> vals(pair_count(n));
  for (u32 i = 1; i <= n; ++i)
    for (u32 j = i; j <= n; ++j) vals[pair_ordinal(n, i, j)] = a[i - 1] * a[j - 1];
  return type_from_values(n, vals);
}

namespace {

// One inequality sum(c[v] * y[v]) >= rhs over the free variables.
struct FmRow {
  std::vector<mpq_class> c;
  mpq_class rhs;
};

// Scales so the first nonzero coefficient has absolute value 1; rows that are
// positive multiples of each other then compare equal and can be deduplicated.
void normalize_row(FmRow& r) {
  for (const mpq_class& c : r.c)
    if (sgn(c) != 0) {
      mpq_class scale = 1 / abs(c);
      for (mpq_class& x : r.c) x *= scale;
      r.rhs *= scale;
      return;
    }
}

bool row_less(const FmRow& a, const FmRow& b) {
  for (std::size_t k = 0; k < a.c.size(); ++k) {
    int c = cmp(a.c[k], b.c[k]);
    if (c != 0) return c < 0;
  }
  return cmp(a.rhs, b.rhs) < 0;
}

bool row_equal(const FmRow& a, const FmRow& b) { return a.c == b.c && a.rhs == b.rhs; }

}  // namespace

std::optional<std::vector<mpq_class>> realize(const Prototype& p) {
  if (!p.valid()) throw std::invalid_argument("realize: invalid prototype");
  const u32 n = p.n;
  const u32 m = pair_count(n);
  const u32 vars = n - 1;  // a_2..a_n, with a_1 = 0

  std::vector<u32> pairI(m), pairJ(m);
  for (u32 i = 1; i <= n; ++i)
    for (u32 j = i; j <= n; ++j) {
      pairI[pair_ordinal(n, i, j)] = i;
      pairJ[pair_ordinal(n, i, j)] = j;
    }
  // Coefficients of a_i + a_j over the variables (a_1 contributes nothing).
  auto addCoeffs = [&](std::vector<mpq_class>& c, u32 k, int sign) {
    if (pairI[k] >= 2) c[pairI[k] - 2] += sign;
    if (pairJ[k] >= 2) c[pairJ[k] - 2] += sign;
  };

  std::vector<std::vector<u32>> classes(p.numClasses);
  for (u32 k = 0; k < m; ++k) classes[p.rank[k]].push_back(k);

  // Tied pairs: member - representative = 0.  Homogeneous, so always
  // consistent; reduce to RREF to express pivot variables in free ones.
  std::vector<std::vector<mpq_class>> eq;
  for (const auto& members : classes)
    for (std::size_t t = 1; t < members.size(); ++t) {
      std::vector<mpq_class> row(vars, mpq_class(0));
      addCoeffs(row, members[t], +1);
      addCoeffs(row, members[0], -1);
      eq.push_back(std::move(row));
    }
  std::vector<int> pivotRowOfCol(vars, -1);
  u32 rankRows = 0;
  for (u32 col = 0; col < vars && rankRows < eq.size(); ++col) {
    u32 r = rankRows;
    while (r < eq.size() && sgn(eq[r][col]) == 0) ++r;
    if (r == eq.size()) continue;
    std::swap(eq[rankRows], eq[r]);
    mpq_class inv = 1 / eq[rankRows][col];
    for (mpq_class& x : eq[rankRows]) x *= inv;
    for (u32 rr = 0; rr < eq.size(); ++rr) {
      if (rr == rankRows || sgn(eq[rr][col]) == 0) continue;
      mpq_class f = eq[rr][col];
      for (u32 cc = 0; cc < vars; ++cc) eq[rr][cc] -= f * eq[rankRows][cc];
    }
    pivotRowOfCol[col] = static_cast<int>(rankRows);
    ++rankRows;
  }
  std::vector<u32> freeCols;
  std::vector<int> freeIndexOfCol(vars, -1);
  for (u32 col = 0; col < vars; ++col)
    if (pivotRowOfCol[col] < 0) {
      freeIndexOfCol[col] = static_cast<int>(freeCols.size());
      freeCols.push_back(col);
    }
  const u32 F = static_cast<u32>(freeCols.size());

  // Representative gaps between consecutive classes, rewritten over the free
  // variables: pivot x_col = -sum(eq[pivotRow][f] * y_f) over free columns f.
  bool infeasible = false;
  auto project = [&](const std::vector<mpq_class>& full) {
    FmRow row;
    row.c.assign(F, mpq_class(0));
    row.rhs = 1;
    for (u32 col = 0; col < vars; ++col) {
      if (sgn(full[col]) == 0) continue;
      if (pivotRowOfCol[col] >= 0) {
        const auto& prow = eq[static_cast<u32>(pivotRowOfCol[col])];
        for (u32 f = 0; f < F; ++f) row.c[f] -= full[col] * prow[freeCols[f]];
      } else {
        row.c[static_cast<u32>(freeIndexOfCol[col])] += full[col];
      }
    }
    return row;
  };
  std::vector<FmRow> rows;
  for (u32 c = 0; c + 1 < p.numClasses; ++c) {
    std::vector<mpq_class> full(vars, mpq_class(0));
    addCoeffs(full, classes[c + 1][0], +1);
    addCoeffs(full, classes[c][0], -1);
    FmRow row = project(full);
    normalize_row(row);
    bool allZero = std::all_of(row.c.begin(), row.c.end(),
                               [](const mpq_class& x) { return sgn(x) == 0; });
    if (allZero) {
      if (sgn(row.rhs) > 0) infeasible = true;
      continue;
    }
    rows.push_back(std::move(row));
  }

  struct Stage {
    u32 var = 0;
    std::vector<FmRow> lowers;  // coefficient on var > 0
    std::vector<FmRow> uppers;  // coefficient on var < 0
  };
  std::vector<Stage> stages;
  for (u32 v = 0; v < F && !infeasible; ++v) {
    Stage st;
    st.var = v;
    std::vector<FmRow> rest;
    for (FmRow& r : rows) {
      int s = sgn(r.c[v]);
      if (s > 0)
        st.lowers.push_back(std::move(r));
      else if (s < 0)
        st.uppers.push_back(std::move(r));
      else
        rest.push_back(std::move(r));
    }
    for (const FmRow& lo : st.lowers)
      for (const FmRow& up : st.uppers) {
        // Positive combination cancelling var v: (-up.c[v])*lo + lo.c[v]*up.
        FmRow comb;
        comb.c.assign(F, mpq_class(0));
        mpq_class a = -up.c[v];
        mpq_class b = lo.c[v];
        for (u32 f = 0; f < F; ++f) comb.c[f] = a * lo.c[f] + b * up.c[f];
        comb.rhs = a * lo.rhs + b * up.rhs;
        normalize_row(comb);
        bool allZero = std::all_of(comb.c.begin(), comb.c.end(),
                                   [](const mpq_class& x) { return sgn(x) == 0; });
        if (allZero) {
          if (sgn(comb.rhs) > 0) infeasible = true;
          continue;
        }
        rest.push_back(std::move(comb));
      }
    std::sort(rest.begin(), rest.end(), row_less);
    rest.erase(std::unique(rest.begin(), rest.end(), row_equal), rest.end());
    rows = std::move(rest);
    stages.push_back(std::move(st));
  }
  if (infeasible) return std::nullopt;
  // All variables eliminated; survivors would have imposed 0 >= rhs and were
  // screened as they appeared, so remaining rows must have zero coefficients.
  for (const FmRow& r : rows)
    if (sgn(r.rhs) > 0) return std::nullopt;

  // Back-substitute: the rows set aside at each stage bound exactly one still
  // unassigned variable once the later ones have values.
  std::vector<mpq_class> y(F, 0);
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    const u32 v = it->var;
    bool hasLo = false, hasUp = false;
    mpq_class lo = 0, up = 0;
    auto rest = [&](const FmRow& r) {
      mpq_class s = r.rhs;
      for (u32 f = v + 1; f < F; ++f) s -= r.c[f] * y[f];
      return s;
    };
    for (const FmRow& r : it->lowers) {
      mpq_class bound = rest(r) / r.c[v];
      if (!hasLo || bound > lo) lo = bound;
      hasLo = true;
    }
    for (const FmRow& r : it->uppers) {
      mpq_class bound = rest(r) / r.c[v];  // negative divisor flips to <=
      if (!hasUp || bound < up) up = bound;
      hasUp = true;
    }
    if (hasLo && hasUp && lo > up)
      throw std::logic_error("realize: elimination stages produced an empty interval");
    y[v] = hasLo ? lo : (hasUp ? up : mpq_class(0));
  }

  std::vector<mpq_class> a(n, 0);
  for (u32 col = 0; col < vars; ++col) {
    mpq_class x = 0;
    if (pivotRowOfCol[col] >= 0) {
      const auto& prow = eq[static_cast<u32>(pivotRowOfCol[col])];
      for (u32 f = 0; f < F; ++f) x -= prow[freeCols[f]] * y[f];
    } else {
      x = y[static_cast<u32>(freeIndexOfCol[col])];
    }
    a[col + 1] = x;
  }

  // The witness must reproduce p exactly: recompute the dense ranks of the
  // pair sums and compare.
  for (u32 t = 0; t + 1 < n; ++t)
    if (a[t] >= a[t + 1]) throw std::logic_error("realize: witness is not increasing");
  std::vector<mpq_class> sums(m);
  for (u32 k = 0; k < m; ++k) sums[k] = a[pairI[k] - 1] + a[pairJ[k] - 1];
  std::vector<mpq_class> sorted(sums);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() != p.numClasses)
    throw std::logic_error("realize: witness class count mismatch");
  for (u32 k = 0; k < m; ++k) {
    u32 r = static_cast<u32>(std::lower_bound(sorted.begin(), sorted.end(), sums[k]) -
                             sorted.begin());
    if (r != p.rank[k]) throw std::logic_error("realize: witness fails to reproduce prototype");
  }
  return a;
}

bool is_realizable(const Prototype& p) { return realize(p).has_value(); }

u64 count_types(u32 n) {
  if (n < 1 || n > 6) throw std::invalid_argument("count_types supports 1 <= n <= 6");
  u64 realizable = 0;
  enumerate_prototypes(n, [&](const Prototype& p) {
    if (is_realizable(p)) ++realizable;
  });
  return realizable;
}

}  // namespace spp

#include "adlab/dissociation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "conv.hpp"

namespace adlab {

namespace {

// Scalar picture of a set for relation problems: encoded values aligned with
// the set's index order. Relations with |eps| <= k survive the encoding.
struct Scal {
  std::vector<int64_t> v;
  int64_t md = 0;
};

Scal scalarize(const GroundSet& a, int k) {
  BoxBuilder bb(a.width());
  bb.add_each(a, -k, k);
  Codec c = bb.build(a.ambient());
  Scal s;
  s.md = c.modulus();
  for (size_t i = 0; i < a.size(); ++i) s.v.push_back(c.encode(a.at(i)));
  return s;
}

int64_t addm(int64_t a, int64_t b, int64_t md) {
  if (!md) return a + b;
  int64_t r = a + b;
  if (r >= md) r -= md;
  if (r < 0) r += md;
  return r;
}

int64_t mulc(int64_t c, int64_t x, int64_t md) {
  if (!md) return c * x;
  return mod_norm(static_cast<int64_t>((static_cast<__int128>(c) * x) % md), md);
}

uint64_t pow_sat(uint64_t b, int e) {
  uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > UINT64_MAX / b) return UINT64_MAX;
    r *= b;
  }
  return r;
}

// does V intersect V + t (V sorted, values reduced)?
bool meets_shift(const std::vector<int64_t>& V, int64_t t, int64_t md) {
  if (t == 0) return true;
  auto scan = [&](size_t jb, size_t je, int64_t add) {
    size_t i = 0;
    for (size_t j = jb; j < je; ++j) {
      int64_t w = V[j] + add;
      while (i < V.size() && V[i] < w) ++i;
      if (i == V.size()) return false;
      if (V[i] == w) return true;
    }
    return false;
  };
  if (!md) return scan(0, V.size(), t);
  size_t cut = std::lower_bound(V.begin(), V.end(), md - t) - V.begin();
  return scan(cut, V.size(), t - md) || scan(0, cut, t);
}

// V -> union of V + c x for c in [0, k]
std::vector<int64_t> extend_sums(const std::vector<int64_t>& V, int64_t x, int k, int64_t md) {
  std::vector<int64_t> out = V;
  std::vector<int64_t> cur = V, nxt, merged;
  for (int c = 1; c <= k; ++c) {
    nxt.resize(cur.size());
    for (size_t i = 0; i < cur.size(); ++i) nxt[i] = addm(cur[i], x, md);
    if (md) std::sort(nxt.begin(), nxt.end());
    merged.clear();
    std::merge(out.begin(), out.end(), nxt.begin(), nxt.end(), std::back_inserter(merged));
    out.swap(merged);
    cur.swap(nxt);
  }
  return out;
}

// can x join the k-dissociated set whose [0,k]-sums are V?
bool extends(const std::vector<int64_t>& V, int64_t x, int k, int64_t md) {
  for (int c = 1; c <= k; ++c)
    if (meets_shift(V, mulc(c, x, md), md)) return false;
  return true;
}

struct HalfEntry {
  int64_t val;
  uint64_t code;
  bool operator<(const HalfEntry& o) const { return val < o.val || (val == o.val && code < o.code); }
};

// all sums over coefficient vectors in [-k,k]^|idx|; code = base-(2k+1) digits
std::vector<HalfEntry> half_sums(const Scal& s, const std::vector<size_t>& idx, int k, bool negate) {
  std::vector<HalfEntry> cur = {{0, 0}}, nxt;
  const uint64_t base = 2 * k + 1;
  for (size_t t = 0; t < idx.size(); ++t) {
    int64_t x = s.v[idx[t]];
    nxt.clear();
    nxt.reserve(cur.size() * base);
    for (auto& e : cur)
      for (int c = -k; c <= k; ++c) {
        int64_t add = mulc(negate ? -c : c, x, s.md);
        nxt.push_back({addm(e.val, add, s.md), e.code * base + static_cast<uint64_t>(c + k)});
      }
    cur.swap(nxt);
  }
  std::sort(cur.begin(), cur.end());
  return cur;
}

void decode_half(uint64_t code, size_t len, int k, std::vector<int64_t>& eps, size_t off) {
  const uint64_t base = 2 * k + 1;
  for (size_t t = len; t-- > 0;) {
    eps[off + t] = static_cast<int64_t>(code % base) - k;
    code /= base;
  }
}

uint64_t zero_code(size_t len, int k) {
  uint64_t z = 0;
  for (size_t t = 0; t < len; ++t) z = z * (2 * k + 1) + k;
  return z;
}

// Meet in the middle. Visits every match (a relation) through `on_rel`,
// which returns false to stop.
template <class F>
uint64_t mitm(const Scal& s, int k, F&& on_rel) {
  const size_t n = s.v.size();
  const size_t h = (n + 1) / 2;
  std::vector<size_t> li(h), ri(n - h);
  std::iota(li.begin(), li.end(), 0);
  std::iota(ri.begin(), ri.end(), h);
  auto L = half_sums(s, li, k, false);
  auto R = half_sums(s, ri, k, true);
  const uint64_t zl = zero_code(h, k), zr = zero_code(n - h, k);
  uint64_t states = L.size() + R.size();
  std::vector<int64_t> eps(n);
  size_t i = 0, j = 0;
  while (i < L.size() && j < R.size()) {
    if (L[i].val < R[j].val) {
      ++i;
    } else if (R[j].val < L[i].val) {
      ++j;
    } else {
      size_t i2 = i, j2 = j;
      while (i2 < L.size() && L[i2].val == L[i].val) ++i2;
      while (j2 < R.size() && R[j2].val == R[j].val) ++j2;
      for (size_t a = i; a < i2; ++a)
        for (size_t b = j; b < j2; ++b) {
          if (L[a].code == zl && R[b].code == zr) continue;
          decode_half(L[a].code, h, k, eps, 0);
          decode_half(R[b].code, n - h, k, eps, h);
          ++states;
          if (!on_rel(eps)) return states;
        }
      i = i2;
      j = j2;
    }
  }
  return states;
}

bool first_nonzero_positive(const std::vector<int64_t>& eps) {
  for (auto e : eps)
    if (e) return e > 0;
  return false;
}

// growing [0,k]-sum set: find the first prefix that breaks, then pull a
// relation out of the collision
Certificate incremental_check(const Scal& s, int k) {
  Certificate cert;
  cert.k = k;
  cert.method = "subset_sums";
  std::vector<int64_t> V = {0};
  for (size_t i = 0; i < s.v.size(); ++i) {
    cert.states_visited += V.size() * k;
    if (!extends(V, s.v[i], k, s.md)) {
      // a relation sits inside the first i+1 elements and uses element i
      Scal pre;
      pre.md = s.md;
      pre.v.assign(s.v.begin(), s.v.begin() + i + 1);
      std::vector<int64_t> found;
      cert.states_visited += mitm(pre, k, [&](const std::vector<int64_t>& e) {
        found = e;
        return false;
      });
      found.resize(s.v.size(), 0);
      if (!first_nonzero_positive(found))
        for (auto& e : found) e = -e;
      cert.verdict = Verdict::Relation;
      cert.relation = found;
      return cert;
    }
    V = extend_sums(V, s.v[i], k, s.md);
  }
  cert.verdict = Verdict::Dissociated;
  return cert;
}

int64_t magnitude(const GroundSet& a, size_t i) {
  auto r = a.at(i);
  int64_t m = 0;
  for (auto x : r) {
    int64_t v = x;
    if (a.ambient().residues()) v = std::min(x, a.ambient().modulus - x);
    m = std::max(m, v < 0 ? -v : v);
  }
  return m;
}

}  // namespace

bool check_relation(const GroundSet& lam, int k, const std::vector<int64_t>& eps) {
  if (eps.size() != lam.size()) return false;
  bool nz = false;
  for (auto e : eps) {
    if (e > k || e < -k) return false;
    nz |= e != 0;
  }
  if (!nz) return false;
  const int w = lam.width();
  for (int j = 0; j < w; ++j) {
    BigInt acc = 0;
    for (size_t i = 0; i < lam.size(); ++i) acc += BigInt(eps[i]) * lam.at(i)[j];
    if (lam.ambient().residues()) acc %= lam.ambient().modulus;
    if (acc != 0) return false;
  }
  return true;
}

Certificate is_k_dissociated(const GroundSet& lam, int k, uint64_t budget) {
  if (k < 1) throw InvalidInput("k must be >= 1");
  Certificate cert;
  cert.k = k;
  const size_t n = lam.size();
  // zero is a relation on its own
  for (size_t i = 0; i < n; ++i) {
    auto r = lam.at(i);
    if (std::all_of(r.begin(), r.end(), [](int64_t v) { return v == 0; })) {
      cert.verdict = Verdict::Relation;
      cert.relation.assign(n, 0);
      cert.relation[i] = 1;
      cert.method = "zero_element";
      return cert;
    }
  }
  if (n == 0) {
    cert.method = "empty";
    return cert;
  }
  Scal s = scalarize(lam, k);
  uint64_t inc = pow_sat(k + 1, static_cast<int>(n));
  uint64_t mid = pow_sat(2 * k + 1, static_cast<int>((n + 1) / 2));
  mid = mid > UINT64_MAX / 2 ? UINT64_MAX : 2 * mid;
  if (std::min(inc, mid) > budget)
    throw BudgetExceeded("dissociativity check needs ~" + std::to_string(std::min(inc, mid)) +
                         " states, budget " + std::to_string(budget));
  if (inc <= mid || k > 127) {
    if (inc > budget) throw BudgetExceeded("dissociativity check exceeds budget");
    return incremental_check(s, k);
  }
  cert.method = "meet_in_middle";
  std::vector<int64_t> found;
  cert.states_visited = mitm(s, k, [&](const std::vector<int64_t>& e) {
    found = e;
    return false;
  });
  if (found.empty()) {
    cert.verdict = Verdict::Dissociated;
  } else {
    if (!first_nonzero_positive(found))
      for (auto& e : found) e = -e;
    cert.verdict = Verdict::Relation;
    cert.relation = found;
  }
  return cert;
}

GroundSet max_dissociated_greedy(const GroundSet& a, int k, GreedyOrder ord,
                                 const std::vector<size_t>& order) {
  if (k < 1) throw InvalidInput("k must be >= 1");
  GroundSet a0 = a.without_zero();
  std::vector<size_t> idx;
  if (ord == GreedyOrder::Given && !order.empty()) {
    // indices refer to `a`; map them into a0
    for (size_t i : order) {
      if (i >= a.size()) throw InvalidInput("order index out of range");
      auto j = a0.index_of(a.at(i));
      if (j) idx.push_back(*j);
    }
  } else {
    idx.resize(a0.size());
    std::iota(idx.begin(), idx.end(), 0);
    if (ord != GreedyOrder::Given) {
      std::vector<int64_t> mag(a0.size());
      for (size_t i = 0; i < a0.size(); ++i) mag[i] = magnitude(a0, i);
      std::stable_sort(idx.begin(), idx.end(), [&](size_t x, size_t y) {
        return ord == GreedyOrder::DescAbs ? mag[x] > mag[y] : mag[x] < mag[y];
      });
    }
  }
  Scal s = scalarize(a0, k);
  std::vector<int64_t> V = {0};
  std::vector<size_t> kept;
  for (size_t i : idx) {
    if (extends(V, s.v[i], k, s.md)) {
      V = extend_sums(V, s.v[i], k, s.md);
      kept.push_back(i);
    }
  }
  return a0.subset(kept);
}

// ---- relations ----

RelationList enumerate_relations(const GroundSet& lam, int k, size_t cap, uint64_t budget) {
  if (k < 1 || k > 127) throw InvalidInput("relation enumeration needs 1 <= k <= 127");
  RelationList out;
  if (lam.empty()) return out;
  uint64_t mid = pow_sat(2 * k + 1, static_cast<int>((lam.size() + 1) / 2));
  if (mid > budget / 2) throw BudgetExceeded("relation enumeration exceeds budget");
  Scal s = scalarize(lam, k);
  out.states = mitm(s, k, [&](const std::vector<int64_t>& e) {
    if (!first_nonzero_positive(e)) return true;
    if (out.eps.size() >= cap) {
      out.complete = false;
      return false;
    }
    out.eps.emplace_back(e.begin(), e.end());
    return true;
  });
  return out;
}

// ---- dimension ----

namespace {

uint64_t mask_of(const std::vector<int8_t>& e) {
  uint64_t m = 0;
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i]) m |= uint64_t{1} << i;
  return m;
}

// complement index sequence comparison: smaller first differing index wins
bool lex_less(const std::vector<size_t>& x, const std::vector<size_t>& y) {
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

std::vector<size_t> complement(uint64_t hit, size_t n) {
  std::vector<size_t> c;
  for (size_t i = 0; i < n; ++i)
    if (!(hit >> i & 1)) c.push_back(i);
  return c;
}

struct HitSearch {
  const std::vector<uint64_t>& sup;
  int target;
  Budget& bud;
  std::vector<uint64_t> found;
  bool aborted = false;

  void go(uint64_t H, uint64_t forbid, int size, size_t start) {
    if (aborted) return;
    if (!bud.spend(1)) {
      aborted = true;
      return;
    }
    size_t i = start;
    while (i < sup.size() && (sup[i] & H)) ++i;
    bud.spend((i - start) / 64);
    if (i == sup.size()) {
      found.push_back(H);
      return;
    }
    if (size == target) return;
    uint64_t cand = sup[i] & ~forbid;
    uint64_t f = forbid;
    while (cand) {
      int e = __builtin_ctzll(cand);
      cand &= cand - 1;
      go(H | uint64_t{1} << e, f, size + 1, i + 1);
      f |= uint64_t{1} << e;
    }
  }
};

// dim through the relation list: complement of a minimum hitting set
bool dim_by_relations(const GroundSet& a0, int k, int lo, int hi, Budget& bud, DimensionBounds& out) {
  const size_t n = a0.size();
  if (n > 64 || k > 127) return false;
  uint64_t mid = pow_sat(2 * k + 1, static_cast<int>((n + 1) / 2));
  if (mid > bud.left() / 2) return false;
  size_t cap = std::min<uint64_t>(uint64_t{1} << 21, bud.left() / 4 + 1);
  RelationList rl = enumerate_relations(a0, k, cap, bud.left());
  bud.spend(rl.states);
  if (!rl.complete) return false;
  std::vector<uint64_t> sup;
  for (auto& e : rl.eps) sup.push_back(mask_of(e));
  std::sort(sup.begin(), sup.end());
  sup.erase(std::unique(sup.begin(), sup.end()), sup.end());
  std::stable_sort(sup.begin(), sup.end(), [](uint64_t x, uint64_t y) {
    return __builtin_popcountll(x) < __builtin_popcountll(y);
  });
  for (int t = static_cast<int>(n) - hi; t <= static_cast<int>(n) - lo; ++t) {
    if (t < 0) continue;
    HitSearch hs{sup, t, bud, {}, false};
    hs.go(0, 0, 0, 0);
    if (hs.aborted) {
      out.upper = static_cast<int>(n) - t;
      return false;
    }
    if (!hs.found.empty()) {
      std::vector<size_t> best;
      bool have = false;
      for (uint64_t H : hs.found) {
        if (__builtin_popcountll(H) != t) continue;
        auto c = complement(H, n);
        if (!have || lex_less(c, best)) {
          best = c;
          have = true;
        }
      }
      out.lower = out.upper = static_cast<int>(n) - t;
      out.exact = true;
      out.witness = a0.subset(best);
      out.method = "relation_hitting_set";
      return true;
    }
  }
  return false;
}

struct DimDfs {
  const Scal& s;
  int k;
  Budget& bud;
  std::vector<int64_t> mag_desc;  // magnitudes of remaining suffix, sorted desc, per position
  std::vector<std::vector<int64_t>> top;  // top[pos] = suffix magnitudes sorted desc
  int64_t md;
  int best = -1;
  std::vector<size_t> best_set;
  std::vector<size_t> cur;
  bool aborted = false;
  int frontier = 0;
  int global_upper = 0;

  // largest size reachable from here by counting
  int bound(size_t pos, int64_t sumabs) const {
    const auto& t = top[pos];
    int have = static_cast<int>(cur.size());
    int j = 0;
    __int128 acc = sumabs;
    while (j < static_cast<int>(t.size())) {
      int d = have + j + 1;
      if (d > global_upper) break;
      if (md) {
        if (static_cast<__int128>(pow_sat(k + 1, d)) > md) break;
      } else {
        acc += t[j];
        uint64_t need = pow_sat(k + 1, d);
        if (static_cast<__int128>(need) > static_cast<__int128>(k) * acc + 1) break;
      }
      ++j;
    }
    return have + j;
  }

  void go(size_t pos, const std::vector<int64_t>& V, int64_t sumabs) {
    int b = bound(pos, sumabs);
    if (b <= best) return;
    if (aborted) {
      frontier = std::max(frontier, b);
      return;
    }
    if (!bud.spend(1)) {
      aborted = true;
      frontier = std::max(frontier, b);
      return;
    }
    if (pos == s.v.size() || static_cast<int>(cur.size()) == b) {
      if (static_cast<int>(cur.size()) > best) {
        best = static_cast<int>(cur.size());
        best_set = cur;
      }
      return;
    }
    int64_t x = s.v[pos];
    bud.spend(V.size() * k);
    if (extends(V, x, k, md)) {
      auto V2 = extend_sums(V, x, k, md);
      cur.push_back(pos);
      go(pos + 1, V2, sumabs + (x < 0 ? -x : x));
      cur.pop_back();
      if (best >= global_upper) return;
    }
    go(pos + 1, V, sumabs);
  }
};

int counting_upper(const Scal& s, int k) {
  const int n = static_cast<int>(s.v.size());
  if (s.md) {
    int d = 0;
    while (d < n && pow_sat(k + 1, d + 1) <= static_cast<uint64_t>(s.md)) ++d;
    return d;
  }
  std::vector<int64_t> m;
  for (auto x : s.v) m.push_back(x < 0 ? -x : x);
  std::sort(m.rbegin(), m.rend());
  int d = 0;
  __int128 acc = 0;
  while (d < n) {
    acc += m[d];
    if (static_cast<__int128>(pow_sat(k + 1, d + 1)) > static_cast<__int128>(k) * acc + 1) break;
    ++d;
  }
  return d;
}

}  // namespace

DimensionBounds dim_k_exact(const GroundSet& a, int k, uint64_t budget) {
  if (k < 1) throw InvalidInput("k must be >= 1");
  DimensionBounds out;
  GroundSet a0 = a.without_zero();
  const size_t n = a0.size();
  out.witness = GroundSet(a.ambient(), {});
  if (n == 0) {
    out.exact = true;
    out.method = "empty";
    return out;
  }
  Budget bud(budget);
  Scal s = scalarize(a0, k);
  GroundSet g = max_dissociated_greedy(a0, k);
  bud.spend(pow_sat(k + 1, static_cast<int>(g.size())));
  const int lower = static_cast<int>(g.size());
  const int upper = counting_upper(s, k);
  out.lower = lower;
  out.upper = upper;
  out.witness = g;
  out.method = "greedy+counting";

  // few missing elements on a big set: hitting the relations is cheaper than
  // the subset search; small sets, or settled sizes, go straight to the search
  bool tried_rel = lower == upper;
  if (!tried_rel && n > 14 && static_cast<int>(n) - lower <= 8) {
    tried_rel = true;
    DimensionBounds r = out;
    if (dim_by_relations(a0, k, lower, upper, bud, r)) {
      r.states = bud.used;
      return r;
    }
    out.upper = std::min(out.upper, r.upper);
  }

  DimDfs dfs{s, k, bud, {}, {}, s.md, -1, {}, {}, false, 0, 0};
  dfs.global_upper = out.upper;
  dfs.top.resize(n + 1);
  for (size_t pos = n; pos-- > 0;) {
    dfs.top[pos] = dfs.top[pos + 1];
    int64_t x = s.v[pos];
    dfs.top[pos].push_back(x < 0 ? -x : x);
  }
  for (auto& t : dfs.top) std::sort(t.rbegin(), t.rend());
  // best starts one below the greedy size so the first maximum found, in
  // include-first order, is the lexicographically smallest
  dfs.best = lower - 1;
  dfs.go(0, {0}, 0);
  if (!dfs.aborted) {
    out.lower = out.upper = dfs.best;
    out.exact = true;
    out.witness = a0.subset(dfs.best_set);
    out.method = "branch_and_bound";
    out.states = bud.used;
    return out;
  }
  if (dfs.best > lower) {
    out.lower = dfs.best;
    out.witness = a0.subset(dfs.best_set);
  }
  out.upper = std::min(out.upper, std::max(out.lower, dfs.frontier));
  if (!tried_rel) {
    DimensionBounds r = out;
    Budget more(budget);
    if (dim_by_relations(a0, k, out.lower, out.upper, more, r)) {
      r.states = bud.used + more.used;
      return r;
    }
    out.upper = std::min(out.upper, r.upper);
  }
  out.exact = out.lower == out.upper;
  out.method = "branch_and_bound(budget)";
  out.states = bud.used;
  return out;
}

// ---- spans ----

namespace {

std::vector<int64_t> span_scalars(const std::vector<int64_t>& vals, int k, int64_t md, size_t cap) {
  std::vector<int64_t> cur = {0};
  for (int64_t x : vals) {
    std::vector<int64_t> steps;
    for (int c = -k; c <= k; ++c) steps.push_back(mulc(c, x, md));
    std::sort(steps.begin(), steps.end());
    steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
    cur = detail::set_sum(cur, steps, md);
    if (cur.size() > cap) throw Truncated("span exceeded cap");
  }
  return cur;
}

}  // namespace

GroundSet span_k(const GroundSet& s, int k, size_t cap) {
  if (k < 0) throw InvalidInput("k must be >= 0");
  BoxBuilder bb(s.width());
  bb.add_each(s, -k, k);
  Codec c = bb.build(s.ambient());
  std::vector<int64_t> v;
  for (size_t i = 0; i < s.size(); ++i) v.push_back(c.encode(s.at(i)));
  return c.decode_all(span_scalars(v, k, c.modulus(), cap));
}

namespace {

int ceil_log(uint64_t x, uint64_t base) {
  int d = 0;
  uint64_t p = 1;
  while (p < x) {
    p = p > UINT64_MAX / base ? UINT64_MAX : p * base;
    ++d;
  }
  return d;
}

// A in Span_k(S) through the relation list (zero already stripped)
bool d_by_relations(const GroundSet& a0, int k, int lo, int hi, Budget& bud, SpanBounds& out) {
  const size_t n = a0.size();
  if (n > 64 || k > 127) return false;
  uint64_t mid = pow_sat(2 * k + 1, static_cast<int>((n + 1) / 2));
  if (mid > bud.left() / 2) return false;
  size_t cap = std::min<uint64_t>(uint64_t{1} << 21, bud.left() / 4 + 1);
  RelationList rl = enumerate_relations(a0, k, cap, bud.left());
  bud.spend(rl.states);
  if (!rl.complete) return false;
  // per element: supports (minus the element) of relations using it with coefficient +-1
  std::vector<std::vector<uint64_t>> via(n);
  for (auto& e : rl.eps) {
    uint64_t m = mask_of(e);
    for (size_t i = 0; i < n; ++i)
      if (e[i] == 1 || e[i] == -1) via[i].push_back(m & ~(uint64_t{1} << i));
  }
  for (auto& v : via) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    std::stable_sort(v.begin(), v.end(), [](uint64_t x, uint64_t y) {
      return __builtin_popcountll(x) < __builtin_popcountll(y);
    });
  }
  // T = A \ S must be feasible: each a in T has a witness support avoiding T
  auto feasible = [&](uint64_t T) {
    for (uint64_t r = T; r; r &= r - 1) {
      int a = __builtin_ctzll(r);
      bool ok = false;
      for (uint64_t m : via[a]) {
        if (!(m & T)) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  };
  int best = -1;
  std::vector<size_t> best_s;
  bool aborted = false;
  const int tmax = static_cast<int>(n) - lo;
  // grow T in increasing index order; family is closed under subsets
  std::function<void(uint64_t, size_t, int)> go = [&](uint64_t T, size_t from, int sz) {
    if (aborted) return;
    if (!bud.spend(1 + sz)) {
      aborted = true;
      return;
    }
    if (sz >= best) {
      auto c = complement(T, n);
      if (sz > best || lex_less(c, best_s)) {
        best = sz;
        best_s = c;
      }
    }
    if (sz == tmax) return;
    for (size_t e = from; e < n; ++e) {
      if (via[e].empty()) continue;
      uint64_t T2 = T | uint64_t{1} << e;
      if (feasible(T2)) go(T2, e + 1, sz + 1);
    }
  };
  go(0, 0, 0);
  if (aborted) return false;
  (void)hi;
  out.lower = out.upper = static_cast<int>(n) - best;
  out.exact = true;
  out.witness = a0.subset(best_s);
  out.method = "relation_cover";
  return true;
}

}  // namespace

SpanBounds d_k_exact(const GroundSet& a, int k, uint64_t budget) {
  if (k < 1) throw InvalidInput("k must be >= 1");
  SpanBounds out;
  GroundSet a0 = a.without_zero();
  const size_t n = a0.size();
  out.witness = GroundSet(a.ambient(), {});
  if (n == 0) {
    out.exact = true;
    out.method = "empty";
    return out;
  }
  Budget bud(budget);
  BoxBuilder bb(a0.width());
  bb.add_each(a0, -k, k);
  Codec codec = bb.build(a0.ambient());
  std::vector<int64_t> v;
  for (size_t i = 0; i < n; ++i) v.push_back(codec.encode(a0.at(i)));
  const int64_t md = codec.modulus();

  auto spans_all = [&](const std::vector<size_t>& S) {
    std::vector<int64_t> sv;
    for (size_t i : S) sv.push_back(v[i]);
    auto sp = span_scalars(sv, k, md, SIZE_MAX);
    bud.spend(sp.size());
    for (size_t i = 0; i < n; ++i)
      if (!std::binary_search(sp.begin(), sp.end(), v[i])) return false;
    return true;
  };

  // upper: maximal dissociated set, then patch whatever it misses
  GroundSet g = max_dissociated_greedy(a0, k);
  std::vector<size_t> up;
  for (size_t i = 0; i < g.size(); ++i) up.push_back(*a0.index_of(g.at(i)));
  {
    std::vector<int64_t> sv;
    for (size_t i : up) sv.push_back(v[i]);
    auto sp = span_scalars(sv, k, md, SIZE_MAX);
    for (size_t i = 0; i < n; ++i)
      if (!std::binary_search(sp.begin(), sp.end(), v[i]) &&
          std::find(up.begin(), up.end(), i) == up.end())
        up.push_back(i);
    std::sort(up.begin(), up.end());
  }
  out.upper = static_cast<int>(up.size());
  out.witness = a0.subset(up);
  out.lower = std::max(1, ceil_log(n + 1, 2 * k + 1));
  out.lower = std::min(out.lower, out.upper);
  out.method = "greedy+counting";

  if (static_cast<int>(n) - out.upper <= 8) {
    SpanBounds r = out;
    if (d_by_relations(a0, k, out.lower, out.upper, bud, r)) {
      r.states = bud.used;
      return r;
    }
  }
  // direct search by size, subsets in lexicographic order
  for (int sz = out.lower; sz < out.upper; ++sz) {
    std::vector<size_t> S(sz);
    std::iota(S.begin(), S.end(), 0);
    while (true) {
      if (bud.exhausted()) {
        out.lower = sz;
        out.states = bud.used;
        out.method = "subset_search(budget)";
        return out;
      }
      if (spans_all(S)) {
        out.lower = out.upper = sz;
        out.exact = true;
        out.witness = a0.subset(S);
        out.method = "subset_search";
        out.states = bud.used;
        return out;
      }
      int i = sz - 1;
      while (i >= 0 && S[i] == n - sz + i) --i;
      if (i < 0) break;
      ++S[i];
      for (int j = i + 1; j < sz; ++j) S[j] = S[j - 1] + 1;
    }
  }
  out.lower = out.upper;
  out.exact = true;
  out.method = "subset_search";
  out.states = bud.used;
  return out;
}

SpanBounds d_star_bounds(const GroundSet& a, int k, uint64_t budget) {
  SpanBounds d = d_k_exact(a, k, budget);
  DimensionBounds dm = dim_k_exact(a, 1, budget);
  return d_star_from(a, k, d, dm);
}

SpanBounds d_star_from(const GroundSet& a, int k, const SpanBounds& d, const DimensionBounds& dm) {
  SpanBounds out;
  out.upper = d.upper;
  out.witness = d.witness;
  out.states = d.states + dm.states;
  GroundSet a0 = a.without_zero();
  int lo = a0.empty() ? 0 : ceil_log(a0.size() + 1, 2 * k + 1);
  // a 1-dissociated set of size m inside Span_k(S): 2^m <= (2km+1)^|S|
  if (dm.lower > 0) {
    double m = dm.lower;
    double v = m * std::log(2.0) / std::log(2.0 * k * m + 1.0);
    lo = std::max(lo, static_cast<int>(std::ceil(v - 1e-12)));
  }
  out.lower = std::min(lo, out.upper);
  out.exact = out.lower == out.upper;
  out.method = "counting+dim";
  return out;
}

GroundSet cube(const GroundSet& lam) {
  if (lam.size() > 24) throw InvalidInput("cube needs at most 24 generators");
  BoxBuilder bb(lam.width());
  bb.add_each(lam, 0, 1);
  Codec c = bb.build(lam.ambient());
  std::vector<int64_t> cur = {0};
  for (size_t i = 0; i < lam.size(); ++i)
    cur = detail::set_sum(cur, {0, c.encode(lam.at(i))}, c.modulus());
  return c.decode_all(cur);
}

bool cube_is_proper(const GroundSet& lam) {
  return cube(lam).size() == (size_t{1} << lam.size());
}

GroundSet coin_weighing_dissociated(const GroundSet& lam, int m, uint64_t seed, int trials) {
  if (m < 1) throw InvalidInput("m must be >= 1");
  Certificate c = is_k_dissociated(lam, m);
  if (c.verdict != Verdict::Dissociated)
    throw PreconditionViolation("generator set is not " + std::to_string(m) + "-dissociated");
  const size_t n = lam.size();
  if (n < 64 && static_cast<uint64_t>(m) > (uint64_t{1} << n) - 1)
    throw VerificationFailed("not enough distinct 0/1 columns for m = " + std::to_string(m));
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<uint64_t> cols;
    int guard = 0;
    while (static_cast<int>(cols.size()) < m && guard++ < 64 * m) {
      uint64_t col = 0;
      for (size_t i = 0; i < n; ++i)
        if (rng.coin(0.5)) col |= uint64_t{1} << i;
      if (col && std::find(cols.begin(), cols.end(), col) == cols.end()) cols.push_back(col);
    }
    if (static_cast<int>(cols.size()) < m) continue;
    std::vector<int64_t> flat;
    for (uint64_t col : cols) {
      std::vector<int64_t> acc(lam.width(), 0);
      for (size_t i = 0; i < n; ++i) {
        if (!(col >> i & 1)) continue;
        auto r = lam.at(i);
        for (int j = 0; j < lam.width(); ++j)
          acc[j] = lam.ambient().residues() ? mod_add(acc[j], r[j], lam.ambient().modulus)
                                            : add_ck(acc[j], r[j]);
      }
      flat.insert(flat.end(), acc.begin(), acc.end());
    }
    GroundSet S(lam.ambient(), std::move(flat));
    if (static_cast<int>(S.size()) != m) continue;
    if (is_k_dissociated(S, 1).verdict == Verdict::Dissociated) return S;
  }
  throw VerificationFailed("no dissociated column set after " + std::to_string(trials) + " trials");
}

}  // namespace adlab

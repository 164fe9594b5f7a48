#pragma once

// Brute-force reference implementations. Deliberately naive: plain loops over
// tuples and subsets, no shared code with the library beyond the BigInt type.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "adlab/common.hpp"

namespace oracle {

using V = std::vector<int64_t>;

inline int64_t md(int64_t x, int64_t n) { return n ? ((x % n) + n) % n : x; }

// all vectors in [lo, hi]^n
inline void each_vec(size_t n, int lo, int hi, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> e(n, lo);
  while (true) {
    f(e);
    size_t i = 0;
    while (i < n && e[i] == hi) e[i++] = lo;
    if (i == n) return;
    ++e[i];
  }
}

// no nonzero eps in [-k,k]^n with sum eps_i x_i = 0 (mod n if given)
inline bool dissociated(const V& x, int k, int64_t mod = 0) {
  bool ok = true;
  each_vec(x.size(), -k, k, [&](const std::vector<int>& e) {
    if (!ok) return;
    bool nz = false;
    __int128 s = 0;
    for (size_t i = 0; i < x.size(); ++i) {
      nz = nz || e[i] != 0;
      s += static_cast<__int128>(e[i]) * x[i];
    }
    if (mod) s %= mod;
    if (nz && s == 0) ok = false;
  });
  return ok;
}

inline V subset(const V& a, uint64_t mask) {
  V s;
  for (size_t i = 0; i < a.size(); ++i)
    if (mask >> i & 1) s.push_back(a[i]);
  return s;
}

// largest k-dissociated subset of a (zero never counts)
inline int dim(const V& a, int k, int64_t mod = 0) {
  V nz;
  for (auto x : a)
    if (md(x, mod) != 0) nz.push_back(x);
  int best = 0;
  for (uint64_t m = 0; m < (uint64_t{1} << nz.size()); ++m) {
    int c = __builtin_popcountll(m);
    if (c <= best) continue;
    if (dissociated(subset(nz, m), k, mod)) best = c;
  }
  return best;
}

inline std::set<int64_t> span(const V& s, int k, int64_t mod = 0) {
  std::set<int64_t> out;
  each_vec(s.size(), -k, k, [&](const std::vector<int>& e) {
    int64_t t = 0;
    for (size_t i = 0; i < s.size(); ++i) t += e[i] * s[i];
    out.insert(md(t, mod));
  });
  return out;
}

// smallest S inside a with a in Span_k(S)
inline int d_k(const V& a, int k) {
  V nz;
  for (auto x : a)
    if (x) nz.push_back(x);
  for (int sz = 0; sz <= static_cast<int>(nz.size()); ++sz)
    for (uint64_t m = 0; m < (uint64_t{1} << nz.size()); ++m) {
      if (__builtin_popcountll(m) != sz) continue;
      auto sp = span(subset(nz, m), k);
      if (std::all_of(nz.begin(), nz.end(), [&](int64_t x) { return sp.count(x); })) return sz;
    }
  return static_cast<int>(nz.size());
}

// #{(a_1..a_2k) : a_1+..+a_k = a_{k+1}+..+a_2k}, all 2k-tuples enumerated
inline adlab::BigInt energy(const V& a, int k, int64_t mod = 0) {
  const size_t n = a.size();
  adlab::BigInt cnt = 0;
  std::vector<size_t> idx(2 * k, 0);
  if (n == 0) return 0;
  while (true) {
    int64_t l = 0, r = 0;
    for (int i = 0; i < k; ++i) l += a[idx[i]];
    for (int i = k; i < 2 * k; ++i) r += a[idx[i]];
    if (md(l - r, mod) == 0) ++cnt;
    size_t i = 0;
    while (i < idx.size() && idx[i] == n - 1) idx[i++] = 0;
    if (i == idx.size()) break;
    ++idx[i];
  }
  return cnt;
}

// same with products, positive integers
inline adlab::BigInt mult_energy(const V& a, int k) {
  const size_t n = a.size();
  adlab::BigInt cnt = 0;
  std::vector<size_t> idx(2 * k, 0);
  while (true) {
    adlab::BigInt l = 1, r = 1;
    for (int i = 0; i < k; ++i) l *= a[idx[i]];
    for (int i = k; i < 2 * k; ++i) r *= a[idx[i]];
    if (l == r) ++cnt;
    size_t i = 0;
    while (i < idx.size() && idx[i] == n - 1) idx[i++] = 0;
    if (i == idx.size()) break;
    ++idx[i];
  }
  return cnt;
}

// x_1+..+x_k = x_{k+1}+..+x_2k with x_j from sets[j]
inline adlab::BigInt mixed_energy(const std::vector<V>& sets) {
  const size_t m = sets.size(), k = m / 2;
  for (const auto& s : sets)
    if (s.empty()) return 0;
  adlab::BigInt cnt = 0;
  std::vector<size_t> idx(m, 0);
  while (true) {
    int64_t t = 0;
    for (size_t j = 0; j < m; ++j) t += (j < k ? 1 : -1) * sets[j][idx[j]];
    if (t == 0) ++cnt;
    size_t j = 0;
    while (j < m && idx[j] == sets[j].size() - 1) idx[j++] = 0;
    if (j == m) break;
    ++idx[j];
  }
  return cnt;
}

// nA - mA by nested loops
inline std::set<int64_t> sumset(const V& a, int n, int m, int64_t mod = 0) {
  std::set<int64_t> cur{0};
  for (int i = 0; i < n + m; ++i) {
    std::set<int64_t> nxt;
    for (auto c : cur)
      for (auto x : a) nxt.insert(md(c + (i < n ? x : -x), mod));
    cur = nxt;
  }
  return cur;
}

// largest n with every x/y (x, y <= n) among d/d', d, d' in A-A, d' != 0
inline int64_t ratio_box(const V& a) {
  std::set<std::pair<int64_t, int64_t>> q;
  std::vector<int64_t> d;
  for (auto x : a)
    for (auto y : a)
      if (x > y) d.push_back(x - y);
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  for (auto x : d)
    for (auto y : d) {
      int64_t g = std::gcd(x, y);
      q.insert({x / g, y / g});
    }
  if (d.empty()) return 0;
  int64_t n = 0;
  while (true) {
    int64_t m = n + 1;
    bool ok = true;
    for (int64_t x = 1; x <= m && ok; ++x)
      for (int64_t y = 1; y <= m && ok; ++y) {
        if (x != m && y != m) continue;
        int64_t g = std::gcd(x, y);
        ok = q.count({x / g, y / g}) > 0;
      }
    if (!ok) return n;
    n = m;
  }
}

// min over q of sum ||q a / N||^s, exact for integer s
inline adlab::Rational dirichlet(const V& a, int64_t N, int s) {
  adlab::Rational best = -1;
  for (int64_t q = 1; q < N; ++q) {
    adlab::Rational t = 0;
    for (auto x : a) {
      int64_t r = md(q * x, N);
      int64_t dist = std::min(r, N - r);
      adlab::Rational f{adlab::BigInt(dist), adlab::BigInt(N)};
      adlab::Rational p = 1;
      for (int i = 0; i < s; ++i) p *= f;
      t += p;
    }
    if (best < 0 || t < best) best = t;
  }
  return best;
}

// max over r != 0 of |sum_a e(a r / N)| by direct summation
inline double fourier_max(const V& a, int64_t N) {
  double best = 0;
  for (int64_t r = 1; r < N; ++r) {
    std::complex<double> z = 0;
    for (auto x : a) z += std::polar(1.0, 2 * M_PI * static_cast<double>(md(x * r, N)) / N);
    best = std::max(best, std::abs(z));
  }
  return best;
}

// every multiset of h elements has a distinct sum (product)
inline bool sidon(const V& b, int h, bool mul) {
  std::set<adlab::BigInt> seen;
  std::vector<size_t> idx(h, 0);
  if (b.empty()) return true;
  const size_t n = b.size();
  while (true) {
    bool sorted = std::is_sorted(idx.begin(), idx.end());
    if (sorted) {
      adlab::BigInt v = mul ? 1 : 0;
      for (auto i : idx) {
        if (mul)
          v *= b[i];
        else
          v += b[i];
      }
      if (!seen.insert(v).second) return false;
    }
    size_t i = 0;
    while (i < idx.size() && idx[i] == n - 1) idx[i++] = 0;
    if (i == idx.size()) break;
    ++idx[i];
  }
  return true;
}

inline size_t max_sidon(const V& a, int h, bool mul) {
  size_t best = 0;
  for (uint64_t m = 0; m < (uint64_t{1} << a.size()); ++m) {
    size_t c = __builtin_popcountll(m);
    if (c > best && sidon(subset(a, m), h, mul)) best = c;
  }
  return best;
}

// f is a 2-isomorphism of src onto its image mod m
inline bool iso2(const V& src, const V& img, int64_t m) {
  const size_t n = src.size();
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c)
        for (size_t d = 0; d < n; ++d) {
          bool z = src[a] + src[b] == src[c] + src[d];
          bool r = md(img[a] + img[b] - img[c] - img[d], m) == 0;
          if (z != r) return false;
        }
  return true;
}

}  // namespace oracle

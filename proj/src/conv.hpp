#pragma once
// Scalar convolution engine. Keys are encoded group elements (see Codec);
// modulus 0 means Z. Callers make sure every partial sum fits the codec box,
// so plain int64 adds are safe here.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <vector>

#include "adlab/common.hpp"

namespace adlab::detail {

template <class C>
struct Dist {
  std::vector<int64_t> key;  // sorted
  std::vector<C> cnt;
};

inline constexpr int64_t kDenseLimit = int64_t{1} << 22;

// runs of (r.key + a) in sorted order; two runs per shift mod n
struct Run {
  int64_t add;
  size_t pos, end;
};

inline void make_runs(const std::vector<int64_t>& keys, const std::vector<int64_t>& shifts,
                      int64_t modulus, std::vector<Run>& runs) {
  runs.clear();
  for (int64_t a : shifts) {
    if (modulus == 0) {
      runs.push_back({a, 0, keys.size()});
    } else {
      // keys >= n - a wrap to the front
      size_t cut = std::lower_bound(keys.begin(), keys.end(), modulus - a) - keys.begin();
      if (cut < keys.size()) runs.push_back({a - modulus, cut, keys.size()});
      if (cut > 0) runs.push_back({a, 0, cut});
    }
  }
}

template <class C>
Dist<C> convolve(const Dist<C>& r, const std::vector<int64_t>& s, int64_t modulus) {
  Dist<C> out;
  if (r.key.empty() || s.empty()) return out;
  const double work = static_cast<double>(r.key.size()) * static_cast<double>(s.size());
  int64_t lo, range;
  if (modulus) {
    lo = 0;
    range = modulus;
  } else {
    lo = r.key.front() + s.front();
    range = r.key.back() + s.back() - lo + 1;
  }
  if (range <= kDenseLimit && static_cast<double>(range) <= 16.0 * work + 64) {
    std::vector<C> dense(static_cast<size_t>(range));
    std::vector<char> hit(static_cast<size_t>(range), 0);
    for (int64_t a : s) {
      for (size_t i = 0; i < r.key.size(); ++i) {
        int64_t x = r.key[i] + a;
        if (modulus && x >= modulus) x -= modulus;
        size_t j = static_cast<size_t>(x - lo);
        dense[j] += r.cnt[i];
        hit[j] = 1;
      }
    }
    for (int64_t j = 0; j < range; ++j) {
      if (hit[static_cast<size_t>(j)]) {
        out.key.push_back(lo + j);
        out.cnt.push_back(std::move(dense[static_cast<size_t>(j)]));
      }
    }
    return out;
  }
  std::vector<Run> runs;
  make_runs(r.key, s, modulus, runs);
  using Item = std::pair<int64_t, size_t>;  // value, run index
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  for (size_t i = 0; i < runs.size(); ++i)
    pq.push({r.key[runs[i].pos] + runs[i].add, i});
  while (!pq.empty()) {
    auto [v, i] = pq.top();
    pq.pop();
    Run& run = runs[i];
    if (!out.key.empty() && out.key.back() == v) {
      out.cnt.back() += r.cnt[run.pos];
    } else {
      out.key.push_back(v);
      out.cnt.push_back(r.cnt[run.pos]);
    }
    if (++run.pos < run.end) pq.push({r.key[run.pos] + run.add, i});
  }
  return out;
}

// plain set version
inline std::vector<int64_t> set_sum(const std::vector<int64_t>& x, const std::vector<int64_t>& y,
                                    int64_t modulus) {
  std::vector<int64_t> out;
  if (x.empty() || y.empty()) return out;
  int64_t lo, range;
  if (modulus) {
    lo = 0;
    range = modulus;
  } else {
    lo = x.front() + y.front();
    range = x.back() + y.back() - lo + 1;
  }
  const double work = static_cast<double>(x.size()) * static_cast<double>(y.size());
  if (range <= (int64_t{1} << 26) && static_cast<double>(range) <= 64.0 * work + 64) {
    std::vector<bool> bits(static_cast<size_t>(range));
    for (int64_t b : y)
      for (int64_t a : x) {
        int64_t v = a + b;
        if (modulus && v >= modulus) v -= modulus;
        bits[static_cast<size_t>(v - lo)] = true;
      }
    for (int64_t j = 0; j < range; ++j)
      if (bits[static_cast<size_t>(j)]) out.push_back(lo + j);
    return out;
  }
  if (work <= static_cast<double>(int64_t{1} << 25)) {
    out.reserve(static_cast<size_t>(work));
    for (int64_t b : y)
      for (int64_t a : x) {
        int64_t v = a + b;
        if (modulus && v >= modulus) v -= modulus;
        out.push_back(v);
      }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  std::vector<Run> runs;
  make_runs(x, y, modulus, runs);
  using Item = std::pair<int64_t, size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  for (size_t i = 0; i < runs.size(); ++i) pq.push({x[runs[i].pos] + runs[i].add, i});
  while (!pq.empty()) {
    auto [v, i] = pq.top();
    pq.pop();
    if (out.empty() || out.back() != v) out.push_back(v);
    Run& run = runs[i];
    if (++run.pos < run.end) pq.push({x[run.pos] + run.add, i});
  }
  return out;
}

inline std::vector<int64_t> negated_sorted(const std::vector<int64_t>& x, int64_t modulus) {
  std::vector<int64_t> out(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    int64_t v = -x[i];
    if (modulus && v < 0) v += modulus;
    out[i] = v;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool fits_u64_mass(const std::vector<size_t>& sizes) {
  unsigned __int128 m = 1;
  for (size_t s : sizes) {
    m *= s;
    if (m >= (static_cast<unsigned __int128>(1) << 63)) return false;
  }
  return true;
}

inline BigInt to_big(uint64_t x) { return BigInt(x); }
inline BigInt to_big(const BigInt& x) { return x; }

inline BigInt u128_to_big(unsigned __int128 v) {
  BigInt hi = static_cast<uint64_t>(v >> 64);
  return (hi << 64) + BigInt(static_cast<uint64_t>(v));
}

// sum of r(x) * s(x) over common keys
template <class C>
BigInt inner(const Dist<C>& a, const Dist<C>& b) {
  BigInt acc = 0;
  unsigned __int128 small = 0;
  size_t i = 0, j = 0;
  while (i < a.key.size() && j < b.key.size()) {
    if (a.key[i] < b.key[j]) {
      ++i;
    } else if (b.key[j] < a.key[i]) {
      ++j;
    } else {
      if constexpr (std::is_same_v<C, uint64_t>) {
        unsigned __int128 p = static_cast<unsigned __int128>(a.cnt[i]) * b.cnt[j];
        if (small + p < small) {
          acc += u128_to_big(small);
          small = 0;
        }
        small += p;
      } else {
        acc += a.cnt[i] * b.cnt[j];
      }
      ++i;
      ++j;
    }
  }
  return acc + u128_to_big(small);
}

}  // namespace adlab::detail

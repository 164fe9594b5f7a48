#include "adlab/energy.hpp"

#include <algorithm>
#include <cmath>

#include "adlab/decompose.hpp"
#include "adlab/dissociation.hpp"
#include "adlab/modular.hpp"
#include "conv.hpp"

namespace adlab {

Op parse_op(const std::string& s) {
  if (s == "add" || s == "+") return Op::Add;
  if (s == "mul" || s == "*" || s == "x") return Op::Mul;
  throw InvalidInput("op must be add or mul");
}

const char* op_name(Op op) { return op == Op::Add ? "add" : "mul"; }

namespace {

std::vector<int64_t> log_table(int64_t p) {
  if (!is_prime(p)) throw Unsupported("multiplicative view mod a composite");
  if (p > (int64_t{1} << 26)) throw Unsupported("multiplicative view: modulus too large for a log table");
  int64_t g = primitive_root(p);
  std::vector<int64_t> lg(p, -1);
  int64_t x = 1;
  for (int64_t e = 0; e < p - 1; ++e) {
    lg[x] = e;
    x = mod_mul(x, g, p);
  }
  return lg;
}

}  // namespace

GroundSet mult_view(const GroundSet& a) {
  if (a.ambient().residues()) {
    const int64_t p = a.ambient().modulus;
    auto lg = log_table(p);
    std::vector<int64_t> out;
    for (int64_t v : a.flat()) {
      if (v == 0) throw InvalidInput("zero has no multiplicative image");
      out.push_back(lg[v]);
    }
    return GroundSet::residues(p - 1, std::move(out));
  }
  return mult_embed(a).vectors;
}

GroundSet view(const GroundSet& a, Op op) { return op == Op::Add ? a : mult_view(a); }

std::vector<std::vector<int64_t>> element_images(const GroundSet& a, Op op) {
  std::vector<std::vector<int64_t>> out;
  if (op == Op::Add) {
    for (size_t i = 0; i < a.size(); ++i) out.emplace_back(a.at(i).begin(), a.at(i).end());
    return out;
  }
  if (a.ambient().residues()) {
    auto lg = log_table(a.ambient().modulus);
    for (size_t i = 0; i < a.size(); ++i) {
      if (a.scalar(i) == 0) throw InvalidInput("zero has no multiplicative image");
      out.push_back({lg[a.scalar(i)]});
    }
    return out;
  }
  MultEmbedding me = mult_embed(a);
  out.resize(a.size());
  for (size_t j = 0; j < me.vectors.size(); ++j) {
    size_t i = *a.index_of(std::span<const int64_t>(&me.source[j], 1));
    out[i].assign(me.vectors.at(j).begin(), me.vectors.at(j).end());
  }
  return out;
}

GroundSet view_preimage(const GroundSet& a, const GroundSet& img, Op op) {
  if (op == Op::Add) return img;
  auto im = element_images(a, op);
  std::vector<size_t> idx;
  for (size_t i = 0; i < a.size(); ++i)
    if (img.contains(im[i])) idx.push_back(i);
  return a.subset(idx);
}

BigInt t_k(const GroundSet& a, int k, Op op) {
  if (k < 1) throw InvalidInput("k must be >= 1");
  if (a.empty()) return 0;
  GroundSet v = view(a, op);
  return rep_fn_k(v, k).sum_squares();
}

BigInt additive_energy(const GroundSet& a, const GroundSet& b) {
  require_same_ambient(a, b);
  if (a.empty() || b.empty()) return 0;
  return rep_fn_diff(a, b).sum_squares();
}

BigInt t_k_multi(const std::vector<GroundSet>& sets) {
  if (sets.empty() || sets.size() % 2) throw InvalidInput("t_k_multi needs 2k sets");
  const size_t k = sets.size() / 2;
  for (auto& s : sets) {
    require_same_ambient(s, sets[0]);
    if (s.empty()) return 0;
  }
  // one codec covering both halves so keys are comparable
  std::vector<std::pair<const GroundSet*, int64_t>> terms;
  for (size_t i = 0; i < k; ++i) terms.push_back({&sets[i], 1});
  BoxBuilder bb(sets[0].width());
  for (size_t i = 0; i < 2 * k; ++i) bb.add_set(sets[i], 0, 1);
  Codec c = bb.build(sets[0].ambient());
  std::vector<size_t> sizes;
  for (size_t i = 0; i < k; ++i) sizes.push_back(sets[i].size());
  std::vector<size_t> sizes2;
  for (size_t i = k; i < 2 * k; ++i) sizes2.push_back(sets[i].size());
  auto run = [&](auto tag) {
    using C = decltype(tag);
    detail::Dist<C> l{{0}, {C(1)}}, r{{0}, {C(1)}};
    for (size_t i = 0; i < k; ++i) l = detail::convolve(l, c.encode_all(sets[i]), c.modulus());
    for (size_t i = k; i < 2 * k; ++i) r = detail::convolve(r, c.encode_all(sets[i]), c.modulus());
    return detail::inner(l, r);
  };
  if (detail::fits_u64_mass(sizes) && detail::fits_u64_mass(sizes2)) return run(uint64_t{});
  return run(BigInt{});
}

Rational rudin_ratio(const GroundSet& lam, int k) {
  if (k < 1) throw InvalidInput("k must be >= 1");
  if (lam.empty()) throw EmptySet("rudin_ratio of the empty set");
  if (is_k_dissociated(lam, 1).verdict != Verdict::Dissociated)
    throw NotDissociated("rudin_ratio needs a dissociated set");
  BigInt den = ipow(BigInt(k), k) * ipow(BigInt(lam.size()), k);
  return Rational(t_k(lam, k), den);
}

namespace {

// T_k of every subset of a small scalar set, by dense convolution
std::vector<BigInt> all_subset_energies(const GroundSet& v, int k) {
  BoxBuilder bb(v.width());
  bb.add_set(v, 0, k);
  Codec c = bb.build(v.ambient());
  std::vector<int64_t> x;
  for (size_t i = 0; i < v.size(); ++i) x.push_back(c.encode(v.at(i)));
  const size_t n = x.size();
  std::vector<BigInt> out(size_t{1} << n);
  for (uint64_t m = 1; m < (uint64_t{1} << n); ++m) {
    std::vector<int64_t> s;
    for (size_t i = 0; i < n; ++i)
      if (m >> i & 1) s.push_back(x[i]);
    std::sort(s.begin(), s.end());
    detail::Dist<uint64_t> d{{0}, {1}};
    for (int j = 0; j < k; ++j) d = detail::convolve(d, s, c.modulus());
    unsigned __int128 acc = 0;
    for (auto q : d.cnt) acc += static_cast<unsigned __int128>(q) * q;
    out[m] = detail::u128_to_big(acc);
  }
  return out;
}

int ceil_log3(const BigInt& x) {
  int d = 0;
  BigInt p = 1;
  while (p < x) {
    p *= 3;
    ++d;
  }
  return d;
}

}  // namespace

DimAlphaResult dim_alpha_k(const GroundSet& a, const Rational& alpha, int k, Op op, uint64_t budget) {
  if (alpha <= 0 || alpha > 1) throw InvalidInput("alpha must lie in (0, 1]");
  if (k < 1) throw InvalidInput("k must be >= 1");
  if (a.empty()) throw EmptySet("dim_alpha_k of the empty set");
  GroundSet v = view(a, op);
  const BigInt total = t_k(v, k);
  const Rational need = alpha * Rational(total);
  DimAlphaResult out;
  const size_t n = v.size();
  if (n <= 16) {
    auto en = all_subset_energies(v, k);
    const uint64_t full = (uint64_t{1} << n) - 1;
    auto ok = [&](uint64_t m) { return Rational(en[m]) >= need; };
    int best = -1;
    uint64_t best_m = 0;
    for (uint64_t m = 1; m <= full; ++m) {
      if (!ok(m)) continue;
      bool minimal = true;
      for (uint64_t r = m; r; r &= r - 1) {
        uint64_t sub = m & ~(r & -r);
        if (sub && ok(sub)) {
          minimal = false;
          break;
        }
      }
      if (!minimal) continue;
      DimensionBounds d = dim_k_exact(v.from_mask(m), 1, budget);
      if (!d.exact) throw BudgetExceeded("dim of a subset exceeded the budget");
      if (best < 0 || d.upper < best) {
        best = d.upper;
        best_m = m;
      }
    }
    out.lower = out.upper = best;
    out.exact = true;
    out.method = "exhaustive";
    out.witness = view_preimage(a, v.from_mask(best_m), op);
    return out;
  }
  // large sets: peel dissociated blocks of size l; once the remainder keeps
  // alpha of the energy its dimension (< l) bounds dim_alpha from above
  BigInt lb = 0;
  {
    // |B|^(2k-1) >= T_k(B) >= need, and |B| <= 3^dim(B)
    long double t = std::pow(static_cast<long double>(to_ld(need)), 1.0L / (2 * k - 1));
    lb = BigInt(static_cast<long long>(std::ceil(t - 1e-9L)));
  }
  out.lower = ceil_log3(lb);
  DimensionBounds whole = dim_k_exact(v, 1, budget);
  out.upper = whole.upper;
  out.witness = v;
  out.method = "peeling";
  for (int l = std::max(1, out.lower); l < whole.upper; ++l) {
    PeelingResult pr = dissociated_peeling(v, l, budget);
    if (pr.remainder.empty()) continue;
    if (Rational(t_k(pr.remainder, k)) >= need) {
      DimensionBounds d = dim_k_exact(pr.remainder, 1, budget);
      if (d.upper < out.upper) {
        out.upper = d.upper;
        out.witness = pr.remainder;
      }
      break;
    }
  }
  out.exact = out.lower == out.upper;
  out.witness = view_preimage(a, out.witness, op);
  return out;
}

}  // namespace adlab

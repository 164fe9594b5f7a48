#include "adlab/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "adlab/dissociation.hpp"
#include "adlab/growth.hpp"

namespace adlab {

// peeling -----------------------------------------------------------------------

PeelingResult dissociated_peeling(const GroundSet& a, int l, uint64_t budget) {
  if (l < 1) throw InvalidInput("l must be >= 1");
  PeelingResult out;
  out.l = l;
  GroundSet rest = a;
  Budget bud(budget);
  for (;;) {
    GroundSet g = max_dissociated_greedy(rest, 1);
    GroundSet block;
    if (static_cast<int>(g.size()) >= l) {
      block = g;
    } else {
      DimensionBounds d = dim_k_exact(rest, 1, bud.left());
      bud.spend(d.states);
      if (d.lower >= l) {
        block = d.witness;
      } else {
        out.certified = d.upper < l;
        out.remainder = rest;
        break;
      }
    }
    // the l largest (greedy's magnitude order); any subset stays dissociated
    std::vector<size_t> idx(block.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    auto mag = [&](size_t i) {
      int64_t best = 0;
      for (int64_t v : block.at(i)) {
        if (block.ambient().residues() && v > block.ambient().modulus / 2) v -= block.ambient().modulus;
        best = std::max(best, v < 0 ? -v : v);
      }
      return best;
    };
    std::stable_sort(idx.begin(), idx.end(), [&](size_t x, size_t y) { return mag(x) > mag(y); });
    idx.resize(static_cast<size_t>(l));
    std::sort(idx.begin(), idx.end());
    GroundSet chosen = block.subset(idx);
    if (is_k_dissociated(chosen, 1).verdict != Verdict::Dissociated)
      throw VerificationFailed("peeled block is not dissociated");
    out.blocks.push_back(chosen);
    rest = set_difference(rest, chosen);
  }
  return out;
}

// level sets --------------------------------------------------------------------

std::vector<Level> level_set(const RepFn& r) {
  std::vector<Level> out;
  if (r.support.empty()) return out;
  // band index b: b = 0 for r = 1, else smallest b with r <= 2^b
  std::vector<std::vector<size_t>> bands;
  for (size_t i = 0; i < r.counts.size(); ++i) {
    const BigInt& c = r.counts[i];
    size_t b = 0;
    if (c > 1) b = static_cast<size_t>(boost::multiprecision::msb(BigInt(c - 1))) + 1;
    if (bands.size() <= b) bands.resize(b + 1);
    bands[b].push_back(i);
  }
  for (size_t b = 0; b < bands.size(); ++b) {
    if (bands[b].empty()) continue;
    Level lv;
    lv.hi = BigInt(1) << b;
    lv.lo = b == 0 ? BigInt(0) : BigInt(1) << (b - 1);
    lv.keys = r.support.subset(bands[b]);
    out.push_back(std::move(lv));
  }
  return out;
}

// BSG ---------------------------------------------------------------------------

namespace {

Rational ratio(size_t x, size_t y) { return Rational(BigInt(x), BigInt(y)); }

// popular-difference graph on P; H = neighbourhood of a max-degree vertex
GroundSet symmetric_bsg(const GroundSet& p, const Rational& threshold) {
  RepFn d = rep_fn_diff(p, p);
  const size_t n = p.size(), w = static_cast<size_t>(p.width());
  std::vector<int64_t> diff(w);
  size_t best = 0, best_deg = 0;
  std::vector<std::vector<size_t>> nbr(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      auto x = p.at(i), y = p.at(j);
      for (size_t c = 0; c < w; ++c) {
        if (p.ambient().residues())
          diff[c] = mod_norm(x[c] - y[c], p.ambient().modulus);
        else
          diff[c] = x[c] - y[c];
      }
      if (Rational(d.at(diff)) >= threshold) nbr[i].push_back(j);
    }
    if (nbr[i].size() > best_deg) {
      best_deg = nbr[i].size();
      best = i;
    }
  }
  return p.subset(nbr[best]);
}

}  // namespace

BsgResult bsg_asymmetric(const GroundSet& a, const GroundSet& b, const Rational& k_target, int l, uint64_t budget,
                         bool relax_sizes) {
  require_same_ambient(a, b);
  if (a.empty() || b.empty()) throw EmptySet("BSG on an empty set");
  if (l < 1) throw InvalidInput("l must be >= 1");
  if (k_target <= 0) throw InvalidInput("K must be positive");
  if (!relax_sizes && a.size() < b.size()) throw PreconditionViolation("BSG wants |A| >= |B|");
  (void)budget;
  BsgResult out;
  const BigInt A = a.size(), B = b.size();
  out.energy = additive_energy(a, b);
  if (Rational(out.energy) < Rational(A * B * B) / k_target)
    throw PreconditionViolation("E(A,B) = " + to_dec(out.energy) + " is below |A||B|^2/K");
  out.K = Rational(A * B * B, out.energy);
  const double Kd = static_cast<double>(to_ld(k_target));
  out.M = std::pow(static_cast<double>(a.size()) / b.size(), 1.0 / l) * std::pow(Kd, std::pow(2.0, l) / l);

  // Hoelder index: first j with T_{2^j} >= |B|^{2^j} T_{2^{j-1}} / M, else the best ratio
  std::vector<BigInt> T(static_cast<size_t>(l) + 1);
  T[0] = B;  // T_1
  for (int j = 1; j <= l; ++j) T[j] = t_k(b, 1 << j);
  int pick = 0;
  long double best_ratio = -1;
  for (int j = 1; j <= l; ++j) {
    long double lhs = to_ld(T[j]);
    long double rhs = std::pow(static_cast<long double>(b.size()), 1 << j) * to_ld(T[j - 1]);
    long double q = lhs / rhs;
    if (q * out.M >= 1) {
      pick = j;
      break;
    }
    if (q > best_ratio) {
      best_ratio = q;
      pick = j;
    }
  }
  out.j = pick;

  // level set of r_{2^{j-1} B}: the band maximising Delta^4 E(P)
  RepFn r = rep_fn_k(b, 1 << (pick - 1));
  auto levels = level_set(r);
  size_t li = 0;
  BigInt best_w = -1;
  std::vector<BigInt> eps(levels.size());
  for (size_t i = 0; i < levels.size(); ++i) {
    eps[i] = additive_energy(levels[i].keys, levels[i].keys);
    BigInt delta = levels[i].lo == 0 ? BigInt(1) : levels[i].lo;
    BigInt w = delta * delta * delta * delta * eps[i];
    if (w > best_w) {
      best_w = w;
      li = i;
    }
  }
  const GroundSet& P = levels[li].keys;
  out.delta = levels[li].lo;
  out.level_size = P.size();
  out.energy_P = eps[li];
  // popular differences: r_{P-P}(d) >= |P| / (2 K_P), K_P = |P|^3 / E(P)
  const BigInt Pn = P.size();
  out.threshold = Rational(out.energy_P, 2 * Pn * Pn);
  out.H = symmetric_bsg(P, out.threshold);

  // x maximising |B cap (H+x)| = r_{B-H}(x); smallest x on ties
  RepFn bh = rep_fn_diff(b, out.H);
  size_t arg = 0;
  for (size_t i = 1; i < bh.counts.size(); ++i)
    if (bh.counts[i] > bh.counts[arg]) arg = i;
  out.x.assign(bh.support.at(arg).begin(), bh.support.at(arg).end());
  out.intersection = static_cast<size_t>(bh.counts[arg]);
  out.hh_size = sumset(out.H, out.H).size();
  out.doubling = ratio(out.hh_size, out.H.size());
  out.trivial_ratio = ratio(sumset(a, a).size(), a.size());
  out.nontrivial = out.doubling < out.trivial_ratio && out.intersection > 1;
  return out;
}

// beta decomposition ------------------------------------------------------------

BetaDecomposition beta_decomposition(const GroundSet& a, int k, const Rational& K_in, uint64_t budget) {
  if (a.empty()) throw EmptySet("beta decomposition of the empty set");
  if (k < 2) throw InvalidInput("k must be >= 2");
  BetaDecomposition out;
  const BigInt n = a.size();
  out.T.push_back(1);
  for (int j = 1; j <= k; ++j) out.T.push_back(t_k(a, j));
  Rational K = K_in;
  if (K <= 0) {
    // T_k = |A|^(2k-1) K^(1-k)
    long double base = to_ld(Rational(ipow(n, 2 * k - 1), out.T[k]));
    long double kv = std::pow(base, 1.0L / (k - 1));
    // rationalise with a fixed denominator so reruns agree bit for bit
    BigInt num_ = BigInt(static_cast<long long>(std::ceil(kv * 1000000.0L)));
    K = Rational(num_, 1000000);
    if (K < 1) K = 1;
  }
  out.K = K;
  // largest j with T_j >= |A|^2 T_{j-1} / K
  for (int j = k; j >= 1; --j)
    if (Rational(out.T[j]) * K >= Rational(n * n * out.T[j - 1])) {
      out.j = j;
      break;
    }
  if (out.j < 2) {
    out.a_star = a;
    out.note = out.j == 1 ? "chain test fired only at j=1; A* = A" : "chain test never fired; A* = A";
    out.j = 0;
  } else {
    RepFn r = rep_fn_k(a, out.j - 1);
    auto levels = level_set(r);
    // band maximising Delta^2 E(P, A)
    size_t li = 0;
    BigInt best = -1;
    for (size_t i = 0; i < levels.size(); ++i) {
      BigInt delta = levels[i].lo == 0 ? BigInt(1) : levels[i].lo;
      BigInt w = delta * delta * additive_energy(levels[i].keys, a);
      if (w > best) {
        best = w;
        li = i;
      }
    }
    const GroundSet& P = levels[li].keys;
    BigInt e = additive_energy(P, a);
    Rational kstar(BigInt(P.size()) * n * n, e);
    int l = std::max(1, static_cast<int>(std::floor(std::log2(static_cast<double>(k)))));
    BsgResult bs = bsg_asymmetric(P, a, kstar, l, budget, true);
    GroundSet shifted = translate(bs.H, std::span<const int64_t>(bs.x));
    out.a_star = set_intersection(a, shifted);
    out.bsg = std::move(bs);
    if (out.a_star.empty()) {
      // cannot happen: x was chosen from B - H
      throw VerificationFailed("empty A* after BSG");
    }
  }
  if (!a.ambient().residues() && a.width() == 1) {
    auto v = out.a_star.scalars();
    int64_t L = std::max<int64_t>(1, 2 * (v.back() - v.front()));
    out.beta_upper = beta_hat(out.a_star, std::min<int64_t>(L, 1 << 16)).upper;
  } else {
    out.beta_upper = beta_hat(out.a_star, 0).upper;
  }
  return out;
}

// dec_tk ------------------------------------------------------------------------

Rational dec_default_K(size_t n, int s) {
  if (s < 2) throw InvalidInput("s must be >= 2");
  const double ls = std::log2(static_cast<double>(s));
  const double lls = std::max(1.0, std::log2(std::max(ls, 1.0)));
  const double delta = 1.0 + 0.5 * std::sqrt(ls / lls);
  const double K = std::pow(static_cast<double>(n), (delta - 1.0) / (s - 1));
  BigInt num_ = BigInt(static_cast<long long>(std::ceil(K * 1000000.0)));
  return Rational(num_, 1000000);
}

DecompositionResult dec_tk(const GroundSet& a, int s, int q, const Rational& K_in, int max_iter, uint64_t budget) {
  require_scalar_z(a, "dec_tk");
  if (s < 2 || q < 2) throw InvalidInput("s and q must be >= 2");
  if (a.empty()) throw EmptySet("dec_tk of the empty set");
  for (int64_t x : a.scalars())
    if (x <= 0) throw InvalidInput("dec_tk needs positive integers");
  DecompositionResult out;
  out.s = s;
  out.q = q;
  const size_t n = a.size();
  out.K = K_in > 0 ? K_in : dec_default_K(n, s);
  // threshold |A|^(2s-1) K^(1-s), exact
  out.threshold = Rational(ipow(BigInt(n), 2 * s - 1)) / rpow(out.K, static_cast<unsigned>(s - 1));
  {
    const double L = std::log(static_cast<double>(n));
    const double ll = std::log(std::max(L, 1.0 + 1e-9)), lll = std::log(std::max(ll, 1.0 + 1e-9));
    const double cap = L / std::sqrt(std::max(ll * lll, 1e-9));
    if (s > cap) out.warning = "s exceeds log|A| / sqrt(loglog|A| logloglog|A|) = " + std::to_string(cap);
  }
  GroundSet C = a, B = GroundSet(a.ambient(), {});
  int iter = 0;
  for (;;) {
    BigInt tc = C.empty() ? BigInt(0) : t_k(C, s, Op::Mul);
    if (Rational(tc) <= out.threshold) break;
    if (iter >= max_iter) {
      out.max_iter_hit = true;
      break;
    }
    DecIteration it;
    it.c_size = C.size();
    it.ts_mul_c = tc;
    BetaDecomposition bd = beta_decomposition(mult_view(C), s, out.K, budget);
    GroundSet D = view_preimage(C, bd.a_star, Op::Mul);
    if (D.empty()) throw VerificationFailed("empty piece in dec_tk");
    it.d_size = D.size();
    it.j = bd.j;
    it.note = bd.note;
    it.tq_add_d = t_k(D, q);
    it.small_piece = static_cast<double>(D.size()) < std::sqrt(static_cast<double>(n));
    out.iterations.push_back(it);
    B = set_union(B, D);
    C = set_difference(C, D);
    ++iter;
  }
  out.B = B;
  out.C = C;
  out.ts_add_B = B.empty() ? BigInt(0) : t_k(B, s);
  out.ts_mul_C = C.empty() ? BigInt(0) : t_k(C, s, Op::Mul);
  out.tq_add_B = B.empty() ? BigInt(0) : t_k(B, q);
  const double lA = std::log(static_cast<double>(n));
  auto delta = [&](const BigInt& t) {
    if (t == 0 || n < 2) return 2.0 * s;
    return 2.0 * s - std::log(static_cast<double>(to_ld(t))) / lA;
  };
  out.delta_B = delta(out.ts_add_B);
  out.delta_C = delta(out.ts_mul_C);
  return out;
}

// Sidon -------------------------------------------------------------------------

namespace {

struct SidonState {
  int h;
  // sums of j-element multisets, j = 0..h
  std::vector<std::unordered_set<int64_t>> M;
  explicit SidonState(int h_) : h(h_), M(static_cast<size_t>(h_) + 1) { M[0].insert(0); }

  // new sums that x would add, or nullopt on a collision
  bool try_add(int64_t x, std::vector<std::vector<int64_t>>& added, int64_t modulus) {
    added.assign(static_cast<size_t>(h) + 1, {});
    // multisets of size j containing x: x + (size j-1 multisets of B + x)
    for (int j = 1; j <= h; ++j) {
      std::vector<int64_t> prev(M[j - 1].begin(), M[j - 1].end());
      prev.insert(prev.end(), added[j - 1].begin(), added[j - 1].end());
      for (int64_t v : prev) {
        int64_t w = v + x;
        if (modulus && w >= modulus) w -= modulus;
        if (M[j].count(w)) return false;
        added[j].push_back(w);
      }
      std::sort(added[j].begin(), added[j].end());
      if (std::adjacent_find(added[j].begin(), added[j].end()) != added[j].end()) return false;
    }
    return true;
  }
  void commit(const std::vector<std::vector<int64_t>>& added) {
    for (int j = 1; j <= h; ++j) M[j].insert(added[j].begin(), added[j].end());
  }
  void rollback(const std::vector<std::vector<int64_t>>& added) {
    for (int j = 1; j <= h; ++j)
      for (int64_t v : added[j]) M[j].erase(v);
  }
};

}  // namespace

bool is_sidon(const GroundSet& b, int h, Op op) {
  if (h < 1) throw InvalidInput("h must be >= 1");
  if (b.empty()) return true;
  GroundSet v = view(b, op);
  BoxBuilder bb(v.width());
  bb.add_set(v, 0, h);
  Codec c = bb.build(v.ambient());
  SidonState st(h);
  std::vector<std::vector<int64_t>> added;
  for (int64_t x : c.encode_all(v)) {
    if (!st.try_add(x, added, c.modulus())) return false;
    st.commit(added);
  }
  return true;
}

GroundSet sidon_extract(const GroundSet& a, int h, Op op, SidonMode mode, uint64_t budget) {
  if (h < 2) throw InvalidInput("h must be >= 2");
  if (a.empty()) return a;
  if (mode == SidonMode::ExactTiny && a.size() > 20) throw InvalidInput("exact Sidon search wants |A| <= 20");
  auto im = element_images(a, op);
  GroundSet v = view(a, op);
  BoxBuilder bb(v.width());
  bb.add_set(v, 0, h);
  Codec c = bb.build(v.ambient());
  std::vector<int64_t> key(a.size());
  for (size_t i = 0; i < a.size(); ++i) key[i] = c.encode(im[i]);
  const int64_t md = c.modulus();

  SidonState st(h);
  std::vector<size_t> cur, best;
  if (mode == SidonMode::Greedy) {
    std::vector<std::vector<int64_t>> added;
    for (size_t i = 0; i < a.size(); ++i)
      if (st.try_add(key[i], added, md)) {
        st.commit(added);
        best.push_back(i);
      }
    return a.subset(best);
  }
  Budget bud(budget);
  // include-first DFS in index order: the first maximum found is the
  // lexicographically smallest one
  auto dfs = [&](auto&& self, size_t i) -> void {
    if (!bud.spend(1)) throw BudgetExceeded("Sidon search exceeded the budget");
    if (cur.size() > best.size()) best = cur;
    if (i == a.size()) return;
    if (cur.size() + (a.size() - i) <= best.size()) return;
    std::vector<std::vector<int64_t>> added;
    if (st.try_add(key[i], added, md)) {
      st.commit(added);
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
      st.rollback(added);
    }
    self(self, i + 1);
  };
  dfs(dfs, 0);
  return a.subset(best);
}

// ratio box ---------------------------------------------------------------------

RatioBox ratio_box(const GroundSet& a) {
  require_scalar_z(a, "ratio_box");
  if (a.size() > 4000) throw Truncated("ratio_box caps |A| at 4000");
  RatioBox out;
  if (a.size() < 2) return out;
  auto v = a.scalars();
  std::vector<int64_t> pos;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j) pos.push_back(v[j] - v[i]);
  std::sort(pos.begin(), pos.end());
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
  const int64_t top = pos.back();
  std::vector<bool> bits;
  const bool dense = top <= (int64_t{1} << 26);
  if (dense) {
    bits.assign(static_cast<size_t>(top) + 1, false);
    for (int64_t p : pos) bits[static_cast<size_t>(p)] = true;
  }
  auto in = [&](int64_t x) {
    if (x > top) return false;
    return dense ? static_cast<bool>(bits[static_cast<size_t>(x)])
                 : std::binary_search(pos.begin(), pos.end(), x);
  };
  // x/y in D/D iff x t, y t in D+ for some t
  auto has = [&](int64_t x, int64_t y) {
    const int64_t big = std::max(x, y);
    if (static_cast<double>(top) / big < static_cast<double>(pos.size())) {
      for (int64_t t = 1; big * t <= top; ++t)
        if (in(x * t) && in(y * t)) return true;
      return false;
    }
    for (int64_t p : pos)
      if (p % x == 0 && in(p / x * y)) return true;
    return false;
  };
  auto coprime_pairs = [](int64_t n) {
    // (x, n), (n, x) for x = 1..n
    std::vector<std::pair<int64_t, int64_t>> ps;
    for (int64_t x = 1; x <= n; ++x) {
      if (gcd64(x, n) != 1) continue;
      ps.push_back({x, n});
      if (x != n) ps.push_back({n, x});
    }
    return ps;
  };
  for (int64_t n = 1;; ++n)
    for (auto [x, y] : coprime_pairs(n))
      if (!has(x, y)) {
        out.n = n - 1;
        out.missing = std::make_pair(x, y);
        return out;
      }
}

}  // namespace adlab

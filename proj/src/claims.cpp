#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

#include "adlab/decompose.hpp"
#include "adlab/dissociation.hpp"
#include "adlab/energy.hpp"
#include "adlab/growth.hpp"
#include "adlab/harness.hpp"
#include "adlab/modular.hpp"

namespace adlab {

namespace {

using Records = std::vector<ExperimentReport>;

// desk-scale envelope
constexpr size_t kExactDim = 24;
constexpr size_t kEnergy = 64;

ExperimentReport rec(const std::string& id, json params = json::object()) {
  ExperimentReport r;
  r.claim_id = id;
  r.params = std::move(params);
  return r;
}

bool is_z(const GroundSet& a) { return !a.ambient().residues() && a.width() == 1; }

bool positive_ints(const GroundSet& a) {
  if (!is_z(a) || a.empty()) return false;
  return a.scalar(0) > 0;
}

bool prime_residues(const GroundSet& a) { return a.ambient().residues() && is_prime(a.ambient().modulus); }

double lnd(double x) { return std::log(x); }
double ln_big(const BigInt& x) { return static_cast<double>(std::log(to_ld(x))); }

double ratio(double a, double b) {
  if (b == 0) return a == 0 ? 0.0 : INFINITY;
  return a / b;
}

int ceil_dlogd(int d) { return d <= 1 ? 1 : static_cast<int>(std::ceil(d * std::log(static_cast<double>(d)) - 1e-12)); }

Rational doubling(const GroundSet& a, size_t cap) {
  return Rational(BigInt(iterated_sumset(a, 2, 0, cap).size()), BigInt(a.size()));
}

// |A.A| / |A| for positive integers or nonzero residues mod a prime
Rational mult_doubling(const GroundSet& a, size_t cap) {
  GroundSet v = mult_view(a);
  return Rational(BigInt(iterated_sumset(v, 2, 0, cap).size()), BigInt(a.size()));
}

bool mult_ok(const GroundSet& a) {
  if (positive_ints(a)) return true;
  return prime_residues(a) && !a.has_zero();
}

// hard --------------------------------------------------------------------------

Records plunnecke(InstanceCtx& c) {
  const GroundSet& a = c.set();
  if (a.empty()) return {};
  const size_t cap = c.opt().cap;
  Rational K = doubling(a, cap);
  auto r = rec("plunnecke");
  json per = json::array();
  double worst = 0;
  const std::pair<int, int> pairs[] = {{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 0}};
  for (auto [n, m] : pairs) {
    size_t lhs;
    try {
      lhs = iterated_sumset(a, n, m, cap).size();
    } catch (const Truncated&) {
      continue;
    }
    Rational rhs = rpow(K, static_cast<unsigned>(n + m)) * Rational(BigInt(a.size()));
    if (Rational(BigInt(lhs)) > rhs) r.violated = true;
    double q = static_cast<double>(to_ld(Rational(BigInt(lhs)) / rhs));
    worst = std::max(worst, q);
    per.push_back({{"n", n}, {"m", m}, {"size", lhs}, {"bound", to_frac(rhs)}});
  }
  if (per.empty()) return {};
  r.fitted_constant = worst;
  r.witnesses = {{"K", to_frac(K)}, {"pairs", per}};
  return {r};
}

Records growth_monotone(InstanceCtx& c) {
  const GroundSet& a = c.set();
  if (a.empty()) return {};
  GrowthCurve g = growth_sequence(a, std::max(2, c.opt().n_max), c.opt().cap);
  if (g.sizes.size() < 2) return {};
  auto r = rec("growth_monotone", {{"n_max", c.opt().n_max}});
  double worst = INFINITY;
  for (size_t i = 1; i < g.sizes.size(); ++i) {
    if (g.sizes[i] < g.sizes[i - 1]) r.violated = true;
    worst = std::min(worst, static_cast<double>(g.sizes[i]) / g.sizes[i - 1]);
  }
  r.fitted_constant = worst;
  r.witnesses = {{"sizes", g.sizes}};
  if (g.truncated_at) r.witnesses["truncated_at"] = *g.truncated_at;
  return {r};
}

Records holder(InstanceCtx& c) {
  const GroundSet& a = c.set();
  if (a.empty() || a.size() > kEnergy) return {};
  // a few different subsets so the product is not just T_k(A)^(2k)
  std::vector<size_t> ev, od, lo, hi;
  for (size_t i = 0; i < a.size(); ++i) {
    (i % 2 ? od : ev).push_back(i);
    (2 * i < a.size() ? lo : hi).push_back(i);
  }
  std::vector<GroundSet> pieces = {a, a.subset(ev), a.subset(od), a.subset(lo), a.subset(hi)};
  for (auto& p : pieces)
    if (p.empty()) p = a;
  Records out;
  auto r = rec("holder");
  json per = json::array();
  double worst = 0;
  const int kmax = std::min(c.opt().k_max, 3);
  for (int k = 1; k <= kmax; ++k) {
    std::vector<GroundSet> sets;
    for (int j = 0; j < 2 * k; ++j) sets.push_back(pieces[static_cast<size_t>(j) % pieces.size()]);
    BigInt mixed = t_k_multi(sets);
    BigInt prod = 1;
    for (const auto& s : sets) prod *= t_k(s, k);
    BigInt lhs = ipow(mixed, static_cast<unsigned>(2 * k));
    if (lhs > prod) r.violated = true;
    double q = std::exp((ln_big(mixed) * 2 * k - ln_big(prod)) / (2 * k));
    worst = std::max(worst, q);
    per.push_back({{"k", k}, {"T_mixed", to_dec(mixed)}, {"prod", to_dec(prod)}});
  }
  if (per.empty()) return {};
  r.fitted_constant = worst;
  r.witnesses = {{"per_k", per}};
  return {r};
}

Records dim_chain(InstanceCtx& c) {
  const GroundSet& a = c.set();
  if (a.empty() || a.size() > kExactDim) return {};
  const DimensionBounds& dim = c.dim(1);
  // only the safe side of each bound enters the check, so a small budget is enough here
  SpanBounds d = d_k_exact(a, 1, std::max<uint64_t>(c.opt().budget >> 6, 1 << 16));
  SpanBounds ds = d_star_from(a, 1, d, dim);
  auto r = rec("dim_chain", {{"k", 1}});
  r.violated = ds.lower > d.upper || d.lower > dim.upper;
  r.fitted_constant = ratio(d.lower, std::max(1, dim.upper));
  r.witnesses = {{"d_star", {ds.lower, ds.upper}}, {"d", {d.lower, d.upper}}, {"dim", {dim.lower, dim.upper}},
                 {"exact", ds.exact && d.exact && dim.exact}};
  return {r};
}

Records dim_counting(InstanceCtx& c) {
  const GroundSet& a = c.set();
  if (a.empty() || a.size() > kExactDim) return {};
  auto r = rec("dim_counting", {{"k_max", c.opt().k_max}});
  json per = json::array();
  double worst = INFINITY;
  for (int k = 1; k <= c.opt().k_max; ++k) {
    const DimensionBounds& dk = c.dim(k);
    // a violation is certain only when even the upper bound fails
    BigInt cap = ipow(BigInt(2 * k + 1), static_cast<unsigned>(dk.upper));
    if (cap < BigInt(a.size())) r.violated = true;
    if (a.size() >= 2) worst = std::min(worst, dk.upper * lnd(2 * k + 1) / lnd(static_cast<double>(a.size())));
    per.push_back({{"k", k}, {"dim_k", dk.upper}, {"exact", dk.exact},
                   {"k_times_bound_ok", BigInt(k) * cap >= BigInt(a.size())}});
  }
  r.fitted_constant = worst;
  r.witnesses = {{"size", a.size()}, {"per_k", per}};
  return {r};
}

Records dirichlet_dim(InstanceCtx& c) {
  const GroundSet& a = c.set();
  if (a.empty() || a.size() > kExactDim || a.width() != 1) return {};
  int64_t N;
  bool projected = false;
  if (a.ambient().residues()) {
    N = a.ambient().modulus;
    if (N > 200000) return {};
  } else {
    int64_t mx = 0;
    for (int64_t x : a.scalars()) mx = std::max(mx, x < 0 ? -x : x);
    N = next_prime(std::max<int64_t>(2 * mx + 1, 3));
    // large integers are looked at through a smaller prime
    if (N > 10007) {
      N = 10007;
      projected = true;
    }
  }
  if (N < 3) return {};
  Records out;
  for (int s : {1, 2}) {
    DirichletDimCheck ch = verify_dirichlet_dim(a, N, s, c.opt().budget);
    if (ch.D.value == 0) continue;  // no admissible T
    auto r = rec("dirichlet_dim", {{"s", s}, {"N", N}, {"projected", projected}});
    r.violated = !ch.holds;
    r.fitted_constant = static_cast<double>(ch.rhs == 0 ? INFINITY : ch.lhs / ch.rhs);
    r.witnesses = {{"dim", ch.d},
                   {"D", to_frac(ch.D.value)},
                   {"argmin_q", ch.D.argmin_q},
                   {"T", to_frac(ch.T)},
                   {"rhs", num(static_cast<double>(ch.rhs))}};
    out.push_back(r);
  }
  return out;
}

Records energy_dim(InstanceCtx& c) {
  const GroundSet& a = c.set();
  if (a.empty() || a.size() > kEnergy) return {};
  const DimensionBounds& d = c.dim(1);
  auto r = rec("energy_dim", {{"k_max", c.opt().k_max}});
  json per = json::array();
  double worst = INFINITY;
  for (int k = 1; k <= c.opt().k_max; ++k) {
    const BigInt T = k == 1 ? BigInt(a.size()) : c.energy(k);
    BigInt lhs = T * ipow(BigInt(2 * k + 1), static_cast<unsigned>(d.upper));
    BigInt rhs = ipow(BigInt(a.size()), static_cast<unsigned>(2 * k));
    if (lhs < rhs) r.violated = true;
    worst = std::min(worst, static_cast<double>(to_ld(Rational(lhs, rhs))));
    per.push_back({{"k", k}, {"T_k", to_dec(T)}});
  }
  r.fitted_constant = worst;
  r.witnesses = {{"dim", d.upper}, {"dim_exact", d.exact}, {"per_k", per}};
  return {r};
}

Records certificates(InstanceCtx& c) {
  const GroundSet& a = c.set();
  if (a.empty() || a.size() > kExactDim) return {};
  auto r = rec("certificates");
  json checks = json::array();
  auto note = [&](const std::string& what, bool ok) {
    checks.push_back({{"check", what}, {"ok", ok}});
    if (!ok) r.violated = true;
  };
  const GroundSet nz = a.without_zero();
  for (int k = 1; k <= c.opt().k_max; ++k) {
    const DimensionBounds& dk = c.dim(k);
    const std::string tag = "k=" + std::to_string(k);
    note("dim witness inside A " + tag, dk.witness.is_subset_of(a));
    note("dim witness size " + tag, static_cast<int>(dk.witness.size()) == dk.lower);
    note("dim witness dissociated " + tag,
         is_k_dissociated(dk.witness, k, c.opt().budget).verdict == Verdict::Dissociated);
    if (dk.exact && static_cast<int>(nz.size()) > dk.upper) {
      Certificate cert = is_k_dissociated(nz, k, c.opt().budget);
      note("relation found " + tag, cert.verdict == Verdict::Relation);
      if (cert.verdict == Verdict::Relation) note("relation checks " + tag, check_relation(nz, k, cert.relation));
    }
  }
  SpanBounds d = d_k_exact(a, 1, c.opt().budget);
  note("span witness covers A", a.is_subset_of(span_k(d.witness, 1)));
  if (a.size() <= kEnergy) note("energy convolution matches mixed count", t_k_multi({a, a, a, a}) == c.energy(2));
  const DimensionBounds& d1 = c.dim(1);
  if (d1.witness.size() >= 1) {
    Rational rr = rudin_ratio(d1.witness, 2);
    note("rudin ratio positive", rr > 0);
  }
  r.witnesses = {{"checks", checks}};
  return {r};
}

const Records& growth_records(InstanceCtx& c, int k) {
  return c.memo("growth_bounds_" + std::to_string(k), [&] {
    return verify_growth_bounds(c.set(), std::max(2, c.opt().n_max), k, c.opt().budget, c.opt().cap);
  });
}

Records growth_claim(InstanceCtx& c, const std::string& id) {
  const GroundSet& a = c.set();
  if (a.empty() || a.size() > kExactDim) return {};
  Records out;
  for (int k = 1; k <= 2; ++k) {
    if (k == 2 && a.size() > 16) break;
    for (const auto& r : growth_records(c, k))
      if (r.claim_id == id) out.push_back(r);
  }
  return out;
}

Records partition(InstanceCtx& c) {
  const GroundSet& a = c.set();
  if (a.empty() || a.size() > kExactDim) return {};
  const int l = std::max(1, c.dim(1).lower / 2);
  PeelingResult p = dissociated_peeling(a, l, c.opt().budget);
  auto r = rec("partition", {{"l", l}});
  GroundSet all = p.remainder;
  size_t total = p.remainder.size();
  bool ok = true;
  for (const auto& b : p.blocks) {
    ok = ok && static_cast<int>(b.size()) == l && b.is_subset_of(a);
    ok = ok && is_k_dissociated(b, 1, c.opt().budget).verdict == Verdict::Dissociated;
    total += b.size();
    all = set_union(all, b);
  }
  ok = ok && all == a && total == a.size();
  if (p.certified) ok = ok && dim_k_exact(p.remainder, 1, c.opt().budget).upper < l;
  r.violated = !ok;
  r.fitted_constant = static_cast<double>(p.blocks.size());
  r.witnesses = {{"blocks", p.blocks.size()}, {"remainder", p.remainder.str()}, {"certified", p.certified}};
  return {r};
}

Records dec_partition_energy(InstanceCtx& c, bool hard) {
  const GroundSet& a = c.set();
  if (!positive_ints(a) || a.size() < 2 || a.size() > 16) return {};
  const auto& recs = c.memo("dec_tk", [&] {
    DecompositionResult d = dec_tk(a, 2, 2, 0, 64, c.opt().budget);
    Records out;
    auto p = rec("dec_partition", {{"s", 2}, {"q", 2}, {"K", to_frac(d.K)}});
    bool ok = set_intersection(d.B, d.C).empty() && set_union(d.B, d.C) == a;
    auto t = [](const GroundSet& g, int k, Op op) { return g.empty() ? BigInt(0) : t_k(g, k, op); };
    ok = ok && t(d.B, 2, Op::Add) == d.ts_add_B && t(d.C, 2, Op::Mul) == d.ts_mul_C &&
         t(d.B, 2, Op::Add) == d.tq_add_B;
    const bool peeled = !d.iterations.empty();
    bool strict = true;
    if (peeled) {
      BigInt triv = ipow(BigInt(a.size()), 3);
      strict = d.ts_add_B < triv && d.ts_mul_C < triv && d.tq_add_B < ipow(BigInt(d.B.size()), 3);
      if (!d.max_iter_hit) strict = strict && Rational(d.ts_mul_C) <= d.threshold;
    }
    p.violated = !(ok && strict);
    p.fitted_constant = static_cast<double>(d.iterations.size());
    p.witnesses = {{"B", d.B.str()},
                   {"C", d.C.str()},
                   {"peels", d.iterations.size()},
                   {"recomputed_match", ok},
                   {"strict_drop", strict},
                   {"threshold", to_frac(d.threshold)}};
    out.push_back(p);
    auto e = rec("dec_energy", {{"s", 2}, {"q", 2}});
    e.fitted_constant = std::min(d.delta_B, d.delta_C);
    e.witnesses = {{"delta_B", num(d.delta_B)}, {"delta_C", num(d.delta_C)}, {"peels", d.iterations.size()}};
    out.push_back(e);
    return out;
  });
  return {recs[hard ? 0 : 1]};
}

// brute force: all pairs of 2-tuples agree on equal / unequal sums
bool iso2_bruteforce(const std::vector<int64_t>& src, const std::vector<int64_t>& img, int64_t m) {
  const size_t n = src.size();
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t x = 0; x < n; ++x)
        for (size_t y = 0; y < n; ++y) {
          bool zs = src[a] + src[b] == src[x] + src[y];
          bool ms = mod_norm(img[a] + img[b] - img[x] - img[y], m) == 0;
          if (zs != ms) return false;
        }
  return true;
}

Records freiman_iso(InstanceCtx& c) {
  const GroundSet& a = c.set();
  if (!is_z(a) || a.size() < 2 || a.size() > 10) return {};
  FreimanModel fm = freiman_model(a, 2, 0, c.opt().seed);
  auto r = rec("freiman_iso", {{"l", 2}, {"m", fm.m}});
  bool ok = fm.verified && fm.a_star.is_subset_of(a) &&
            iso2_bruteforce(fm.a_star.scalars(), fm.map, fm.m);
  r.violated = !ok;
  r.fitted_constant = static_cast<double>(fm.a_star.size()) / a.size();
  r.witnesses = {{"method", fm.method}, {"bound", fm.bound}, {"a_star", fm.a_star.str()}, {"image", fm.map}};
  return {r};
}

const Records& shift_records(InstanceCtx& c) {
  return c.memo("shift", [&] {
    std::vector<int64_t> xs;
    const int64_t w = c.set().size() <= 10 ? 20 : 5;
    for (int64_t x = -w; x <= w; ++x) xs.push_back(x);
    return dim_shift_ratio(c.set(), xs, {GroundSet::ints({0, 1}), GroundSet::ints({0, 1, 2})}, c.opt().budget);
  });
}

Records shift_claim(InstanceCtx& c, const std::string& id) {
  const GroundSet& a = c.set();
  if (!is_z(a) || a.empty() || a.size() > 12) return {};
  Records out;
  for (const auto& r : shift_records(c))
    if (r.claim_id == id) out.push_back(r);
  return out;
}

// fitted ------------------------------------------------------------------------

Records dim_compare(InstanceCtx& c) {
  const GroundSet& a = c.set();
  if (a.empty() || a.size() > kExactDim) return {};
  Records out;
  const DimensionBounds& d1 = c.dim(1);
  for (int k = 2; k <= std::max(2, c.opt().k_max); ++k) {
    const DimensionBounds& dk = c.dim(k);
    if (dk.lower < 1) continue;
    auto r = rec("dim_compare", {{"k", k}});
    r.fitted_constant = ratio(d1.upper, dk.lower * std::log2(static_cast<double>(k) * dk.lower));
    r.witnesses = {{"dim", d1.upper}, {"dim_k", dk.lower}, {"exact", d1.exact && dk.exact}};
    out.push_back(r);
  }
  return out;
}

Records sigma_dim(InstanceCtx& c) {
  const GroundSet& a = c.set();
  if (!is_z(a) || a.empty() || a.size() > kExactDim) return {};
  const int d = c.dim(1).upper;
  if (d < 2) return {};
  const int l = ceil_dlogd(d);
  const int dl = c.dim(l).upper;
  if (dl < 2) return {};
  GroundSet Q = sigma_k(a, dl, c.opt().cap);
  if (Q.size() > 40) return {};
  DimensionBounds dq = dim_k_exact(Q, 1, c.opt().budget);
  auto r = rec("sigma_dim", {{"l", l}});
  double m = std::min(dl * lnd(dl), static_cast<double>(l));
  r.fitted_constant = ratio(dq.lower, m);
  r.witnesses = {{"dim_l", dl}, {"sigma_size", Q.size()}, {"dim_sigma", {dq.lower, dq.upper}}};
  return {r};
}

Records cube_dim(InstanceCtx& c) {
  const GroundSet& a = c.set();
  if (a.empty() || a.size() > kExactDim) return {};
  const int d = c.dim(1).upper;
  if (d < 2) return {};
  const int k = ceil_dlogd(d);
  const DimensionBounds& dk = c.dim(k);
  if (dk.witness.size() > 10 || dk.witness.empty()) return {};
  GroundSet Q = cube(dk.witness);
  if (Q.size() > 40) return {};
  DimensionBounds dq = dim_k_exact(Q, 1, c.opt().budget);
  auto r = rec("cube_dim", {{"k", k}});
  r.fitted_constant = ratio(dk.upper * lnd(d), dq.lower);
  r.witnesses = {{"dim", d}, {"dim_k", dk.upper}, {"cube_size", Q.size()}, {"dim_cube", {dq.lower, dq.upper}}};
  return {r};
}

Records span_growth(InstanceCtx& c) {
  const GroundSet& a = c.set();
  if (a.empty() || a.size() > kExactDim) return {};
  return check_span_growth(a, std::max(2, c.opt().n_max), c.opt().budget, c.opt().cap);
}

Records small_doubling_dim(InstanceCtx& c) {
  const GroundSet& a = c.set();
  if (a.size() < 3 || a.size() > kExactDim) return {};
  const int d = c.dim(1).upper;
  const int k = ceil_dlogd(d);
  const DimensionBounds& dk = c.dim(k);
  const double K = static_cast<double>(to_ld(doubling(a, c.opt().cap)));
  const double L = lnd(static_cast<double>(a.size()));
  const double rhs = L / lnd(L) + K * std::pow(lnd(2 * K), 6) * lnd(lnd(4 * K));
  auto r = rec("small_doubling_dim", {{"k", k}});
  r.fitted_constant = ratio(dk.upper, rhs);
  r.witnesses = {{"dim_k", dk.upper}, {"K", num(K)}, {"rhs", num(rhs)}};
  return {r};
}

Records poly_growth(InstanceCtx& c, const std::string& id) {
  const GroundSet& a = c.set();
  if (a.size() < 2 || a.size() > kExactDim) return {};
  const auto& recs = c.memo("poly_growth", [&] {
    return polynomial_growth_fit(a, std::max(2, c.opt().n_max), 1, c.opt().budget).reports;
  });
  Records out;
  for (const auto& r : recs)
    if (r.claim_id == id) out.push_back(r);
  return out;
}

Records energy_dim_upper(InstanceCtx& c) {
  const GroundSet& a = c.set();
  if (a.size() < 2 || a.size() > 12) return {};
  const Rational alpha(1, 2);
  DimAlphaResult da = dim_alpha_k(a, alpha, 2, Op::Add, c.opt().budget);
  if (da.upper < 1) return {};
  const double al = 0.5;
  const double A = static_cast<double>(a.size());
  const double t = static_cast<double>(to_ld(c.energy(2)));
  const double f = 1 - std::pow(al, 1.0 / 4);
  auto r = rec("energy_dim_upper", {{"k", 2}, {"alpha", "1/2"}});
  r.fitted_constant = std::sqrt(t / std::pow(A, 4)) * da.upper * f * f / 32.0;
  r.witnesses = {{"dim_alpha", da.upper}, {"exact", da.exact}, {"T_2", to_dec(c.energy(2))}};
  return {r};
}

Records energy_dim_lower(InstanceCtx& c) {
  const GroundSet& a = c.set();
  if (a.empty() || a.size() > kExactDim) return {};
  const int d = c.dim(1).upper;
  if (d < 2) return {};
  const double A = static_cast<double>(a.size());
  double best = 0;
  int arg = 1;
  for (int m = 1; m <= std::min(d / 2, 4); ++m) {
    const double T = m == 1 ? A : static_cast<double>(to_ld(c.energy(m)));
    // log of T_m 2d 4^m e^d binom(d+1, 2m) / |A|^(2m)
    double lb = std::lgamma(d + 2.0) - std::lgamma(2.0 * m + 1) - std::lgamma(d + 2.0 - 2 * m);
    double v = std::log(T) + std::log(2.0 * d) + m * std::log(4.0) + d + lb - 2 * m * std::log(A);
    if (m == 1 || v > best) {
      best = v;
      arg = m;
    }
  }
  auto r = rec("energy_dim_lower", {{"m_max", std::min(d / 2, 4)}});
  r.fitted_constant = std::exp(best);
  r.witnesses = {{"dim", d}, {"best_m", arg}};
  return {r};
}

Records fourier_dim(InstanceCtx& c) {
  const GroundSet& a = c.set();
  if (!prime_residues(a) || a.size() > kEnergy || a.ambient().modulus > (1 << 20)) return {};
  FourierMax fm = fourier_max(a);
  const double eps = fm.value / a.size();
  if (eps > 0.25) return {};
  const DimensionBounds& d = c.dim(1);
  auto r = rec("fourier_dim");
  r.fitted_constant = d.lower / lnd(static_cast<double>(a.ambient().modulus));
  r.witnesses = {{"eps", num(eps)}, {"argmax", fm.argmax}, {"dim", d.lower}, {"parseval_ok", fm.parseval_ok}};
  return {r};
}

Records mult_doubling_energy(InstanceCtx& c) {
  const GroundSet& a = c.set();
  if (!mult_ok(a) || a.size() > kExactDim) return {};
  const int d = c.dim(1).upper;
  if (d < 2) return {};
  const double D = static_cast<double>(to_ld(mult_doubling(a, c.opt().cap)));
  const double A = static_cast<double>(a.size());
  const double t = static_cast<double>(to_ld(c.energy(2)));
  auto r = rec("mult_doubling_energy", {{"k", 2}});
  r.fitted_constant = std::sqrt(t) * d / (std::pow(D, 6) * std::pow(lnd(d), 2) * A * A);
  r.witnesses = {{"D", num(D)}, {"dim", d}, {"T_2", to_dec(c.energy(2))}};
  return {r};
}

Records subgroup_claim(InstanceCtx& c, const std::string& id) {
  if (c.spec().generator != "subgroup") return {};
  const int64_t p = c.spec().params.at("p").get<int64_t>();
  const int64_t t = c.spec().params.at("t").get<int64_t>();
  if (p > 10000) return {};
  const auto& recs = c.memo("subgroup", [&] {
    return subgroup_growth_experiment(p, t, std::max(1, c.opt().n_max), std::max(1, c.opt().k_max), c.opt().budget);
  });
  Records out;
  for (const auto& r : recs)
    if (r.claim_id == id) out.push_back(r);
  return out;
}

Records ratio_box_claim(InstanceCtx& c) {
  const GroundSet& a = c.set();
  if (!is_z(a) || a.size() < 2 || a.size() > 400) return {};
  const double K = static_cast<double>(to_ld(doubling(a, c.opt().cap)));
  if (K <= 1) return {};
  RatioBox rb = ratio_box(a);
  auto r = rec("ratio_box");
  r.fitted_constant = lnd(static_cast<double>(std::max<int64_t>(rb.n, 1))) * lnd(K) / lnd(static_cast<double>(a.size()));
  r.witnesses = {{"n", rb.n}, {"K", num(K)}};
  if (rb.missing) r.witnesses["missing"] = {rb.missing->first, rb.missing->second};
  return {r};
}

int64_t order_mod(int64_t x, int64_t p) {
  int64_t o = 1, y = x;
  while (y != 1) {
    y = mod_mul(y, x, p);
    ++o;
  }
  return o;
}

Records diff_in_subgroup(InstanceCtx& c) {
  const GroundSet& a = c.set();
  if (!prime_residues(a) || a.size() < 2) return {};
  const int64_t p = a.ambient().modulus;
  if (p > 100000) return {};
  // smallest subgroup holding A - A minus zero: order lcm of element orders
  GroundSet d = diffset(a, a).without_zero();
  int64_t g = 1;
  for (int64_t x : d.scalars()) g = std::lcm(g, order_mod(x, p));
  if (g >= p - 1) return {};
  const double delta = 1 - lnd(static_cast<double>(g)) / lnd(static_cast<double>(p));
  const double K = static_cast<double>(to_ld(doubling(a, c.opt().cap)));
  if (K <= 1 || delta <= 0 || delta >= 1) return {};
  auto r = rec("diff_in_subgroup");
  r.fitted_constant =
      lnd(static_cast<double>(a.size())) / (lnd(K) * std::sqrt(lnd(1 / delta) * lnd(static_cast<double>(p)) / delta));
  r.witnesses = {{"subgroup_order", g}, {"delta", num(delta)}, {"K", num(K)}};
  return {r};
}

Records sparse_dim(InstanceCtx& c) {
  const GroundSet& a = c.set();
  if (!positive_ints(a) || a.size() < 3 || a.size() > kExactDim) return {};
  const double L = lnd(static_cast<double>(a.size()));
  const double Ka = static_cast<double>(to_ld(doubling(a, c.opt().cap)));
  const double Km = static_cast<double>(to_ld(mult_doubling(a, c.opt().cap)));
  Records out;
  if (Km > 1 && L / lnd(Km) > 1) {
    auto r = rec("sparse_dim_add");
    const DimensionBounds& d = c.dim(1);
    r.fitted_constant = d.lower / (L * lnd(L / lnd(Km)));
    r.witnesses = {{"dim", d.lower}, {"K_mul", num(Km)}};
    out.push_back(r);
  }
  if (Ka > 1 && L / lnd(Ka) > 1) {
    auto r = rec("sparse_dim_mul");
    DimensionBounds dm = dim_k_exact(mult_view(a), 1, c.opt().budget);
    r.fitted_constant = dm.lower / (L * lnd(L / lnd(Ka)));
    r.witnesses = {{"dim_mul", dm.lower}, {"K_add", num(Ka)}};
    out.push_back(r);
  }
  return out;
}

Records sum_product_dim(InstanceCtx& c) {
  const GroundSet& a = c.set();
  if (!positive_ints(a) || a.size() < 16 || a.size() > kExactDim) return {};
  const double L = lnd(static_cast<double>(a.size()));
  const double ll = lnd(L), lll = lnd(ll);
  if (lll <= 0) return {};
  DimensionBounds dm = dim_k_exact(mult_view(a), 1, c.opt().budget);
  const int best = std::max(c.dim(1).lower, dm.lower);
  auto r = rec("sum_product_dim");
  r.fitted_constant = best / (L * std::sqrt(ll / lll));
  r.witnesses = {{"dim_add", c.dim(1).lower}, {"dim_mul", dm.lower}};
  return {r};
}

Records sidon(InstanceCtx& c) {
  const GroundSet& a = c.set();
  if (!positive_ints(a) || a.size() < 2 || a.size() > 64) return {};
  const SidonMode mode = a.size() <= 20 ? SidonMode::ExactTiny : SidonMode::Greedy;
  GroundSet ba = sidon_extract(a, 2, Op::Add, mode, c.opt().budget);
  GroundSet bm = sidon_extract(a, 2, Op::Mul, mode, c.opt().budget);
  auto r = rec("sidon", {{"h", 2}, {"mode", mode == SidonMode::Greedy ? "greedy" : "exact"}});
  const size_t best = std::max(ba.size(), bm.size());
  r.fitted_constant = 2 * lnd(static_cast<double>(best)) / lnd(static_cast<double>(a.size()));
  r.witnesses = {{"B_add", ba.str()}, {"B_mul", bm.str()}};
  r.violated = !is_sidon(ba, 2, Op::Add) || !is_sidon(bm, 2, Op::Mul);
  return {r};
}

Records rudin(InstanceCtx& c) {
  const GroundSet& a = c.set();
  if (a.empty() || a.size() > kExactDim) return {};
  const DimensionBounds& d = c.dim(1);
  if (d.witness.size() < 2) return {};
  Records out;
  for (int k = 2; k <= std::max(2, std::min(c.opt().k_max, 4)); ++k) {
    auto r = rec("rudin", {{"k", k}});
    Rational q = rudin_ratio(d.witness, k);
    r.fitted_constant = static_cast<double>(to_ld(q));
    r.witnesses = {{"lambda", d.witness.str()}, {"ratio", to_frac(q)}};
    out.push_back(r);
  }
  return out;
}

// beta_hat only bounds beta from above, so this is one-sided
Records beta_dim(InstanceCtx& c) {
  const GroundSet& a = c.set();
  if (!is_z(a) || a.size() < 2 || a.size() > kExactDim) return {};
  const DimensionBounds& d = c.dim(1);
  const int64_t diam = a.scalars().back() - a.scalars().front();
  const int64_t L = std::min<int64_t>(2 * diam, 256);
  BetaEstimate e = beta_hat(a, L);
  auto r = rec("beta_dim", {{"L", L}});
  r.fitted_constant = e.upper / std::pow(2.0, d.upper);
  r.witnesses = {{"beta_hat_sq", to_frac(e.upper_sq)}, {"family", e.family}, {"dim", d.upper},
                 {"dim_exact", d.exact}};
  return {r};
}

using Fn = std::function<Records(InstanceCtx&)>;

const std::map<std::string, Fn>& table() {
  static const std::map<std::string, Fn> t = {
      {"plunnecke", plunnecke},
      {"growth_monotone", growth_monotone},
      {"holder", holder},
      {"dim_chain", dim_chain},
      {"dim_counting", dim_counting},
      {"dirichlet_dim", dirichlet_dim},
      {"energy_dim", energy_dim},
      {"certificates", certificates},
      {"split_sumset", [](InstanceCtx& c) { return growth_claim(c, "split_sumset"); }},
      {"partition", partition},
      {"dec_partition", [](InstanceCtx& c) { return dec_partition_energy(c, true); }},
      {"freiman_iso", freiman_iso},
      {"shift_zero", [](InstanceCtx& c) { return shift_claim(c, "shift_zero"); }},
      {"growth_stage1", [](InstanceCtx& c) { return growth_claim(c, "growth_stage1"); }},
      {"growth_stage2", [](InstanceCtx& c) { return growth_claim(c, "growth_stage2"); }},
      {"growth_stage3", [](InstanceCtx& c) { return growth_claim(c, "growth_stage3"); }},
      {"dim_compare", dim_compare},
      {"sigma_dim", sigma_dim},
      {"cube_dim", cube_dim},
      {"span_growth", span_growth},
      {"small_doubling_dim", small_doubling_dim},
      {"poly_growth_dim", [](InstanceCtx& c) { return poly_growth(c, "poly_growth_dim"); }},
      {"poly_growth_exponent", [](InstanceCtx& c) { return poly_growth(c, "poly_growth_exponent"); }},
      {"energy_dim_upper", energy_dim_upper},
      {"energy_dim_lower", energy_dim_lower},
      {"shift_dim", [](InstanceCtx& c) { return shift_claim(c, "shift_dim"); }},
      {"sumset_dim_lower", [](InstanceCtx& c) { return shift_claim(c, "sumset_dim_lower"); }},
      {"sumset_dim_upper", [](InstanceCtx& c) { return shift_claim(c, "sumset_dim_upper"); }},
      {"fourier_dim", fourier_dim},
      {"mult_doubling_energy", mult_doubling_energy},
      {"subgroup_growth", [](InstanceCtx& c) { return subgroup_claim(c, "subgroup_growth"); }},
      {"subgroup_dim", [](InstanceCtx& c) { return subgroup_claim(c, "subgroup_dim"); }},
      {"subgroup_power", [](InstanceCtx& c) { return subgroup_claim(c, "subgroup_power"); }},
      {"subgroup_dim_alpha", [](InstanceCtx& c) { return subgroup_claim(c, "subgroup_dim_alpha"); }},
      {"ratio_box", ratio_box_claim},
      {"diff_in_subgroup", diff_in_subgroup},
      {"sparse_dim_add", [](InstanceCtx& c) {
         Records o;
         for (auto& r : sparse_dim(c))
           if (r.claim_id == "sparse_dim_add") o.push_back(r);
         return o;
       }},
      {"sparse_dim_mul", [](InstanceCtx& c) {
         Records o;
         for (auto& r : sparse_dim(c))
           if (r.claim_id == "sparse_dim_mul") o.push_back(r);
         return o;
       }},
      {"sum_product_dim", sum_product_dim},
      {"dec_energy", [](InstanceCtx& c) { return dec_partition_energy(c, false); }},
      {"sidon", sidon},
      {"rudin", rudin},
      {"beta_dim", beta_dim},
  };
  return t;
}

}  // namespace

std::vector<ExperimentReport> run_claim(const std::string& id, InstanceCtx& ctx) {
  claim_info(id);
  auto it = table().find(id);
  if (it == table().end()) throw InvalidInput("claim '" + id + "' has no runner");
  return it->second(ctx);
}

}  // namespace adlab

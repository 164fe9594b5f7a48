// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "adlab/decompose.hpp"
#include "adlab/dissociation.hpp"
#include "adlab/energy.hpp"
#include "adlab/growth.hpp"
#include "adlab/harness.hpp"
#include "adlab/modular.hpp"
#include "oracles.hpp"

using namespace adlab;
using V = std::vector<int64_t>;
using Clock = std::chrono::steady_clock;

namespace {

double secs(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// k = 1 oracle by subset sums: dissociated iff the 2^n sums are distinct
bool dissociated1(const V& x) {
  std::set<int64_t> sums;
  for (uint64_t m = 0; m < (uint64_t{1} << x.size()); ++m) {
    int64_t s = 0;
    for (size_t i = 0; i < x.size(); ++i)
      if (m >> i & 1) s += x[i];
    if (!sums.insert(s).second) return false;
  }
  return true;
}

int dim1_oracle(const V& a) {
  int best = 0;
  for (uint64_t m = 1; m < (uint64_t{1} << a.size()); ++m) {
    int c = __builtin_popcountll(m);
    if (c > best && dissociated1(oracle::subset(a, m))) best = c;
  }
  return best;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome c1() {
  std::ostringstream d;
  double bb = 0;
  bool ok = true;
  for (int n = 1; n <= 16; ++n) {
    auto a = GroundSet::interval(1, n);
    auto t0 = Clock::now();
    auto r = dim_k_exact(a, 1);
    bb += secs(t0);
    int o = dim1_oracle(a.scalars());
    if (!r.exact || r.lower != o) {
      ok = false;
      d << " [" << n << "]: bb=" << r.lower << " oracle=" << o;
    }
  }
  auto t0 = Clock::now();
  int v4 = dim_k_exact(GroundSet::interval(1, 4), 1).lower;
  int v8 = dim_k_exact(GroundSet::interval(1, 8), 1).lower;
  int w4 = dim_k_exact(GroundSet::interval(1, 4), 2).lower;
  int w9 = dim_k_exact(GroundSet::interval(1, 9), 2).lower;
  bb += secs(t0);
  ok = ok && v4 == 3 && v8 == 4 && w4 == 2 && w9 == 3;
  ok = ok && w4 == oracle::dim({1, 2, 3, 4}, 2) && w9 == oracle::dim({1, 2, 3, 4, 5, 6, 7, 8, 9}, 2);
  ok = ok && bb < 10;
  d << " dim[4]=" << v4 << " dim[8]=" << v8 << " dim2[4]=" << w4 << " dim2[9]=" << w9 << " bb_time=" << bb << "s";
  return {ok, d.str()};
}

Outcome c2() {
  std::ostringstream d;
  auto t0 = Clock::now();
  bool ok = true;
  int bad = 0;
  auto a = GroundSet::interval(1, 8);
  for (uint64_t m = 1; m < 256; ++m) {
    auto s = a.from_mask(m);
    for (int k : {2, 3})
      if (t_k(s, k) != oracle::energy(s.scalars(), k)) ++bad;
  }
  ok = bad == 0;
  BigInt e1 = t_k(GroundSet::ints({0, 1}), 2), e2 = t_k(GroundSet::ints({0, 1}), 3),
         e3 = t_k(GroundSet::interval(1, 3), 2);
  ok = ok && e1 == 6 && e2 == 20 && e3 == 19;
  double t = secs(t0);
  ok = ok && t < 60;
  d << " mismatches=" << bad << " T2{0,1}=" << e1 << " T3{0,1}=" << e2 << " T2[3]=" << e3 << " time=" << t << "s";
  return {ok, d.str()};
}

Outcome c3() {
  auto g = subgroup(7, 3);
  auto e = t_k(g, 2);
  auto dv = dirichlet_min(g, 7, 2);
  bool ok = g.scalars() == V{1, 2, 4} && e == 15 && dv.exact && dv.value == Rational(2, 7) &&
            e == oracle::energy({1, 2, 4}, 2, 7) && oracle::dirichlet({1, 2, 4}, 7, 2) == Rational(2, 7);
  return {ok, " gamma=" + g.str() + " T2=" + to_dec(e) + " D=" + to_frac(dv.value)};
}

Outcome c4() {
  SuiteOptions o;
  o.budget = suite_budget("unconditional");
  o.seed = 1;
  auto claims = suite_claims("unconditional");
  auto inst = suite_instances("unconditional", o.seed);
  auto t0 = Clock::now();
  auto res = run_suite(claims, inst, o);
  double t = secs(t0);
  std::map<std::string, int> viol;
  const ExperimentReport* first = nullptr;
  for (const auto& r : res.records)
    if (r.violated) {
      ++viol[r.claim_id];
      if (!first) first = &r;
    }
  std::ostringstream d;
  d << " instances=" << inst.size() << " records=" << res.records.size() << " skipped=" << res.skipped
    << " violations=" << res.hard_violations;
  for (const auto& [k, v] : viol) d << " " << k << ":" << v;
  if (first) d << " first=" << first->instance.dump() << first->params.dump();
  d << " time=" << t << "s";
  return {res.hard_violations == 0 && t < 600, d.str()};
}

Outcome c5() {
  Rng rng(2024);
  std::vector<ExperimentReport> recs;
  int sets = 0;
  bool certs = true;
  while (sets < 60) {
    int n = 4 + sets % 9;
    std::vector<int64_t> v;
    for (int i = 0; i < n; ++i) v.push_back(rng.range(1, 1 << 20));
    auto lam = GroundSet::ints(v);
    if (lam.size() != static_cast<size_t>(n)) continue;
    auto c = is_k_dissociated(lam, 1);
    if (c.verdict != Verdict::Dissociated) continue;
    // certificate checked independently
    certs = certs && dissociated1(lam.scalars());
    ++sets;
    for (int k = 2; k <= 4; ++k) {
      ExperimentReport r;
      r.claim_id = "rudin";
      r.fitted_constant = static_cast<double>(to_ld(rudin_ratio(lam, k)));
      recs.push_back(r);
    }
  }
  auto f = fit_constant("rudin", recs);
  std::ostringstream d;
  d << " sets=" << sets << " records=" << recs.size() << " max=" << f.value << " q50=" << f.q50;
  return {certs && sets >= 50 && std::isfinite(f.value) && f.finite == recs.size(), d.str()};
}

Outcome c6() {
  std::vector<GroundSet> fam = {GroundSet::interval(1, 16), GroundSet::interval(1, 24),
                                cube(GroundSet::ints({1, 10, 100, 1000})),
                                GroundSet::ints({1, 3, 9, 27, 81, 243, 729, 2187, 6561, 19683})};
  Rng rng(6);
  for (int i = 0; i < 8; ++i) {
    std::vector<int64_t> v;
    for (int j = 0; j < 12 + i; ++j) v.push_back(rng.range(1, 100000));
    fam.push_back(GroundSet::ints(v));
  }
  size_t checked = 0, bad = 0;
  for (const auto& a : fam)
    for (int k : {1, 2})
      for (const auto& r : verify_growth_bounds(a, 3, k, default_budget(), size_t{1} << 20))
        if (r.claim_id == "split_sumset") {
          ++checked;
          if (r.violated) ++bad;
        }
  std::ostringstream d;
  d << " sets=" << fam.size() << " configurations=" << checked << " violations=" << bad;
  return {checked > 0 && bad == 0, d.str()};
}

Outcome c7() {
  int bad = 0;
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    Rng rng(seed);
    int n = 1 + static_cast<int>(rng.below(40));
    std::vector<int64_t> v;
    for (int i = 0; i < n; ++i) v.push_back(rng.range(0, 300));
    auto a = GroundSet::ints(v);
    if (ratio_box(a).n != oracle::ratio_box(a.scalars())) ++bad;
  }
  int64_t ap = ratio_box(GroundSet::ints({7, 10, 13, 16, 19})).n;
  std::ostringstream d;
  d << " mismatches=" << bad << "/100 ap5=" << ap;
  return {bad == 0 && ap == 4, d.str()};
}

Outcome c8() {
  std::vector<int64_t> gp;
  for (int i = 0; i < 16; ++i) gp.push_back(int64_t{1} << i);
  std::vector<std::pair<std::string, GroundSet>> cases = {
      {"powers2", GroundSet::ints(gp)},
      {"primes16", GroundSet::ints(first_primes(16))},
      {"interval16", GroundSet::interval(1, 16)}};
  auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream d;
  for (const auto& [name, a] : cases) {
    auto r = dec_tk(a, 2, 2);
    bool part = set_union(r.B, r.C) == a && set_intersection(r.B, r.C).empty();
    bool en = r.ts_add_B == oracle::energy(r.B.scalars(), 2) && r.tq_add_B == oracle::energy(r.B.scalars(), 2) &&
              r.ts_mul_C == (r.C.empty() ? BigInt(0) : oracle::mult_energy(r.C.scalars(), 2));
    // the trace chains: each piece leaves C, the pieces make up B
    size_t c = a.size(), dsum = 0;
    for (const auto& it : r.iterations) {
      en = en && it.c_size == c;
      c -= it.d_size;
      dsum += it.d_size;
    }
    en = en && c == r.C.size() && dsum == r.B.size();
    if (!r.iterations.empty()) en = en && r.iterations[0].ts_mul_c == oracle::mult_energy(a.scalars(), 2);
    bool bounds = true;
    if (!r.iterations.empty()) {
      bounds = (r.max_iter_hit || Rational(r.ts_mul_C) <= r.threshold) &&
               r.tq_add_B < ipow(BigInt(r.B.size()), 3);
    }
    ok = ok && part && en && bounds;
    d << " " << name << ":|B|=" << r.B.size() << ",|C|=" << r.C.size() << ",peels=" << r.iterations.size()
      << ",partition=" << part << ",energies=" << en << ",bounds=" << bounds;
  }
  double t = secs(t0);
  d << " time=" << t << "s";
  return {ok && t < 300, d.str()};
}

Outcome c9() {
  int done = 0, bad = 0, tried = 0;
  for (uint64_t seed = 1; done < 20 && tried < 200; ++seed, ++tried) {
    Rng rng(seed);
    // AP plus noise; B is a chunk of the AP
    int64_t st = rng.range(1, 9), len = rng.range(10, 20);
    std::set<int64_t> av, bv;
    for (int64_t i = 0; i < len; ++i) av.insert(i * st);
    int noise = static_cast<int>(rng.range(2, 8));
    for (int i = 0; i < noise; ++i) av.insert(rng.range(-500, 500));
    int64_t b0 = rng.range(0, len / 2), bl = rng.range(4, len / 2 + 2);
    for (int64_t i = b0; i < b0 + bl && i < len; ++i) bv.insert(i * st);
    V a(av.begin(), av.end()), b(bv.begin(), bv.end());
    BigInt e = oracle::mixed_energy({a, b, a, b});
    Rational K(BigInt(a.size()) * b.size() * b.size(), e);
    // verified precondition
    if (e * K < Rational(BigInt(a.size()) * b.size() * b.size())) continue;
    BsgResult r;
    try {
      r = bsg_asymmetric(GroundSet::ints(a), GroundSet::ints(b), K, 2);
    } catch (const Error&) {
      ++bad;
      ++done;
      continue;
    }
    ++done;
    if (r.H.empty()) {
      ++bad;
      continue;
    }
    V h = r.H.scalars();
    size_t hh = oracle::sumset(h, 2, 0).size();
    size_t best = 0;
    for (auto x : b)
      for (auto y : h) {
        size_t c = 0;
        for (auto z : h)
          if (bv.count(z + x - y)) ++c;
        best = std::max(best, c);
      }
    bool ok = r.hh_size == hh && r.doubling == Rational(BigInt(hh), BigInt(h.size())) && r.intersection == best &&
              r.energy == e;
    if (!ok) ++bad;
  }
  std::ostringstream d;
  d << " instances=" << done << " mismatches=" << bad;
  return {done == 20 && bad == 0, d.str()};
}

Outcome c10() {
  std::vector<int64_t> shifts;
  for (int x = -20; x <= 20; ++x) shifts.push_back(x);
  auto base = GroundSet::interval(1, 10);
  double worst = 0, worst2 = 0;
  std::string arg, arg2;
  int zero_bad = 0, zero_seen = 0;
  for (uint64_t m = 1; m < 1024; ++m) {
    auto a = base.from_mask(m);
    for (const auto& r : dim_shift_ratio(a, shifts)) {
      if (r.claim_id == "shift_zero") {
        ++zero_seen;
        if (r.violated) ++zero_bad;
      } else if (r.claim_id == "shift_dim") {
        if (!(r.fitted_constant <= worst)) {
          worst = r.fitted_constant;
          arg = a.str();
        }
        if (a.size() >= 2 && r.fitted_constant > worst2) {
          worst2 = r.fitted_constant;
          arg2 = a.str();
        }
      }
    }
  }
  std::ostringstream d;
  d << " max_ratio=" << worst << " at " << arg << " max_ratio(|A|>=2)=" << worst2 << " at " << arg2
    << " zero_shift_checks=" << zero_seen << " zero_shift_violations=" << zero_bad;
  return {std::isfinite(worst) && zero_bad == 0 && zero_seen == 1023, d.str()};
}

Outcome c11() {
  int total = 0, bad = 0;
  auto base = GroundSet::interval(1, 12);
  for (uint64_t m = 1; m < 4096; ++m) {
    if (__builtin_popcountll(m) > 8) continue;
    auto a = base.from_mask(m);
    ++total;
    try {
      auto f = freiman_model(a, 2);
      if (!f.verified || f.a_star.empty() || !f.a_star.is_subset_of(a) || !oracle::iso2(f.a_star.scalars(), f.map, f.m))
        ++bad;
    } catch (const Error&) {
      ++bad;
    }
  }
  std::ostringstream d;
  d << " sets=" << total << " failures=" << bad;
  return {bad == 0, d.str()};
}

Outcome c12() {
  std::string out[2];
  for (int i = 0; i < 2; ++i) {
    std::string path = "acceptance_core_" + std::to_string(i) + ".json";
    std::string cmd = std::string("\"") + ADLAB_CLI + "\" --seed 7 verify --suite core --out " + path + " > /dev/null";
    int rc = std::system(cmd.c_str());
    if (rc != 0) return {false, " cli exit status " + std::to_string(rc)};
    std::ifstream in(path);
    out[i] = strip_timing(json::parse(in)).dump(1);
  }
  bool same = out[0] == out[1];
  return {same && !out[0].empty(), " bytes=" + std::to_string(out[0].size()) + (same ? " identical" : " differ")};
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::pair<int, std::function<Outcome()>>> all = {{1, c1}, {2, c2},   {3, c3},   {4, c4},
                                                               {5, c5}, {6, c6},   {7, c7},   {8, c8},
                                                               {9, c9}, {10, c10}, {11, c11}, {12, c12}};
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failed = 0;
  for (auto& [id, fn] : all) {
    if (!only.empty() && !only.count(id)) continue;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string(" exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("criterion %2d: %s%s\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  return failed;
}

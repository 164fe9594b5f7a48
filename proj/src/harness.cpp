#include "adlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <cmath>
#include <set>
#include <thread>

#include "adlab/dissociation.hpp"
#include "adlab/energy.hpp"
#include "adlab/modular.hpp"

namespace adlab {

json to_json(const InstanceSpec& s) {
  json j = {{"generator", s.generator}, {"params", s.params}};
  if (s.seed) j["seed"] = s.seed;
  return j;
}

InstanceSpec spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("generator")) throw InvalidInput("instance spec needs a generator");
  InstanceSpec s;
  s.generator = j.at("generator").get<std::string>();
  if (j.contains("params")) s.params = j.at("params");
  if (j.contains("seed")) s.seed = j.at("seed").get<uint64_t>();
  return s;
}

namespace {

int64_t pint(const json& p, const char* key) {
  if (!p.contains(key) || !p.at(key).is_number_integer())
    throw InvalidInput(std::string("generator parameter '") + key + "' missing or not an integer");
  return p.at(key).get<int64_t>();
}

int64_t pint_or(const json& p, const char* key, int64_t dflt) { return p.contains(key) ? pint(p, key) : dflt; }

std::vector<int64_t> plist(const json& p, const char* key) {
  if (!p.contains(key) || !p.at(key).is_array())
    throw InvalidInput(std::string("generator parameter '") + key + "' missing or not a list");
  std::vector<int64_t> v;
  for (const auto& x : p.at(key)) {
    if (!x.is_number_integer()) throw InvalidInput(std::string("non-integer entry in '") + key + "'");
    v.push_back(x.get<int64_t>());
  }
  return v;
}

}  // namespace

GroundSet generate(const InstanceSpec& spec) {
  const json& p = spec.params;
  const std::string& g = spec.generator;
  if (g == "interval") {
    if (p.contains("n")) {
      int64_t n = pint(p, "n");
      if (n < 1) throw InvalidInput("interval needs n >= 1");
      return GroundSet::interval(1, n);
    }
    int64_t lo = pint(p, "lo"), hi = pint(p, "hi");
    if (hi < lo) throw InvalidInput("interval needs lo <= hi");
    return GroundSet::interval(lo, hi);
  }
  if (g == "cube") {
    auto gens = plist(p, "gens");
    if (gens.size() > 24) throw InvalidInput("cube takes at most 24 generators");
    return cube(GroundSet::ints(gens));
  }
  if (g == "ap_sum") {
    // H_1 + ... + H_K with H_i = d_i.{0..L_i-1}; default steps keep the sum direct
    auto lens = plist(p, "lengths");
    std::vector<int64_t> steps;
    if (p.contains("steps")) {
      steps = plist(p, "steps");
      if (steps.size() != lens.size()) throw InvalidInput("ap_sum: lengths and steps differ in size");
    } else {
      int64_t reach = 0;
      for (int64_t L : lens) {
        int64_t d = add_ck(reach, 1);
        steps.push_back(d);
        reach = add_ck(reach, mul_ck(d, L - 1));
      }
    }
    GroundSet s = GroundSet::ints({0});
    for (size_t i = 0; i < lens.size(); ++i) {
      if (lens[i] < 1) throw InvalidInput("ap_sum lengths must be >= 1");
      std::vector<int64_t> h;
      for (int64_t j = 0; j < lens[i]; ++j) h.push_back(mul_ck(steps[i], j));
      s = sumset(s, GroundSet::ints(h));
    }
    return s;
  }
  if (g == "es_product") {
    int64_t s = pint(p, "s"), h = pint(p, "h");
    if (s < 1 || h < 1 || s > 12) throw InvalidInput("es_product needs 1 <= s <= 12, h >= 1");
    auto primes = first_primes(static_cast<int>(s));
    std::vector<int64_t> cur{1};
    for (int64_t q : primes) {
      std::vector<int64_t> nxt;
      for (int64_t c : cur) {
        int64_t v = c;
        for (int64_t l = 1; l <= h; ++l) {
          v = mul_ck(v, q);
          nxt.push_back(v);
        }
      }
      cur = std::move(nxt);
    }
    return GroundSet::ints(cur);
  }
  if (g == "subgroup") return subgroup(pint(p, "p"), pint(p, "t"));
  if (g == "random") {
    int64_t n = pint(p, "n"), lo = pint(p, "lo"), hi = pint(p, "hi");
    if (n < 0 || hi < lo || static_cast<uint64_t>(n) > static_cast<uint64_t>(hi - lo) + 1)
      throw InvalidInput("random: need 0 <= n <= hi - lo + 1");
    Rng rng(spec.seed);
    std::set<int64_t> got;
    while (static_cast<int64_t>(got.size()) < n) got.insert(rng.range(lo, hi));
    return GroundSet::ints(std::vector<int64_t>(got.begin(), got.end()));
  }
  if (g == "random_mod") {
    int64_t n = pint(p, "n"), N = pint(p, "N");
    if (N < 1 || n < 0 || n > N) throw InvalidInput("random_mod: need 0 <= n <= N");
    Rng rng(spec.seed);
    std::set<int64_t> got;
    while (static_cast<int64_t>(got.size()) < n) got.insert(static_cast<int64_t>(rng.below(N)));
    return GroundSet::residues(N, std::vector<int64_t>(got.begin(), got.end()));
  }
  if (g == "gp") {
    int64_t base = pint(p, "base"), len = pint(p, "len"), start = pint_or(p, "start", 1);
    if (len < 1 || start == 0 || base == 0) throw InvalidInput("gp needs len >= 1 and nonzero base, start");
    std::vector<int64_t> v{start};
    for (int64_t i = 1; i < len; ++i) v.push_back(mul_ck(v.back(), base));
    return GroundSet::ints(v);
  }
  if (g == "primes") {
    int64_t c = pint(p, "count");
    if (c < 1 || c > 100000) throw InvalidInput("primes: count out of range");
    return GroundSet::ints(first_primes(static_cast<int>(c)));
  }
  if (g == "subset") {
    // elements of [n] picked by the bits of mask
    int64_t n = pint(p, "n"), mask = pint(p, "mask");
    if (n < 1 || n > 62 || mask < 0) throw InvalidInput("subset: need 1 <= n <= 62, mask >= 0");
    return GroundSet::interval(1, n).from_mask(static_cast<uint64_t>(mask));
  }
  if (g == "explicit") {
    auto el = plist(p, "elements");
    if (p.contains("modulus")) return GroundSet::residues(pint(p, "modulus"), el);
    return GroundSet::ints(el);
  }
  throw InvalidInput("unknown generator '" + g + "'");
}

// registry -----------------------------------------------------------------------

const std::vector<ClaimInfo>& claim_registry() {
  using C = ClaimClass;
  using D = Direction;
  static const std::vector<ClaimInfo> reg = {
      {"plunnecke", C::Hard, D::Max, "|nA - mA| <= K^(n+m) |A| with K = |2A|/|A|"},
      {"growth_monotone", C::Hard, D::Min, "|nA| <= |(n+1)A|"},
      {"holder", C::Hard, D::Max, "T_k(A_1..A_2k)^(2k) <= prod T_k(A_j)"},
      {"dim_chain", C::Hard, D::Max, "d*(A) <= d(A) <= dim(A)"},
      {"dim_counting", C::Hard, D::Min, "(2k+1)^dim_k(A) >= |A|"},
      {"dirichlet_dim", C::Hard, D::Min, "dim(A) >= s log(N-1) / log(dim(A) T), T = max(1, |A|/D_s,N(A))"},
      {"energy_dim", C::Hard, D::Min, "T_k(A) (2k+1)^dim(A) >= |A|^(2k)"},
      {"certificates", C::Hard, D::Max, "witnesses and relations re-verify"},
      {"split_sumset", C::Hard, D::Min, "|nS| >= prod k^n |L_j|^n / (2^n n!) for split dissociated sets"},
      {"partition", C::Hard, D::Max, "dissociated peeling partitions A"},
      {"dec_partition", C::Hard, D::Max, "B, C partition A; energies recomputed; strict drop after a peel"},
      {"freiman_iso", C::Hard, D::Min, "the modular model is a 2-isomorphism"},
      {"shift_zero", C::Hard, D::Max, "dim(A + 0) = dim(A)"},
      {"growth_stage1", C::Fitted, D::Max, "|nX| >= |A| (kd / (C log|A|))^(n-1)"},
      {"growth_stage2", C::Fitted, D::Max, "|nX| >= (kd / (C n))^(n-1)"},
      {"growth_stage3", C::Fitted, D::Max, "|n'A| >= exp(dim_k' log dim_k' / C)"},
      {"dim_compare", C::Fitted, D::Max, "dim(A) <= C dim_k(A) log(k dim_k(A))"},
      {"sigma_dim", C::Fitted, D::Min, "dim(Sigma_dim_l(A)) >= c min(dim_l log dim_l, l)"},
      {"cube_dim", C::Fitted, D::Max, "dim_k(A) <= C dim(Q) / log dim(A), Q the cube on a k-dissociated witness"},
      {"span_growth", C::Fitted, D::Max, "|nA| <= k (2nk+1)^dim_k(A), k = d log d"},
      {"small_doubling_dim", C::Fitted, D::Max,
       "dim_k(A) <= C (log|A| / loglog|A| + K log^6(2K) loglog(4K)), k = d log d"},
      {"poly_growth_dim", C::Fitted, D::Max, "dim_k(A) <= C (d log d + log|A|) / log(k+1)"},
      {"poly_growth_exponent", C::Fitted, D::Max, "d <= C dim_k(A) log(k+1)"},
      {"energy_dim_upper", C::Fitted, D::Max, "T_k(A) <= (16 C k / (d_a (1 - a^(1/2k))^2))^k |A|^(2k)"},
      {"energy_dim_lower", C::Fitted, D::Min, "T_m(A) >= c |A|^(2m) / (2d 4^m e^d binom(d+1, 2m))"},
      {"shift_dim", C::Fitted, D::Max, "dim(A+x) and dim(A) agree up to a constant factor"},
      {"sumset_dim_lower", C::Fitted, D::Max, "dim(A) <= C dim(A+X)"},
      {"sumset_dim_upper", C::Fitted, D::Max, "dim(A+X) <= C |X| dim(A)"},
      {"fourier_dim", C::Fitted, D::Min, "max |A^(r)| <= |A|/4 implies dim(A) >= c log N"},
      {"mult_doubling_energy", C::Fitted, D::Max, "T_2(A)^(1/2) <= C D^6 log^2 d |A|^2 / d, D = |AA|/|A|"},
      {"subgroup_growth", C::Fitted, D::Min, "|nG| >= c (t / (n log^3 t))^n"},
      {"subgroup_dim", C::Fitted, D::Min, "dim(G) >= c min(log p / loglog p, log p / log t, phi(t))"},
      {"subgroup_power", C::Fitted, D::Max, "log|nG| / log p"},
      {"subgroup_dim_alpha", C::Fitted, D::Min, "dim_a(G) >= c a dim(G) / log t"},
      {"ratio_box", C::Fitted, D::Min, "log n >= c log|A| / log K, [n]/[n] inside (A-A)/(A-A)"},
      {"diff_in_subgroup", C::Fitted, D::Max,
       "log|A| <= C log K sqrt(log(1/d) log p / d), A - A inside a subgroup of index p^d"},
      {"sparse_dim_add", C::Fitted, D::Min, "dim(A) >= c log|A| log(log|A| / log K_mul)"},
      {"sparse_dim_mul", C::Fitted, D::Min, "dim_mul(A) >= c log|A| log(log|A| / log K_add)"},
      {"sum_product_dim", C::Fitted, D::Min,
       "max(dim(A), dim_mul(A)) >= c log|A| sqrt(loglog|A| / logloglog|A|)"},
      {"dec_energy", C::Fitted, D::Min, "max(T_s(B), T_s^x(C)) <= |A|^(2s - delta); delta measured"},
      {"sidon", C::Fitted, D::Min, "max(|B_add|, |B_mul|) >= |A|^(eta/h) for Sidon B inside A"},
      {"rudin", C::Fitted, D::Max, "T_k(L) <= C^k k^k |L|^k for dissociated L; constant is T_k / (k^k |L|^k)"},
      {"beta_dim", C::Fitted, D::Max, "beta_hat(A) <= C 2^dim(A); beta_hat >= beta, so one-sided"},
  };
  return reg;
}

const ClaimInfo& claim_info(const std::string& id) {
  for (const auto& c : claim_registry())
    if (c.id == id) return c;
  throw InvalidInput("unknown claim id '" + id + "'");
}

std::vector<std::string> hard_claims() {
  std::vector<std::string> v;
  for (const auto& c : claim_registry())
    if (c.cls == ClaimClass::Hard) v.push_back(c.id);
  return v;
}

std::vector<std::string> all_claims() {
  std::vector<std::string> v;
  for (const auto& c : claim_registry()) v.push_back(c.id);
  return v;
}

// context ---------------------------------------------------------------------------

InstanceCtx::InstanceCtx(InstanceSpec spec, GroundSet a, const SuiteOptions& opt)
    : spec_(std::move(spec)), a_(std::move(a)), opt_(opt) {
  inst_ = to_json(spec_);
  json sj = set_json(a_);
  inst_["ambient"] = sj["ambient"];
  inst_["set"] = sj["set"];
}

const DimensionBounds& InstanceCtx::dim(int k) {
  auto it = dims_.find(k);
  if (it == dims_.end()) it = dims_.emplace(k, dim_k_exact(a_, k, opt_.budget)).first;
  return it->second;
}

const BigInt& InstanceCtx::energy(int k) {
  auto it = energies_.find(k);
  if (it == energies_.end()) it = energies_.emplace(k, t_k(a_, k)).first;
  return it->second;
}

const std::vector<ExperimentReport>& InstanceCtx::memo(
    const std::string& key, const std::function<std::vector<ExperimentReport>()>& make) {
  auto it = memo_.find(key);
  if (it == memo_.end()) it = memo_.emplace(key, make()).first;
  return it->second;
}

// runner ----------------------------------------------------------------------------

SuiteResult run_suite(const std::vector<std::string>& claims, const std::vector<InstanceSpec>& instances,
                      const SuiteOptions& opt) {
  for (const auto& c : claims) claim_info(c);
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::vector<ExperimentReport>> per(instances.size());
  std::vector<std::map<std::string, double>> ms(instances.size());

  auto work = [&](size_t i) {
    auto& out = per[i];
    GroundSet a;
    try {
      a = generate(instances[i]);
    } catch (const std::exception& e) {
      ExperimentReport r;
      r.claim_id = "generate";
      r.instance = to_json(instances[i]);
      r.fitted_constant = NAN;
      r.witnesses = {{"skipped", e.what()}};
      out.push_back(r);
      return;
    }
    InstanceCtx ctx(instances[i], a, opt);
    for (const auto& c : claims) {
      auto c0 = std::chrono::steady_clock::now();
      struct Tick {
        double& acc;
        std::chrono::steady_clock::time_point t;
        ~Tick() { acc += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t).count(); }
      } tick{ms[i][c], c0};
      try {
        auto recs = run_claim(c, ctx);
        for (auto& r : recs) {
          r.instance = ctx.instance_json();
          out.push_back(std::move(r));
        }
      } catch (const std::exception& e) {
        ExperimentReport r;
        r.claim_id = c;
        r.instance = ctx.instance_json();
        r.fitted_constant = NAN;
        const Error* err = dynamic_cast<const Error*>(&e);
        r.witnesses = {{"skipped", e.what()}, {"error", err ? err->kind() : "exception"}};
        // a broken monotone chain is itself the violation
        if (dynamic_cast<const VerificationFailed*>(&e)) r.violated = true;
        out.push_back(r);
      }
    }
  };

  unsigned nt = opt.threads > 0 ? static_cast<unsigned>(opt.threads) : std::thread::hardware_concurrency();
  nt = std::max(1u, std::min<unsigned>(nt, static_cast<unsigned>(std::max<size_t>(1, instances.size()))));
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < nt; ++t)
    pool.emplace_back([&] {
      for (size_t i; (i = next.fetch_add(1)) < instances.size();) work(i);
    });
  for (auto& th : pool) th.join();

  SuiteResult res;
  for (const auto& m : ms)
    for (const auto& [c, t] : m) res.claim_ms[c] += t;
  for (auto& v : per)
    for (auto& r : v) {
      if (r.witnesses.contains("skipped")) ++res.skipped;
      bool hard = r.claim_id != "generate" && claim_info(r.claim_id).cls == ClaimClass::Hard;
      if (hard && r.violated) ++res.hard_violations;
      res.records.push_back(std::move(r));
    }
  res.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

FitSummary fit_constant(const std::string& claim, const std::vector<ExperimentReport>& records) {
  const ClaimInfo& info = claim_info(claim);
  FitSummary f;
  f.claim = claim;
  f.dir = info.dir;
  std::vector<double> xs;
  for (const auto& r : records) {
    if (r.claim_id != claim) continue;
    ++f.records;
    if (r.violated) ++f.violations;
    if (std::isfinite(r.fitted_constant)) xs.push_back(r.fitted_constant);
  }
  if (f.records == 0) throw EmptySet("no records for claim '" + claim + "'");
  f.finite = xs.size();
  if (xs.empty()) {
    f.value = f.q10 = f.q50 = f.q90 = f.min = f.max = NAN;
    return f;
  }
  std::sort(xs.begin(), xs.end());
  // nearest-rank quantiles
  auto q = [&](double p) {
    size_t i = static_cast<size_t>(std::ceil(p * xs.size()));
    return xs[std::min(xs.size() - 1, i == 0 ? 0 : i - 1)];
  };
  f.min = xs.front();
  f.max = xs.back();
  f.q10 = q(0.1);
  f.q50 = q(0.5);
  f.q90 = q(0.9);
  f.value = info.dir == Direction::Max ? f.max : f.min;
  return f;
}

json to_json(const FitSummary& f) {
  return {{"claim_id", f.claim},
          {"class", claim_info(f.claim).cls == ClaimClass::Hard ? "hard" : "fitted"},
          {"direction", f.dir == Direction::Max ? "max" : "min"},
          {"records", f.records},
          {"finite", f.finite},
          {"violations", f.violations},
          {"value", num(f.value)},
          {"q10", num(f.q10)},
          {"q50", num(f.q50)},
          {"q90", num(f.q90)},
          {"min", num(f.min)},
          {"max", num(f.max)}};
}

// suites ----------------------------------------------------------------------------

namespace {

InstanceSpec mk(const std::string& g, json p, uint64_t seed = 0) { return {g, std::move(p), seed}; }

uint64_t derive(uint64_t seed, uint64_t i) {
  // splitmix64 step
  uint64_t z = seed * 0x9E3779B97F4A7C15ULL + i + 1;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<int64_t> divisors(int64_t n) {
  std::vector<int64_t> d;
  for (int64_t i = 1; i <= n; ++i)
    if (n % i == 0) d.push_back(i);
  return d;
}

}  // namespace

std::vector<InstanceSpec> suite_instances(const std::string& name, uint64_t seed) {
  std::vector<InstanceSpec> v;
  if (name == "tiny") {
    v.push_back(mk("interval", {{"n", 4}}));
    v.push_back(mk("cube", {{"gens", {1, 10, 100}}}));
    v.push_back(mk("subgroup", {{"p", 7}, {"t", 3}}));
    v.push_back(mk("random", {{"n", 8}, {"lo", 1}, {"hi", 1000}}, derive(seed, 0)));
    return v;
  }
  if (name == "exhaustive10") {
    for (int64_t m = 1; m < 1024; ++m) v.push_back(mk("subset", {{"n", 10}, {"mask", m}}));
    return v;
  }
  if (name == "unconditional") {
    for (int64_t m = 1; m < 1024; ++m) v.push_back(mk("subset", {{"n", 10}, {"mask", m}}));
    for (int i = 0; i < 200; ++i)
      v.push_back(mk("random", {{"n", 2 + i % 23}, {"lo", 1}, {"hi", 1000000}}, derive(seed, 1000 + i)));
    for (int64_t p : {7, 13, 31, 61})
      for (int64_t t : divisors(p - 1)) v.push_back(mk("subgroup", {{"p", p}, {"t", t}}));
    return v;
  }
  if (name == "core") {
    for (int n : {3, 4, 8, 12, 16}) v.push_back(mk("interval", {{"n", n}}));
    v.push_back(mk("cube", {{"gens", {1, 10, 100}}}));
    v.push_back(mk("cube", {{"gens", {1, 10, 100, 1000}}}));
    v.push_back(mk("ap_sum", {{"lengths", {4, 4}}}));
    v.push_back(mk("ap_sum", {{"lengths", {3, 3, 3}}}));
    v.push_back(mk("es_product", {{"s", 2}, {"h", 2}}));
    v.push_back(mk("es_product", {{"s", 2}, {"h", 3}}));
    v.push_back(mk("es_product", {{"s", 3}, {"h", 2}}));
    v.push_back(mk("subgroup", {{"p", 7}, {"t", 3}}));
    v.push_back(mk("subgroup", {{"p", 13}, {"t", 4}}));
    v.push_back(mk("subgroup", {{"p", 31}, {"t", 5}}));
    v.push_back(mk("subgroup", {{"p", 31}, {"t", 6}}));
    v.push_back(mk("subgroup", {{"p", 61}, {"t", 10}}));
    v.push_back(mk("subgroup", {{"p", 61}, {"t", 30}}));
    v.push_back(mk("subgroup", {{"p", 101}, {"t", 25}}));
    for (int i = 0; i < 4; ++i)
      v.push_back(mk("random", {{"n", 12}, {"lo", 1}, {"hi", 1000}}, derive(seed, i)));
    for (int i = 0; i < 2; ++i)
      v.push_back(mk("random", {{"n", 16}, {"lo", 1}, {"hi", 1000000}}, derive(seed, 10 + i)));
    v.push_back(mk("random_mod", {{"n", 8}, {"N", 101}}, derive(seed, 20)));
    v.push_back(mk("gp", {{"base", 2}, {"len", 12}}));
    v.push_back(mk("gp", {{"base", 3}, {"len", 8}}));
    v.push_back(mk("primes", {{"count", 12}}));
    v.push_back(mk("explicit", {{"elements", {0, 1, 2}}, {"modulus", 31}}));
    v.push_back(mk("explicit", {{"elements", {0, 1, 3, 4}}, {"modulus", 61}}));
    return v;
  }
  throw InvalidInput("unknown suite '" + name + "'");
}

std::vector<std::string> suite_claims(const std::string& name) {
  if (name == "unconditional")
    return {"plunnecke", "holder", "growth_monotone", "dim_chain", "dim_counting", "dirichlet_dim", "energy_dim"};
  if (name == "exhaustive10") return hard_claims();
  if (name == "core" || name == "tiny") return all_claims();
  throw InvalidInput("unknown suite '" + name + "'");
}

uint64_t suite_budget(const std::string& name) {
  if (std::getenv("ADLAB_BUDGET") || name != "unconditional") return default_budget();
  return uint64_t{1} << 22;
}

json suite_report(const std::string& name, const std::vector<std::string>& claims, const SuiteOptions& opt,
                  const SuiteResult& res) {
  json j;
  j["schema"] = 1;
  j["suite"] = name;
  j["options"] = {{"seed", opt.seed},   {"budget", opt.budget}, {"n_max", opt.n_max},
                  {"k_max", opt.k_max}, {"cap", opt.cap}};
  json cl = json::array();
  for (const auto& c : claims) {
    const ClaimInfo& ci = claim_info(c);
    cl.push_back({{"id", ci.id},
                  {"class", ci.cls == ClaimClass::Hard ? "hard" : "fitted"},
                  {"direction", ci.dir == Direction::Max ? "max" : "min"},
                  {"statement", ci.statement}});
  }
  j["claims"] = cl;
  json recs = json::array();
  for (const auto& r : res.records) recs.push_back(to_json(r));
  j["records"] = recs;
  json fits = json::array();
  for (const auto& c : claims) {
    bool any = std::any_of(res.records.begin(), res.records.end(),
                           [&](const ExperimentReport& r) { return r.claim_id == c; });
    if (any) fits.push_back(to_json(fit_constant(c, res.records)));
  }
  j["summary"] = {{"records", res.records.size()},
                  {"hard_violations", res.hard_violations},
                  {"skipped", res.skipped},
                  {"fits", fits}};
  json pc = json::object();
  for (const auto& [c, t] : res.claim_ms) pc[c] = t;
  j["timing"] = {{"wall_ms", {{"total", res.wall_ms}, {"per_claim", pc}}}};
  return j;
}

json strip_timing(const json& j) {
  if (j.is_object()) {
    json o = json::object();
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() == "wall_ms") continue;
      json v = strip_timing(it.value());
      if (it.key() == "timing" && v.empty()) continue;
      o[it.key()] = v;
    }
    return o;
  }
  if (j.is_array()) {
    json a = json::array();
    for (const auto& x : j) a.push_back(strip_timing(x));
    return a;
  }
  return j;
}

}  // namespace adlab

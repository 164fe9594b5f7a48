#include "adlab/modular.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <complex>

#include <fftw3.h>

#include "adlab/dissociation.hpp"

namespace adlab {

namespace {

std::vector<int64_t> prime_factors(int64_t n) {
  std::vector<int64_t> f;
  for (int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    f.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) f.push_back(n);
  return f;
}

int64_t euler_phi(int64_t n) {
  int64_t r = n;
  for (int64_t p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

}  // namespace

int64_t primitive_root(int64_t p) {
  if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  auto fs = prime_factors(p - 1);
  for (int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (int64_t q : fs)
      if (mod_pow(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw Error("no primitive root found");
}

GroundSet subgroup(int64_t p, int64_t t) {
  if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  if (t < 1 || (p - 1) % t) throw InvalidInput("t must divide p - 1");
  int64_t h = mod_pow(primitive_root(p), (p - 1) / t, p);
  std::vector<int64_t> v;
  int64_t x = 1;
  for (int64_t i = 0; i < t; ++i) {
    v.push_back(x);
    x = mod_mul(x, h, p);
  }
  return GroundSet::residues(p, std::move(v));
}

namespace {

std::vector<int64_t> residues_of(const GroundSet& a, int64_t& n) {
  if (a.ambient().residues()) {
    if (n == 0) n = a.ambient().modulus;
    if (n != a.ambient().modulus) throw AmbientMismatch("N differs from the set's modulus");
    return a.flat();
  }
  require_scalar_z(a, "dirichlet_min");
  if (n < 2) throw InvalidInput("N must be >= 2 for integer sets");
  std::vector<int64_t> r;
  for (int64_t x : a.flat()) r.push_back(mod_norm(x, n));
  return r;
}

}  // namespace

DirichletValue dirichlet_min(const GroundSet& a, int64_t n, double s) {
  if (!(s > 0)) throw InvalidInput("s must be positive");
  std::vector<int64_t> r = residues_of(a, n);
  if (n < 2) throw InvalidInput("N must be >= 2");
  if (a.empty()) throw EmptySet("dirichlet_min of the empty set");
  DirichletValue out;
  std::vector<int64_t> cur(r.size(), 0);
  const bool integral = std::floor(s) == s && s <= 64;
  if (integral) {
    const unsigned e = static_cast<unsigned>(s);
    // does |A| (N/2)^s fit in 126 bits?
    long double bits = std::log2(static_cast<long double>(r.size())) + e * std::log2(n / 2.0L + 1);
    const bool small = bits < 125;
    BigInt best = -1;
    unsigned __int128 best_small = 0;
    bool have = false;
    for (int64_t q = 1; q < n; ++q) {
      unsigned __int128 acc_small = 0;
      BigInt acc = 0;
      for (size_t i = 0; i < r.size(); ++i) {
        cur[i] += r[i];
        if (cur[i] >= n) cur[i] -= n;
        int64_t d = std::min(cur[i], n - cur[i]);
        if (small) {
          unsigned __int128 t = 1;
          for (unsigned j = 0; j < e; ++j) t *= static_cast<uint64_t>(d);
          acc_small += t;
        } else {
          acc += ipow(BigInt(d), e);
        }
      }
      if (small) {
        if (!have || acc_small < best_small) {
          best_small = acc_small;
          out.argmin_q = q;
          have = true;
        }
      } else if (!have || acc < best) {
        best = acc;
        out.argmin_q = q;
        have = true;
      }
    }
    if (small) {
      BigInt hi = static_cast<uint64_t>(best_small >> 64);
      best = (hi << 64) + BigInt(static_cast<uint64_t>(best_small));
    }
    out.exact = true;
    out.value = Rational(best, ipow(BigInt(n), e));
    out.approx = to_ld(out.value);
    return out;
  }
  long double best = 0;
  bool have = false;
  for (int64_t q = 1; q < n; ++q) {
    long double acc = 0;
    for (size_t i = 0; i < r.size(); ++i) {
      cur[i] += r[i];
      if (cur[i] >= n) cur[i] -= n;
      int64_t d = std::min(cur[i], n - cur[i]);
      acc += std::pow(static_cast<long double>(d) / n, static_cast<long double>(s));
    }
    if (!have || acc < best) {
      best = acc;
      out.argmin_q = q;
      have = true;
    }
  }
  out.exact = false;
  out.approx = best;
  out.err_bound = static_cast<long double>(r.size()) * 8 * LDBL_EPSILON * (best + 1);
  return out;
}

DirichletDimCheck verify_dirichlet_dim(const GroundSet& a, int64_t n, int s, uint64_t budget) {
  if (s < 1) throw InvalidInput("s must be a positive integer");
  std::vector<int64_t> r = residues_of(a, n);
  GroundSet an = GroundSet::residues(n, r);
  DirichletDimCheck out;
  out.D = dirichlet_min(an, n, s);
  DimensionBounds dim = dim_k_exact(an, 1, budget);
  if (!dim.exact) throw BudgetExceeded("dim of A mod N not settled within budget");
  out.d = dim.upper;
  Rational T = Rational(BigInt(an.size())) / out.D.value;
  if (out.D.value == 0 || T < 1) T = 1;
  out.T = T;
  out.lhs = out.d;
  long double dT = out.d * to_ld(T);
  out.rhs = dT > 1 ? s * std::log2(static_cast<long double>(n - 1)) / std::log2(dT)
                   : std::numeric_limits<long double>::infinity();
  // d >= s log(N-1) / log(dT)  <=>  (dT)^d >= (N-1)^s
  if (out.d == 0) {
    out.holds = n <= 2;
  } else {
    Rational lhs = rpow(Rational(out.d) * T, static_cast<unsigned>(out.d));
    out.holds = lhs >= Rational(ipow(BigInt(n - 1), static_cast<unsigned>(s)));
  }
  return out;
}

FourierMax fourier_max(const GroundSet& a, int64_t n) {
  std::vector<int64_t> r = residues_of(a, n);
  if (n > (int64_t{1} << 22)) throw Unsupported("dense transform needs N <= 2^22");
  FourierMax out;
  std::vector<double> mag2(n);
  const double work = static_cast<double>(n) * static_cast<double>(r.size());
  if (work <= static_cast<double>(int64_t{1} << 26)) {
    std::vector<double> c(n), s(n);
    for (int64_t j = 0; j < n; ++j) {
      long double ang = -2.0L * M_PIl * j / n;
      c[j] = static_cast<double>(std::cos(ang));
      s[j] = static_cast<double>(std::sin(ang));
    }
    for (int64_t q = 0; q < n; ++q) {
      double re = 0, im = 0;
      for (int64_t x : r) {
        int64_t j = static_cast<int64_t>((static_cast<__int128>(x) * q) % n);
        re += c[j];
        im += s[j];
      }
      mag2[q] = re * re + im * im;
    }
  } else {
    fftw_complex* buf = fftw_alloc_complex(n);
    for (int64_t j = 0; j < n; ++j) buf[j][0] = buf[j][1] = 0;
    for (int64_t x : r) buf[x][0] = 1;
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    fftw_execute(plan);
    for (int64_t q = 0; q < n; ++q) mag2[q] = buf[q][0] * buf[q][0] + buf[q][1] * buf[q][1];
    fftw_destroy_plan(plan);
    fftw_free(buf);
  }
  double total = 0, best2 = -1;
  for (int64_t q = 0; q < n; ++q) {
    total += mag2[q];
    if (q > 0 && mag2[q] > best2) {
      best2 = mag2[q];
      out.argmax = q;
    }
  }
  out.value = best2 > 0 ? std::sqrt(best2) : 0.0;
  out.parseval_sum = total;
  out.parseval_expected = static_cast<double>(n) * static_cast<double>(r.size());
  out.parseval_ok = std::fabs(total - out.parseval_expected) <= 1e-6 * out.parseval_expected;
  return out;
}

CoverResult random_cover(const GroundSet& a, const GroundSet& s, double prob, int trials, uint64_t seed,
                         Op op) {
  if (s.empty()) throw EmptySet("random_cover needs a nonempty S");
  if (!s.is_subset_of(a)) throw PreconditionViolation("S must be a subset of A");
  if (prob < 0 || prob > 1) throw InvalidInput("probability outside [0,1]");
  if (trials < 1) throw InvalidInput("trials must be >= 1");
  GroundSet v = view(a, op);
  auto im = element_images(a, op);
  std::vector<int64_t> sflat;
  for (size_t i = 0; i < a.size(); ++i)
    if (s.contains(a.at(i))) sflat.insert(sflat.end(), im[i].begin(), im[i].end());
  GroundSet w(v.ambient(), std::move(sflat));
  CoverResult best;
  const double D = static_cast<double>(sumset(v, v).size()) / static_cast<double>(v.size());
  GroundSet cand = diffset(sumset(v, w), w);
  Rng rng(seed);
  bool have = false;
  for (int t = 0; t < trials; ++t) {
    std::vector<size_t> pick;
    for (size_t i = 0; i < cand.size(); ++i)
      if (rng.coin(prob)) pick.push_back(i);
    GroundSet X = cand.subset(pick);
    GroundSet covered = X.empty() ? GroundSet(v.ambient(), {}) : sumset(X, w);
    std::vector<size_t> left;
    for (size_t i = 0; i < a.size(); ++i)
      if (!covered.contains(im[i])) left.push_back(i);
    GroundSet omega = a.subset(left);
    if (!have || omega.size() < best.omega.size() ||
        (omega.size() == best.omega.size() && X.size() < best.X.size())) {
      best.X = X;
      best.omega = omega;
      best.trial = t;
      have = true;
    }
  }
  best.doubling = D;
  best.predicted_x = D * D * D * prob * static_cast<double>(a.size());
  best.predicted_omega = D * static_cast<double>(a.size()) * std::pow(1 - prob, static_cast<double>(s.size()));
  return best;
}

std::vector<ExperimentReport> subgroup_growth_experiment(int64_t p, int64_t t, int n_max, int k_max,
                                                         uint64_t budget) {
  if (p > 100000) throw InvalidInput("subgroup experiment wants p <= 10^5");
  if (n_max < 1 || k_max < 1) throw InvalidInput("n_max and k_max must be >= 1");
  GroundSet g = subgroup(p, t);
  json inst = {{"generator", "subgroup"}, {"p", p}, {"t", t}};
  std::vector<ExperimentReport> out;
  const double lt = std::log2(static_cast<double>(t));
  const double lp = std::log2(static_cast<double>(p));

  std::vector<size_t> sizes;
  GroundSet cur = g;
  sizes.push_back(g.size());
  for (int n = 2; n <= n_max; ++n) {
    cur = sumset(cur, g);
    sizes.push_back(cur.size());
  }
  json tk = json::object();
  for (int k = 1; k <= k_max; ++k) tk[std::to_string(k)] = to_dec(t_k(g, k));

  for (int n = 1; n <= n_max && t >= 3; ++n) {
    ExperimentReport r;
    r.claim_id = "subgroup_growth";
    r.instance = inst;
    r.params = {{"n", n}};
    double rhs = std::pow(t / (n * lt * lt * lt), n);
    r.fitted_constant = static_cast<double>(sizes[n - 1]) / rhs;
    r.witnesses = {{"size_nG", sizes[n - 1]}, {"rhs", num(rhs)}, {"T_k", tk}};
    out.push_back(r);
  }

  DimensionBounds dim = dim_k_exact(g, 1, budget);
  if (t >= 2 && p >= 5) {
    ExperimentReport r;
    r.claim_id = "subgroup_dim";
    r.instance = inst;
    double m = std::min({lp / std::log2(lp), lp / lt, static_cast<double>(euler_phi(t))});
    r.fitted_constant = dim.lower / m;
    r.witnesses = {{"dim_lower", dim.lower}, {"dim_upper", dim.upper}, {"dim_exact", dim.exact},
                   {"min_term", num(m)}};
    out.push_back(r);
  }
  {
    ExperimentReport r;
    r.claim_id = "subgroup_power";
    r.instance = inst;
    r.params = {{"n_max", n_max}};
    double bestx = 0;
    json per = json::array();
    for (int n = 1; n <= n_max; ++n) {
      double x = std::log2(static_cast<double>(sizes[n - 1])) / lp;
      per.push_back(num(x));
      bestx = std::max(bestx, x);
    }
    r.fitted_constant = bestx;
    r.witnesses = {{"exponents", per}, {"sizes", sizes}};
    out.push_back(r);
  }
  if (t >= 2 && t <= 12 && dim.exact && dim.upper > 0) {
    ExperimentReport r;
    r.claim_id = "subgroup_dim_alpha";
    r.instance = inst;
    Rational alpha(1, 2);
    r.params = {{"alpha", "1/2"}, {"k", 2}};
    DimAlphaResult da = dim_alpha_k(g, alpha, 2, Op::Add, budget);
    // alpha dim / log t  << dim_alpha
    r.fitted_constant = da.upper * lt / (0.5 * dim.upper);
    r.witnesses = {{"dim_alpha", da.upper}, {"dim", dim.upper}, {"witness", da.witness.str()}};
    out.push_back(r);
  }
  return out;
}

}  // namespace adlab

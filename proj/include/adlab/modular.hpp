#pragma once

#include <vector>

#include "adlab/energy.hpp"
#include "adlab/groundset.hpp"
#include "adlab/report.hpp"

namespace adlab {

int64_t primitive_root(int64_t p);  // smallest, p prime
// multiplicative subgroup of order t in F_p^*, generated by g^((p-1)/t)
GroundSet subgroup(int64_t p, int64_t t);

struct DirichletValue {
  bool exact = false;
  Rational value;            // exact when s is a positive integer
  long double approx = 0;    // always filled
  long double err_bound = 0; // for the float path
  int64_t argmin_q = 0;      // smallest minimiser
};

// min over q in [1, N-1] of sum_a ||q a / N||^s; N = 0 uses the modulus of a
DirichletValue dirichlet_min(const GroundSet& a, int64_t n, double s);

struct DirichletDimCheck {
  int d = 0;                // dim of A mod N (exact)
  Rational T;               // max(1, |A| / D)
  long double lhs = 0;      // d
  long double rhs = 0;      // s log(N-1) / log(d T)
  bool holds = true;        // exact comparison (d T)^d >= (N-1)^s
  DirichletValue D;
};
DirichletDimCheck verify_dirichlet_dim(const GroundSet& a, int64_t n, int s,
                                       uint64_t budget = default_budget());

struct FourierMax {
  double value = 0;       // max_{r != 0} |A^(r)|
  int64_t argmax = 0;
  double parseval_sum = 0;
  double parseval_expected = 0;  // N |A|
  bool parseval_ok = false;
};
FourierMax fourier_max(const GroundSet& a, int64_t n = 0);

struct CoverResult {
  GroundSet X;      // in the additive picture (logs / exponent vectors)
  GroundSet omega;  // subset of A
  double doubling = 0;
  double predicted_x = 0;      // D^3 p |A|
  double predicted_omega = 0;  // D |A| (1-p)^|S|
  int trial = 0;
};
// A in X S disjoint-union Omega, X drawn from A S S^{-1} at rate prob
CoverResult random_cover(const GroundSet& a, const GroundSet& s, double prob, int trials, uint64_t seed,
                         Op op = Op::Mul);

std::vector<ExperimentReport> subgroup_growth_experiment(int64_t p, int64_t t, int n_max, int k_max,
                                                         uint64_t budget = default_budget());

}  // namespace adlab

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adlab/groundset.hpp"
#include "adlab/report.hpp"

namespace adlab {

struct GrowthCurve {
  std::vector<size_t> sizes;     // |A|, |2A|, ...
  std::optional<int> truncated_at;  // first n whose sumset passed the cap
};

// monotonicity is checked; VerificationFailed if it ever breaks
GrowthCurve growth_sequence(const GroundSet& a, int n_max, size_t cap = size_t{1} << 22);

// Fits the constants of the three lower bounds for |nA| plus a direct check of
// the split-construction bound |nS| >= prod k^n |L_j|^n / (2^n n!).
// Stages 1 and 2 use X = [k].A and d = dim_k(A); stage 3 uses k' = d log d.
std::vector<ExperimentReport> verify_growth_bounds(const GroundSet& a, int n_max, int k,
                                                   uint64_t budget = default_budget(),
                                                   size_t cap = size_t{1} << 22);

// [k].A = union of jA over j = 1..k (dilates)
GroundSet dilate_union(const GroundSet& a, int k);

struct BetaEstimate {
  Rational upper_sq;  // |A+X+Y|^2 / (|X||Y|)
  double upper = 0;   // sqrt of the above
  GroundSet X, Y;
  size_t sum_size = 0;  // |A+X+Y|
  std::string family;
};

// Upper bound for beta(A) over a candidate family of (X, Y): singletons, A,
// hA for h <= 4, intervals [m] (m <= L, integers only) and `extras`.
BetaEstimate beta_hat(const GroundSet& a, int64_t L, const std::vector<GroundSet>& extras = {});
// |A + X + Y|^2 / (|X||Y|) computed from scratch
Rational beta_ratio_sq(const GroundSet& a, const GroundSet& x, const GroundSet& y);

struct PolyFit {
  double d_fit = 0;  // least d with |nA| <= n^d |A| for 2 <= n <= n_max
  GrowthCurve curve;
  std::vector<ExperimentReport> reports;
};
PolyFit polynomial_growth_fit(const GroundSet& a, int n_max, int k = 1,
                              uint64_t budget = default_budget());

struct FreimanModel {
  GroundSet a_star;           // subset of A
  GroundSet image;            // in Z/mZ
  int64_t m = 0;
  int64_t bound = 0;          // |lA - lA|
  std::vector<int64_t> map;   // map[i] = image of a_star.scalar(i)
  std::string method;         // "identity" or "dilate(q, lambda)"
  bool verified = false;
  bool below_bound = false;   // m < |lA - lA| was requested
  int trials_used = 0;
};

// l-isomorphism check by comparing all l-fold sums on both sides
bool verify_freiman_iso(const std::vector<int64_t>& src, const std::vector<int64_t>& img, int64_t m, int l,
                        size_t cap = size_t{1} << 24);

// m = 0 picks |lA - lA|. TrialsExhausted when no verified model turns up and
// m was not below the bound; below the bound the failure is returned flagged.
FreimanModel freiman_model(const GroundSet& a, int l, int64_t m = 0, uint64_t seed = 1, int trials = 200,
                           size_t cap = size_t{1} << 24);

// max over x of max(dim(A+x)/dim(A), dim(A)/dim(A+x)); with sets, fitted
// constants for dim(A) << dim(A+X) << |X| dim(A)
std::vector<ExperimentReport> dim_shift_ratio(const GroundSet& a, const std::vector<int64_t>& shifts,
                                              const std::vector<GroundSet>& shift_sets = {},
                                              uint64_t budget = default_budget());

// |nA| <= k (2nk+1)^dim_k(A) with k = ceil(d ln d), d = dim(A)
std::vector<ExperimentReport> check_span_growth(const GroundSet& a, int n_max,
                                                uint64_t budget = default_budget(),
                                                size_t cap = size_t{1} << 22);

}  // namespace adlab

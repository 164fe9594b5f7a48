#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adlab/energy.hpp"
#include "adlab/groundset.hpp"
#include "adlab/report.hpp"

namespace adlab {

struct PeelingResult {
  std::vector<GroundSet> blocks;  // dissociated, size l each, pairwise disjoint
  GroundSet remainder;            // dim < l
  int l = 1;
  bool certified = false;         // remainder's dim < l proved inside the budget
};

// Repeatedly takes l elements forming a dissociated set (greedy first, exact
// search when greedy stalls) until none are left.
PeelingResult dissociated_peeling(const GroundSet& a, int l, uint64_t budget = default_budget());

struct Level {
  BigInt lo;  // exclusive
  BigInt hi;  // inclusive, 2 lo (or 1 for the bottom band)
  GroundSet keys;
};
// dyadic bands (0,1], (1,2], (2,4], ... that are nonempty, ascending
std::vector<Level> level_set(const RepFn& r);

struct BsgResult {
  GroundSet H;
  std::vector<int64_t> x;  // shift maximising |B cap (H + x)|
  // measured quantities
  BigInt energy;          // E(A, B)
  Rational K;             // |A||B|^2 / E(A, B)
  int j = 1;              // Hoelder index
  double M = 0;           // (|A|/|B|)^(1/l) K^(2^l/l)
  BigInt delta;           // level band lower end
  size_t level_size = 0;  // |P|
  BigInt energy_P;        // E(P)
  Rational threshold;     // popular difference cut on r_{P-P}
  size_t hh_size = 0;     // |H+H|
  Rational doubling;      // |H+H| / |H|
  size_t intersection = 0;  // |B cap (H+x)|
  Rational trivial_ratio;   // |A+A| / |A|
  bool nontrivial = false;  // doubling < trivial_ratio and intersection > 1
};

// Asymmetric BSG: E(A,B) >= |A||B|^2 / K_target is checked first
// (PreconditionViolation otherwise); |A| >= |B| required unless relax_sizes.
BsgResult bsg_asymmetric(const GroundSet& a, const GroundSet& b, const Rational& k_target, int l,
                         uint64_t budget = default_budget(), bool relax_sizes = false);

struct BetaDecomposition {
  GroundSet a_star;
  int j = 0;              // 0 when the chain test never fired
  Rational K;
  std::vector<BigInt> T;  // T_0 .. T_k
  std::optional<BsgResult> bsg;
  double beta_upper = 0;  // beta_hat(A*)
  std::string note;
};
// K = 0 derives K from T_k(A) = |A|^(2k-1) K^(1-k)
BetaDecomposition beta_decomposition(const GroundSet& a, int k, const Rational& K = 0,
                                     uint64_t budget = default_budget());

struct DecIteration {
  size_t c_size = 0;
  size_t d_size = 0;
  BigInt ts_mul_c;  // T_s^x(C_j)
  BigInt tq_add_d;  // T_q^+(D_j)
  int j = 0;
  bool small_piece = false;  // |D_j| < |A|^(1/2)
  std::string note;
};

struct DecompositionResult {
  GroundSet B, C;
  int s = 2, q = 2;
  Rational K;
  Rational threshold;  // |A|^(2s-1) K^(1-s)
  BigInt ts_add_B, ts_mul_C, tq_add_B;
  std::vector<DecIteration> iterations;
  bool max_iter_hit = false;
  double delta_B = 0, delta_C = 0;  // measured exponent savings against |A|^(2s)
  std::string warning;
};

// default K so the threshold is |A|^(2s - delta), delta = 1 + sqrt(log s / log log s) / 2
Rational dec_default_K(size_t n, int s);
DecompositionResult dec_tk(const GroundSet& a, int s, int q, const Rational& K = 0, int max_iter = 64,
                           uint64_t budget = default_budget());

enum class SidonMode { ExactTiny, Greedy };
// largest B inside A with all h-element multiset sums (products) distinct
GroundSet sidon_extract(const GroundSet& a, int h, Op op = Op::Add, SidonMode mode = SidonMode::ExactTiny,
                        uint64_t budget = default_budget());
bool is_sidon(const GroundSet& b, int h, Op op = Op::Add);

struct RatioBox {
  int64_t n = 0;
  std::optional<std::pair<int64_t, int64_t>> missing;  // reduced a/b with max(a,b) = n+1
};
RatioBox ratio_box(const GroundSet& a);

json to_json(const DecompositionResult& r);
json to_json(const BsgResult& r);

}  // namespace adlab

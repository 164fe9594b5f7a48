#pragma once

#include <string>
#include <vector>

#include "adlab/groundset.hpp"

namespace adlab {

enum class Op { Add, Mul };
Op parse_op(const std::string& s);
const char* op_name(Op op);

// Additive picture of the multiplicative structure: exponent vectors for
// positive integers, discrete logs mod p-1 for nonzero residues mod a prime.
GroundSet mult_view(const GroundSet& a);
GroundSet view(const GroundSet& a, Op op);
// image of each element of a (by index) under view(., op)
std::vector<std::vector<int64_t>> element_images(const GroundSet& a, Op op);
// elements of a whose image lies in img
GroundSet view_preimage(const GroundSet& a, const GroundSet& img, Op op);

// T_k(A) = #{a_1+..+a_k = a_{k+1}+..+a_{2k}}
BigInt t_k(const GroundSet& a, int k, Op op = Op::Add);
// E(A,B) = sum_x r_{A-B}(x)^2
BigInt additive_energy(const GroundSet& a, const GroundSet& b);
// 2k sets: #{x_1+..+x_k = x_{k+1}+..+x_{2k}, x_j in A_j}
BigInt t_k_multi(const std::vector<GroundSet>& sets);

// T_k(L) / (k^k |L|^k) for a dissociated L
Rational rudin_ratio(const GroundSet& lam, int k);

struct DimAlphaResult {
  int lower = 0;
  int upper = 0;
  bool exact = false;
  GroundSet witness;  // B with T_k(B) >= alpha T_k(A), dim(B) == upper
  std::string method;
};

// min dim(B) over B inside A with T_k(B) >= alpha T_k(A); exact for |A| <= 16
DimAlphaResult dim_alpha_k(const GroundSet& a, const Rational& alpha, int k, Op op = Op::Add,
                           uint64_t budget = default_budget());

}  // namespace adlab

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adlab/groundset.hpp"

namespace adlab {

enum class Verdict { Dissociated, Relation };

struct Certificate {
  Verdict verdict = Verdict::Dissociated;
  int k = 1;
  std::vector<int64_t> relation;  // coefficients in the set's sorted order; empty if dissociated
  std::string method;
  uint64_t states_visited = 0;
};

Certificate is_k_dissociated(const GroundSet& lam, int k, uint64_t budget = default_budget());

// nonzero, |eps_i| <= k, and sum eps_i lam_i = 0 in the ambient group
bool check_relation(const GroundSet& lam, int k, const std::vector<int64_t>& eps);

enum class GreedyOrder { DescAbs, AscAbs, Given };

// Scans in the chosen order, keeping x when the kept set plus x stays
// k-dissociated. Given = the order in `order` (indices), or sorted order.
GroundSet max_dissociated_greedy(const GroundSet& a, int k, GreedyOrder ord = GreedyOrder::DescAbs,
                                 const std::vector<size_t>& order = {});

struct DimensionBounds {
  int lower = 0;
  int upper = 0;
  bool exact = false;
  GroundSet witness;  // k-dissociated, size == lower
  uint64_t states = 0;
  std::string method;
};

// Largest k-dissociated subset (zero stripped). Exact when the search ends
// inside the budget; otherwise certified bounds. Among maximum sets the
// lexicographically smallest is returned.
DimensionBounds dim_k_exact(const GroundSet& a, int k, uint64_t budget = default_budget());

// all coefficient vectors eps != 0 with |eps_i| <= k and sum eps_i lam_i = 0,
// one per +-pair (first nonzero entry positive)
struct RelationList {
  std::vector<std::vector<int8_t>> eps;
  bool complete = true;
  uint64_t states = 0;
};
RelationList enumerate_relations(const GroundSet& lam, int k, size_t cap, uint64_t budget);

GroundSet span_k(const GroundSet& s, int k, size_t cap = size_t{1} << 24);

struct SpanBounds {
  int lower = 0;
  int upper = 0;
  bool exact = false;
  GroundSet witness;  // spanning subset of size upper
  uint64_t states = 0;
  std::string method;
};

// smallest S inside A with A in Span_k(S)
SpanBounds d_k_exact(const GroundSet& a, int k, uint64_t budget = default_budget());
// S anywhere in the ambient group; bounds only
SpanBounds d_star_bounds(const GroundSet& a, int k, uint64_t budget = default_budget());
// same bounds from an already computed d_k(A) and dim(A)
SpanBounds d_star_from(const GroundSet& a, int k, const SpanBounds& d, const DimensionBounds& dim1);

GroundSet cube(const GroundSet& lam);  // all subset sums, |lam| <= 24
bool cube_is_proper(const GroundSet& lam);

// m random 0/1 column sums of an m-dissociated lam, checked dissociated
GroundSet coin_weighing_dissociated(const GroundSet& lam, int m, uint64_t seed, int trials = 64);

}  // namespace adlab

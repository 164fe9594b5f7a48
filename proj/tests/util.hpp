#pragma once

#include <set>
#include <vector>

#include "adlab/groundset.hpp"
#include "oracles.hpp"

inline std::vector<int64_t> sv(const adlab::GroundSet& a) { return a.scalars(); }
inline std::vector<int64_t> sv(const std::set<int64_t>& s) { return {s.begin(), s.end()}; }
inline adlab::GroundSet Z(std::vector<int64_t> v) { return adlab::GroundSet::ints(std::move(v)); }

// subsets of [n] in mask order
inline adlab::GroundSet sub_n(int n, uint64_t mask) { return adlab::GroundSet::interval(1, n).from_mask(mask); }

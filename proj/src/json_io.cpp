#include <cmath>

#include "adlab/decompose.hpp"
#include "adlab/report.hpp"

namespace adlab {

json num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

json set_json(const GroundSet& a) { return {{"ambient", a.ambient().describe()}, {"set", a.str()}}; }

json to_json(const ExperimentReport& r) {
  return {{"claim_id", r.claim_id},   {"instance", r.instance},   {"params", r.params},
          {"fitted_constant", num(r.fitted_constant)}, {"witnesses", r.witnesses}, {"violated", r.violated}};
}

json to_json(const BsgResult& r) {
  json x = json::array();
  for (int64_t v : r.x) x.push_back(v);
  return {{"H", r.H.str()},
          {"H_size", r.H.size()},
          {"x", x},
          {"energy", to_dec(r.energy)},
          {"K", to_frac(r.K)},
          {"j", r.j},
          {"M", num(r.M)},
          {"delta", to_dec(r.delta)},
          {"level_size", r.level_size},
          {"energy_P", to_dec(r.energy_P)},
          {"threshold", to_frac(r.threshold)},
          {"hh_size", r.hh_size},
          {"doubling", to_frac(r.doubling)},
          {"intersection", r.intersection},
          {"trivial_ratio", to_frac(r.trivial_ratio)},
          {"nontrivial", r.nontrivial}};
}

json to_json(const DecompositionResult& r) {
  json its = json::array();
  for (const auto& it : r.iterations)
    its.push_back({{"c_size", it.c_size},
                   {"d_size", it.d_size},
                   {"ts_mul_c", to_dec(it.ts_mul_c)},
                   {"tq_add_d", to_dec(it.tq_add_d)},
                   {"j", it.j},
                   {"small_piece", it.small_piece},
                   {"note", it.note}});
  return {{"B", r.B.str()},
          {"C", r.C.str()},
          {"s", r.s},
          {"q", r.q},
          {"K", to_frac(r.K)},
          {"threshold", to_frac(r.threshold)},
          {"ts_add_B", to_dec(r.ts_add_B)},
          {"ts_mul_C", to_dec(r.ts_mul_C)},
          {"tq_add_B", to_dec(r.tq_add_B)},
          {"iterations", its},
          {"max_iter_hit", r.max_iter_hit},
          {"delta_B", num(r.delta_B)},
          {"delta_C", num(r.delta_C)},
          {"warning", r.warning}};
}

}  // namespace adlab

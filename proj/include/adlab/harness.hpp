#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "adlab/dissociation.hpp"
#include "adlab/groundset.hpp"
#include "adlab/report.hpp"

namespace adlab {

// generator id + params (+ seed for random ones); regenerating gives the same set
struct InstanceSpec {
  std::string generator;
  json params = json::object();
  uint64_t seed = 0;
};
json to_json(const InstanceSpec& s);
InstanceSpec spec_from_json(const json& j);

// interval {n | lo,hi}, cube {gens}, ap_sum {lengths, steps}, es_product {s,h},
// subgroup {p,t}, random {n, lo, hi}, random_mod {n, N}, gp {base, len, start},
// primes {count}, subset {n, mask}, explicit {elements, modulus?}
GroundSet generate(const InstanceSpec& spec);

enum class ClaimClass { Hard, Fitted };
// how per-record constants aggregate: Max when the inequality needs the
// constant at least that big, Min when at most
enum class Direction { Max, Min };

struct ClaimInfo {
  std::string id;
  ClaimClass cls;
  Direction dir;
  std::string statement;
};
const std::vector<ClaimInfo>& claim_registry();
const ClaimInfo& claim_info(const std::string& id);  // InvalidInput if unknown
std::vector<std::string> hard_claims();
std::vector<std::string> all_claims();

struct SuiteOptions {
  uint64_t budget = default_budget();
  uint64_t seed = 1;
  int n_max = 4;
  int k_max = 3;
  size_t cap = size_t{1} << 20;
  int threads = 0;  // 0 = hardware
};

// per-instance memo shared by the claims run on it
class InstanceCtx {
 public:
  InstanceCtx(InstanceSpec spec, GroundSet a, const SuiteOptions& opt);
  const InstanceSpec& spec() const { return spec_; }
  const GroundSet& set() const { return a_; }
  const SuiteOptions& opt() const { return opt_; }
  const json& instance_json() const { return inst_; }
  const DimensionBounds& dim(int k);
  const BigInt& energy(int k);  // additive T_k
  // records computed once per instance and shared by several claims
  const std::vector<ExperimentReport>& memo(const std::string& key,
                                            const std::function<std::vector<ExperimentReport>()>& make);

 private:
  InstanceSpec spec_;
  GroundSet a_;
  SuiteOptions opt_;
  json inst_;
  std::map<int, DimensionBounds> dims_;
  std::map<int, BigInt> energies_;
  std::map<std::string, std::vector<ExperimentReport>> memo_;
};

// records for one claim on one instance; empty when the claim does not apply
std::vector<ExperimentReport> run_claim(const std::string& id, InstanceCtx& ctx);

struct SuiteResult {
  std::vector<ExperimentReport> records;
  size_t hard_violations = 0;
  size_t skipped = 0;
  double wall_ms = 0;
  std::map<std::string, double> claim_ms;  // summed over instances
};
SuiteResult run_suite(const std::vector<std::string>& claims, const std::vector<InstanceSpec>& instances,
                      const SuiteOptions& opt);

struct FitSummary {
  std::string claim;
  Direction dir = Direction::Max;
  size_t records = 0;
  size_t finite = 0;
  size_t violations = 0;
  double value = 0;  // max or min over finite constants
  double q10 = 0, q50 = 0, q90 = 0;
  double min = 0, max = 0;
};
FitSummary fit_constant(const std::string& claim, const std::vector<ExperimentReport>& records);
json to_json(const FitSummary& f);

// named instance families: "core", "unconditional", "exhaustive10", "tiny"
std::vector<InstanceSpec> suite_instances(const std::string& name, uint64_t seed);
std::vector<std::string> suite_claims(const std::string& name);
// "unconditional" runs with 2^22 so the whole sweep stays in minutes; ADLAB_BUDGET wins if set
uint64_t suite_budget(const std::string& name);

json suite_report(const std::string& name, const std::vector<std::string>& claims, const SuiteOptions& opt,
                  const SuiteResult& res);

// drops every "wall_ms" key, recursively
json strip_timing(const json& j);

}  // namespace adlab

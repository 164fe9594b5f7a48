#include <doctest.h>

#include <cmath>

#include "adlab/harness.hpp"
#include "util.hpp"

using namespace adlab;
using V = std::vector<int64_t>;

static ExperimentReport mk(const std::string& id, double c, bool bad = false) {
  ExperimentReport r;
  r.claim_id = id;
  r.fitted_constant = c;
  r.violated = bad;
  return r;
}

TEST_CASE("generators") {
  CHECK(sv(generate({"interval", {{"n", 5}}})) == V{1, 2, 3, 4, 5});
  CHECK(sv(generate({"es_product", {{"s", 2}, {"h", 2}}})) == V{6, 12, 18, 36});
  auto c = generate({"cube", {{"gens", {1, 10, 100}}}});
  CHECK(c.size() == 8);
  CHECK(sv(generate({"subgroup", {{"p", 13}, {"t", 4}}})) == V{1, 5, 8, 12});
  InstanceSpec r{"random", {{"n", 10}, {"lo", 1}, {"hi", 1000}}, 99};
  CHECK(generate(r) == generate(r));
  CHECK(generate(r).size() == 10);
  CHECK(generate(spec_from_json(to_json(r))) == generate(r));
  CHECK_THROWS_AS(generate({"nope", {}}), InvalidInput);
}

TEST_CASE("registry") {
  CHECK(claim_info("plunnecke").cls == ClaimClass::Hard);
  CHECK(claim_info("rudin").cls == ClaimClass::Fitted);
  CHECK_THROWS_AS(claim_info("zzz"), InvalidInput);
  for (const auto& id : all_claims()) CHECK(!claim_info(id).statement.empty());
}

TEST_CASE("fitting") {
  auto one = fit_constant("rudin", {mk("rudin", 0.75)});
  CHECK(one.value == 0.75);
  CHECK(one.records == 1);
  auto f = fit_constant("rudin", {mk("rudin", 1), mk("rudin", 3), mk("rudin", NAN), mk("rudin", 2)});
  CHECK(f.value == 3);
  CHECK(f.finite == 3);
  auto g = fit_constant("sidon", {mk("sidon", 1), mk("sidon", 0.5)});
  CHECK(g.value == 0.5);
  CHECK_THROWS_AS(fit_constant("rudin", {}), EmptySet);
}

TEST_CASE("empty suite") {
  SuiteOptions o;
  auto res = run_suite(hard_claims(), {}, o);
  CHECK(res.records.empty());
  CHECK(res.hard_violations == 0);
}

TEST_CASE("pipeline on a subgroup") {
  SuiteOptions o;
  o.threads = 1;
  auto res = run_suite({"dirichlet_dim"}, {{"subgroup", {{"p", 31}, {"t", 5}}}}, o);
  REQUIRE(!res.records.empty());
  for (const auto& r : res.records) CHECK(!r.violated);
}

TEST_CASE("timing is stripped") {
  json j = {{"a", 1}, {"timing", {{"wall_ms", 3}}}, {"b", {{"wall_ms", 2}, {"c", 4}}}};
  auto s = strip_timing(j);
  CHECK(!s.contains("timing"));
  CHECK(s["b"].size() == 1);
  CHECK(s["a"] == 1);
}

TEST_CASE("tiny suite runs clean") {
  SuiteOptions o;
  o.threads = 1;
  auto res = run_suite(suite_claims("tiny"), suite_instances("tiny", 1), o);
  CHECK(res.hard_violations == 0);
  auto rep = suite_report("tiny", suite_claims("tiny"), o, res);
  CHECK(rep["summary"]["records"] == res.records.size());
}

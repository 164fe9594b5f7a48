#include <doctest.h>

#include "adlab/decompose.hpp"
#include "adlab/dissociation.hpp"
#include "util.hpp"

using namespace adlab;
using V = std::vector<int64_t>;

TEST_CASE("peeling") {
  auto one = dissociated_peeling(Z({0, 3, 5, 9}), 1);
  CHECK(one.blocks.size() == 3);
  CHECK(one.remainder.is_subset_of(Z({0})));
  auto p = dissociated_peeling(GroundSet::interval(1, 8), 4);
  REQUIRE(p.blocks.size() == 1);
  CHECK(sv(p.blocks[0]) == V{4, 6, 7, 8});
  CHECK(sv(p.remainder) == V{1, 2, 3, 5});
  CHECK(p.certified);
  CHECK(oracle::dim(sv(p.remainder), 1) == 3);
  auto d = dissociated_peeling(Z({1, 2, 4, 8, 16, 32}), 3);
  CHECK(d.blocks.size() == 2);
  CHECK(d.remainder.empty());
}

TEST_CASE("levels") {
  auto lv = level_set(rep_fn_k(GroundSet::interval(1, 4), 2));
  REQUIRE(lv.size() == 3);
  CHECK(sv(lv[0].keys) == V{2, 8});
  CHECK(sv(lv[1].keys) == V{3, 7});
  CHECK(sv(lv[2].keys) == V{4, 5, 6});
  CHECK(lv[2].lo == 2);
  CHECK(lv[2].hi == 4);
  CHECK(level_set(rep_fn_k(Z({0, 10, 100}), 1)).size() == 1);
  CHECK(level_set(RepFn{}).empty());
}

TEST_CASE("asymmetric bsg") {
  auto a = GroundSet::interval(1, 8);
  CHECK(additive_energy(a, a) == 344);
  auto r = bsg_asymmetric(a, a, Rational(8 * 64, 344), 2);
  REQUIRE(!r.H.empty());
  auto hh = sumset(r.H, r.H);
  CHECK(r.hh_size == hh.size());
  CHECK(r.doubling == Rational(hh.size(), r.H.size()));
  CHECK(r.intersection == set_intersection(a, translate(r.H, r.x)).size());
  CHECK(r.doubling < 3);
  CHECK_THROWS_AS(bsg_asymmetric(Z({1, 2, 4, 8, 16, 32}), Z({1, 2, 4, 8, 16, 32}), Rational(6, 5), 2),
                  PreconditionViolation);
}

TEST_CASE("beta decomposition") {
  auto ap = beta_decomposition(GroundSet::interval(1, 32), 2);
  CHECK(!ap.a_star.empty());
  CHECK(ap.beta_upper < 3);
  auto dis = beta_decomposition(Z({1, 2, 4, 8, 16, 32, 64}), 2);
  CHECK(dis.a_star.is_subset_of(Z({1, 2, 4, 8, 16, 32, 64})));
}

TEST_CASE("sum-product decomposition") {
  std::vector<int64_t> gp;
  for (int i = 0; i < 10; ++i) gp.push_back(int64_t{1} << i);
  auto a = Z(gp);
  auto r = dec_tk(a, 2, 2);
  CHECK(set_union(r.B, r.C) == a);
  CHECK(set_intersection(r.B, r.C).empty());
  CHECK(r.ts_add_B == t_k(r.B, 2));
  CHECK(r.ts_mul_C == t_k(r.C, 2, Op::Mul));
  auto primes = Z({2, 3, 5, 7, 11, 13, 17, 19});
  auto p = dec_tk(primes, 2, 2);
  CHECK(p.B.empty());
  CHECK(p.C == primes);
  CHECK_THROWS(dec_tk(Z({0, 1, 2}), 2, 2));
}

TEST_CASE("sidon") {
  auto b = sidon_extract(GroundSet::interval(1, 5), 2);
  CHECK(b.size() == 3);
  CHECK(oracle::sidon(sv(b), 2, false));
  CHECK(is_sidon(Z({7}), 3));
  auto m = Z({2, 3, 4, 9});
  CHECK(is_sidon(m, 2, Op::Mul) == oracle::sidon({2, 3, 4, 9}, 2, true));
  for (uint64_t mask = 1; mask < 512; mask += 11) {
    auto s = sub_n(9, mask);
    CHECK(sidon_extract(s, 2).size() == oracle::max_sidon(sv(s), 2, false));
  }
  auto g = sidon_extract(GroundSet::interval(1, 30), 2, Op::Add, SidonMode::Greedy);
  CHECK(oracle::sidon(sv(g), 2, false));
}

TEST_CASE("ratio box") {
  CHECK(ratio_box(Z({0, 3, 6, 9, 12})).n == 4);
  CHECK(ratio_box(Z({5})).n == 0);
  auto r = ratio_box(Z({0, 1, 3}));
  CHECK(r.n == 3);
  REQUIRE(r.missing.has_value());
  CHECK(std::max(r.missing->first, r.missing->second) == 4);
}

#include <doctest.h>

#include <cmath>

#include "adlab/modular.hpp"
#include "util.hpp"

using namespace adlab;
using V = std::vector<int64_t>;

TEST_CASE("subgroups") {
  CHECK(sv(subgroup(7, 3)) == V{1, 2, 4});
  CHECK(sv(subgroup(13, 1)) == V{1});
  CHECK(sv(subgroup(13, 4)) == V{1, 5, 8, 12});
  CHECK(primitive_root(7) == 3);
  CHECK_THROWS(subgroup(13, 5));
  for (int64_t t : {1, 2, 3, 4, 6, 12}) {
    auto g = subgroup(13, t);
    CHECK(g.size() == static_cast<size_t>(t));
    for (auto x : sv(g))
      for (auto y : sv(g)) CHECK(g.contains(x * y % 13));
  }
}

TEST_CASE("dirichlet minimum") {
  auto v = dirichlet_min(GroundSet::residues(5, {1}), 0, 2);
  CHECK(v.exact);
  CHECK(v.value == Rational(1, 25));
  CHECK(v.argmin_q == 1);
  auto g = dirichlet_min(subgroup(7, 3), 0, 2);
  CHECK(g.value == Rational(2, 7));
  std::vector<int64_t> all;
  for (int i = 0; i < 11; ++i) all.push_back(i);
  auto full = GroundSet::residues(11, all);
  CHECK(dirichlet_min(full, 0, 2).value == oracle::dirichlet(all, 11, 2));
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    std::vector<int64_t> a;
    for (int i = 0; i < 6; ++i) a.push_back(rng.range(1, 40));
    auto s = Z(a);
    CHECK(dirichlet_min(s, 43, 1).value == oracle::dirichlet(sv(s), 43, 1));
    CHECK(dirichlet_min(s, 43, 3).value == oracle::dirichlet(sv(s), 43, 3));
  }
  auto f = dirichlet_min(GroundSet::residues(5, {1, 2}), 0, 1.5);
  CHECK(!f.exact);
  CHECK(std::abs(static_cast<double>(f.approx) - (std::pow(0.2, 1.5) + std::pow(0.4, 1.5))) < 1e-9);
}

TEST_CASE("dirichlet dimension check") {
  auto c = verify_dirichlet_dim(GroundSet::residues(5, {1}), 5, 2);
  CHECK(c.d == 1);
  CHECK(c.T == 25);
  CHECK(c.holds);
  auto g = verify_dirichlet_dim(subgroup(31, 5), 31, 2);
  CHECK(g.holds);
  CHECK(g.d == oracle::dim(sv(subgroup(31, 5)), 1, 31));
}

TEST_CASE("fourier maximum") {
  std::vector<int64_t> all;
  for (int i = 0; i < 16; ++i) all.push_back(i);
  CHECK(fourier_max(GroundSet::residues(16, all)).value < 1e-9);
  auto ap = GroundSet::residues(31, {0, 1, 2, 3, 4, 5});
  auto f = fourier_max(ap);
  CHECK(f.argmax == 1);
  CHECK(std::abs(f.value - std::abs(std::sin(M_PI * 6 / 31) / std::sin(M_PI / 31))) < 1e-9);
  CHECK(f.parseval_ok);
  Rng rng(9);
  std::vector<int64_t> a;
  for (int i = 0; i < 20; ++i) a.push_back(rng.range(0, 40));
  auto r = GroundSet::residues(41, a);
  CHECK(std::abs(fourier_max(r).value - oracle::fourier_max(sv(r), 41)) < 1e-9);
}

TEST_CASE("random cover") {
  auto g = subgroup(31, 6);
  auto all = random_cover(g, g, 1.0, 4, 3);
  CHECK(all.omega.empty());
  auto none = random_cover(g, g, 0.0, 4, 3);
  CHECK(none.X.empty());
  CHECK(none.omega == g);
  auto half = random_cover(g, g.subset({0, 1, 2}), 0.5, 8, 11);
  CHECK(half.omega.is_subset_of(g));
}

TEST_CASE("subgroup experiment") {
  auto recs = subgroup_growth_experiment(7, 3, 3, 2);
  CHECK(!recs.empty());
  CHECK(t_k(subgroup(7, 3), 2) == 15);
  CHECK(iterated_sumset(subgroup(7, 3), 2, 0).size() == 6);
  for (const auto& r : subgroup_growth_experiment(13, 1, 3, 2)) CHECK(!r.violated);
  CHECK(iterated_sumset(subgroup(13, 1), 3, 0).size() == 1);
}

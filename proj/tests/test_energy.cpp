#include <doctest.h>

#include "adlab/energy.hpp"
#include "util.hpp"

using namespace adlab;

TEST_CASE("energy values") {
  CHECK(t_k(Z({0, 1}), 2) == 6);
  CHECK(t_k(Z({0, 1}), 3) == 20);
  CHECK(t_k(GroundSet::interval(1, 3), 2) == 19);
  CHECK(additive_energy(Z({0, 1}), Z({0, 1})) == 6);
  CHECK(additive_energy(GroundSet::interval(1, 4), GroundSet::interval(1, 4)) == 44);
  auto a = Z({3, 8, 20, 21});
  CHECK(additive_energy(a, Z({5})) == 4);
}

TEST_CASE("energy against tuple enumeration") {
  for (uint64_t m = 1; m < 128; m += 2) {
    auto s = sub_n(7, m);
    for (int k = 2; k <= 3; ++k) CHECK(t_k(s, k) == oracle::energy(sv(s), k));
  }
  auto r = GroundSet::residues(13, {1, 2, 5, 7, 11});
  CHECK(t_k(r, 2) == oracle::energy(sv(r), 2, 13));
  CHECK(t_k(r, 3) == oracle::energy(sv(r), 3, 13));
}

TEST_CASE("multiplicative energy") {
  auto a = Z({1, 2, 3, 4, 6, 8, 12});
  CHECK(t_k(a, 2, Op::Mul) == oracle::mult_energy(sv(a), 2));
  auto p = Z({2, 3, 5, 7});
  // multiplicatively dissociated: only trivial coincidences
  CHECK(t_k(p, 2, Op::Mul) == t_k(Z({1, 10, 100, 1000}), 2));
}

TEST_CASE("mixed energy") {
  auto a = Z({0, 1}), b = Z({0, 2});
  CHECK(t_k_multi({a, a, b, b}) == oracle::mixed_energy({{0, 1}, {0, 1}, {0, 2}, {0, 2}}));
  auto c = GroundSet::interval(1, 4);
  CHECK(t_k_multi({c, c, c, c}) == t_k(c, 2));
  CHECK(t_k_multi({c, c, GroundSet(), c}) == 0);
  auto d = Z({1, 5, 6}), e = Z({2, 3});
  CHECK(t_k_multi({c, d, e, c, d, e}) ==
        oracle::mixed_energy({sv(c), sv(d), sv(e), sv(c), sv(d), sv(e)}));
}

TEST_CASE("rudin ratio") {
  CHECK(rudin_ratio(Z({1}), 2) == Rational(1, 4));
  auto l = Z({1, 2, 4});
  BigInt t = oracle::energy({1, 2, 4}, 2);
  CHECK(rudin_ratio(l, 2) == Rational(t, BigInt(4 * 9)));
  CHECK_THROWS_AS(rudin_ratio(Z({1, 2, 3}), 2), NotDissociated);
}

TEST_CASE("dim alpha") {
  auto a = Z({0, 1, 2});
  auto r = dim_alpha_k(a, 1, 2);
  CHECK(r.exact);
  CHECK(r.upper == 2);
  // {0} alone has dimension 0, so take a set without zero
  CHECK(dim_alpha_k(Z({1, 2, 3}), Rational(1, 1000), 2).upper == 1);
  CHECK(dim_alpha_k(a, Rational(1, 1000), 2).upper == 0);
  for (uint64_t m = 1; m < 256; m += 7) {
    auto b = sub_n(8, m);
    for (auto al : {Rational(1, 4), Rational(1, 2)}) {
      auto x = dim_alpha_k(b, al, 2);
      CHECK(x.upper <= oracle::dim(sv(b), 1));
      CHECK(Rational(t_k(x.witness, 2)) >= al * Rational(t_k(b, 2)));
    }
  }
}

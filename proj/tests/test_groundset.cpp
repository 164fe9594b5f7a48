#include <doctest.h>

#include "adlab/groundset.hpp"
#include "adlab/setio.hpp"
#include "util.hpp"

using namespace adlab;
using V = std::vector<int64_t>;

TEST_CASE("sumset and difference set") {
  CHECK(sv(sumset(GroundSet::interval(1, 3), GroundSet::interval(1, 3))) == V{2, 3, 4, 5, 6});
  auto a = Z({0, 1, 3});
  CHECK(sv(sumset(Z({0}), a)) == sv(a));
  CHECK(sv(diffset(a, a)) == V{-3, -2, -1, 0, 1, 2, 3});
}

TEST_CASE("iterated sumset against tuple enumeration") {
  auto a = Z({0, 1, 4});
  CHECK(sv(iterated_sumset(a, 1, 0)) == sv(a));
  CHECK(sv(iterated_sumset(Z({0, 1}), 3, 0)) == V{0, 1, 2, 3});
  CHECK(sv(iterated_sumset(a, 2, 1)) == sv(oracle::sumset({0, 1, 4}, 2, 1)));
  for (uint64_t m = 1; m < 64; ++m) {
    auto s = sub_n(6, m);
    for (int n = 1; n <= 3; ++n)
      for (int k = 0; k <= 2; ++k) CHECK(sv(iterated_sumset(s, n, k)) == sv(oracle::sumset(sv(s), n, k)));
  }
  auto r = GroundSet::residues(11, {1, 3, 7});
  CHECK(sv(iterated_sumset(r, 3, 1)) == sv(oracle::sumset({1, 3, 7}, 3, 1, 11)));
  CHECK_THROWS_AS(iterated_sumset(GroundSet::ints({1, 10, 100, 1000, 10000}), 4, 0, 20), Truncated);
}

TEST_CASE("dilate") {
  auto a = GroundSet::interval(1, 3);
  CHECK(dilate(a, 1) == a);
  CHECK(sv(dilate(a, 2)) == V{2, 4, 6});
  CHECK(sv(dilate(GroundSet::residues(6, {0, 1, 2, 3}), 2)) == V{0, 2, 4});
}

TEST_CASE("representation functions") {
  auto a = Z({0, 1});
  auto r2 = rep_fn_k(a, 2);
  CHECK(r2.at(0) == 1);
  CHECK(r2.at(1) == 2);
  CHECK(r2.at(2) == 1);
  auto r3 = rep_fn_k(a, 3);
  CHECK(sv(r3.support) == V{0, 1, 2, 3});
  CHECK(r3.at(0) == 1);
  CHECK(r3.at(1) == 3);
  CHECK(r3.at(2) == 3);
  CHECK(r3.at(3) == 1);
  CHECK(r3.at(7) == 0);
  auto b = Z({2, 5, 11, 12});
  CHECK(rep_fn_diff(b, b).at(0) == 4);
  CHECK(rep_fn_diff(b, b).total() == 16);
}

TEST_CASE("sigma_k") {
  auto a = GroundSet::interval(1, 3);
  CHECK(sv(sigma_k(a, 0)) == V{0});
  CHECK(sv(sigma_k(a, 2)) == V{0, 1, 2, 3, 4, 5});
  // {0,1}: 2 is in 2A but is no sum of distinct elements, so only inclusion holds
  CHECK(sv(sigma_k(Z({0, 1}), 2)) == V{0, 1});
  for (uint64_t m = 1; m < 128; ++m) {
    auto s = set_union(Z({0}), sub_n(7, m));
    auto v = sv(s);
    for (int k = 1; k <= 3; ++k) {
      auto sg = sigma_k(s, k);
      CHECK(sg.is_subset_of(iterated_sumset(s, k, 0)));
      CHECK(sg.size() <= k * iterated_sumset(s, k, 0).size());
      std::set<int64_t> o;
      for (uint64_t t = 0; t < (uint64_t{1} << v.size()); ++t)
        if (__builtin_popcountll(t) <= k) {
          int64_t x = 0;
          for (size_t i = 0; i < v.size(); ++i)
            if (t >> i & 1) x += v[i];
          o.insert(x);
        }
      CHECK(sv(sg) == sv(o));
    }
  }
}

TEST_CASE("multiplicative embedding") {
  auto e = mult_embed(Z({2, 3, 6}));
  CHECK(e.primes == V{2, 3});
  CHECK(e.vectors.size() == 3);
  CHECK(e.vectors.str() == "{(0,1),(1,0),(1,1)}");
  auto one = mult_embed(Z({1}));
  CHECK(one.vectors.size() == 1);
  CHECK(one.vectors.flat() == V{0});
  auto p2 = mult_embed(Z({4, 8}));
  CHECK(p2.primes == V{2});
  CHECK(p2.vectors.flat() == V{2, 3});
  CHECK(sv(mult_unembed(e.vectors, e.primes)) == V{2, 3, 6});
  CHECK_THROWS(mult_embed(Z({0, 2})));
}

TEST_CASE("lattice sets and ambient checks") {
  GroundSet p(Ambient::Z(2), {1, 0, 0, 1, 1, 0});
  CHECK(p.size() == 2);
  CHECK(p.str() == "{(0,1),(1,0)}");
  auto s = sumset(p, p);
  CHECK(s.str() == "{(0,2),(1,1),(2,0)}");
  CHECK_THROWS_AS(sumset(p, Z({1})), AmbientMismatch);
  CHECK_THROWS_AS(sumset(GroundSet::residues(5, {1}), GroundSet::residues(7, {1})), AmbientMismatch);
}

TEST_CASE("overflow is reported") {
  auto big = Z({INT64_MAX / 2 + 1, INT64_MAX / 2 + 2});
  CHECK_THROWS_AS(sumset(big, big), Overflow);
}

TEST_CASE("set text round trip") {
  auto a = parse_set_text("@ambient mod 7\n# comment\n1\n9\n4\n");
  CHECK(a.ambient().modulus == 7);
  CHECK(sv(a) == V{1, 2, 4});
  auto b = parse_set_text(format_set(a));
  CHECK(a == b);
  auto l = parse_set_text("@ambient z d=2\n1,2\n-3,4\n");
  CHECK(l.width() == 2);
  CHECK(parse_set_text(format_set(l)) == l);
  CHECK(sv(parse_inline("5 1,3")) == V{1, 3, 5});
  CHECK_THROWS_AS(parse_set_text("1\nx\n"), ParseError);
}

#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adlab/common.hpp"

namespace adlab {

struct Ambient {
  enum class Kind { Lattice, Residues };
  Kind kind = Kind::Lattice;
  int rank = 1;          // lattice rank
  int64_t modulus = 0;   // residues only

  static Ambient Z(int d = 1);
  static Ambient mod(int64_t n);

  bool residues() const { return kind == Kind::Residues; }
  int width() const { return residues() ? 1 : rank; }
  bool scalar() const { return width() == 1; }
  std::string describe() const;  // "z d=2", "mod 7"
  bool operator==(const Ambient&) const = default;
};

// Sorted, duplicate-free finite subset of an ambient group. Lattice points
// are stored flat, `width()` coordinates per element, ordered lexicographically.
class GroundSet {
 public:
  GroundSet() = default;
  GroundSet(Ambient amb, std::vector<int64_t> flat);

  static GroundSet ints(std::vector<int64_t> v) { return GroundSet(Ambient::Z(), std::move(v)); }
  static GroundSet ints(std::initializer_list<int64_t> v) { return ints(std::vector<int64_t>(v)); }
  static GroundSet residues(int64_t n, std::vector<int64_t> v) {
    return GroundSet(Ambient::mod(n), std::move(v));
  }
  static GroundSet interval(int64_t lo, int64_t hi);  // {lo..hi}

  const Ambient& ambient() const { return amb_; }
  int width() const { return amb_.width(); }
  size_t size() const { return flat_.size() / static_cast<size_t>(width()); }
  bool empty() const { return flat_.empty(); }

  std::span<const int64_t> at(size_t i) const {
    return {flat_.data() + i * static_cast<size_t>(width()), static_cast<size_t>(width())};
  }
  int64_t scalar(size_t i) const;
  const std::vector<int64_t>& flat() const { return flat_; }
  std::vector<int64_t> scalars() const;

  std::optional<size_t> index_of(std::span<const int64_t> x) const;
  bool contains(std::span<const int64_t> x) const { return index_of(x).has_value(); }
  bool contains(int64_t x) const;

  GroundSet subset(const std::vector<size_t>& idx) const;
  GroundSet from_mask(uint64_t mask) const;  // size() <= 64
  bool has_zero() const;
  GroundSet without_zero() const;
  bool is_subset_of(const GroundSet& o) const;

  std::string str() const;  // {1,2,3} / {(1,0),(0,1)}
  bool operator==(const GroundSet&) const = default;

 private:
  Ambient amb_;
  std::vector<int64_t> flat_;
};

GroundSet set_union(const GroundSet& a, const GroundSet& b);
GroundSet set_intersection(const GroundSet& a, const GroundSet& b);
GroundSet set_difference(const GroundSet& a, const GroundSet& b);

void require_same_ambient(const GroundSet& a, const GroundSet& b);
void require_scalar_z(const GroundSet& a, const char* what);

// Linear functional on Z^w, injective on a box. Lets lattice problems run on
// int64 scalars: the encoded sum of elements is the encoding of their sum, and
// every combination the caller declared lands inside the box.
class Codec {
 public:
  static Codec identity(const Ambient& amb);
  // box[j] = {lo_j, hi_j}; throws Overflow when the box does not fit
  static Codec for_box(const Ambient& amb, std::vector<std::pair<int64_t, int64_t>> box);

  int64_t modulus() const { return modulus_; }  // 0 in Z
  int64_t encode(std::span<const int64_t> v) const;
  void decode(int64_t x, int64_t* out) const;
  std::vector<int64_t> encode_all(const GroundSet& a) const;
  GroundSet decode_all(const std::vector<int64_t>& xs) const;  // xs need not be sorted
  const Ambient& ambient() const { return amb_; }

 private:
  Ambient amb_;
  int64_t modulus_ = 0;
  std::vector<int64_t> lo_, hi_, stride_;
  int64_t base_ = 0;  // encode(lo)
};

// Bounds of coordinates over combinations: accumulates intervals per coordinate.
struct BoxBuilder {
  std::vector<std::pair<BigInt, BigInt>> box;
  explicit BoxBuilder(int w);
  void add_set(const GroundSet& a, int64_t cmin, int64_t cmax);      // c * x, x in a
  void add_each(const GroundSet& a, int64_t cmin, int64_t cmax);     // sum over all x in a of c_x * x
  Codec build(const Ambient& amb) const;
};

// one codec for "sum of signed copies" problems
Codec codec_for_terms(const std::vector<std::pair<const GroundSet*, int64_t>>& terms);

GroundSet negate(const GroundSet& a);
GroundSet translate(const GroundSet& a, std::span<const int64_t> x);
GroundSet translate(const GroundSet& a, int64_t x);
GroundSet sumset(const GroundSet& a, const GroundSet& b);
GroundSet diffset(const GroundSet& a, const GroundSet& b);
// nA - mA; throws Truncated once an intermediate set exceeds cap
GroundSet iterated_sumset(const GroundSet& a, int n, int m, size_t cap = size_t{1} << 24);
GroundSet dilate(const GroundSet& a, int64_t lambda);
// sums of at most k distinct elements (empty sum included)
GroundSet sigma_k(const GroundSet& a, int k, size_t cap = size_t{1} << 24);

// Representation function: support plus positive counts.
struct RepFn {
  GroundSet support;
  std::vector<BigInt> counts;

  BigInt at(std::span<const int64_t> x) const;
  BigInt at(int64_t x) const;
  BigInt total() const;
  BigInt sum_squares() const;
  BigInt max() const;
};

// r(x) = #{(x_1..x_m) : sum sign_i x_i = x, x_i in set_i}
RepFn rep_fn(const std::vector<std::pair<const GroundSet*, int>>& terms);
RepFn rep_fn_k(const GroundSet& a, int k);  // r_{kA}
RepFn rep_fn_diff(const GroundSet& a, const GroundSet& b);  // r_{A-B}

// Multiplicative embedding of positive integers: exponent vectors over the
// primes dividing some element (ascending).
struct MultEmbedding {
  GroundSet vectors;                 // lattice rank = primes.size() (at least 1)
  std::vector<int64_t> primes;
  std::vector<int64_t> source;       // source[i] maps to the i-th vector
};
MultEmbedding mult_embed(const GroundSet& a);
// inverse of mult_embed on vectors with nonnegative entries; Overflow if too big
GroundSet mult_unembed(const GroundSet& v, const std::vector<int64_t>& primes);
GroundSet product_set(const GroundSet& a, const GroundSet& b);  // positive integers

}  // namespace adlab

#include "adlab/groundset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "conv.hpp"

namespace adlab {

Ambient Ambient::Z(int d) {
  if (d < 1) throw InvalidInput("lattice rank must be >= 1");
  Ambient a;
  a.kind = Kind::Lattice;
  a.rank = d;
  return a;
}

Ambient Ambient::mod(int64_t n) {
  if (n < 1) throw InvalidInput("modulus must be >= 1");
  if (n > (int64_t{1} << 62)) throw Overflow("modulus above 2^62");
  Ambient a;
  a.kind = Kind::Residues;
  a.rank = 1;
  a.modulus = n;
  return a;
}

std::string Ambient::describe() const {
  if (residues()) return "mod " + std::to_string(modulus);
  return "z d=" + std::to_string(rank);
}

namespace {

void sort_rows(std::vector<int64_t>& flat, int w) {
  if (w == 1) {
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    return;
  }
  size_t n = flat.size() / w;
  std::vector<size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  auto row_less = [&](size_t a, size_t b) {
    return std::lexicographical_compare(flat.begin() + a * w, flat.begin() + (a + 1) * w,
                                        flat.begin() + b * w, flat.begin() + (b + 1) * w);
  };
  std::sort(idx.begin(), idx.end(), row_less);
  std::vector<int64_t> out;
  out.reserve(flat.size());
  for (size_t k = 0; k < n; ++k) {
    size_t i = idx[k];
    if (k > 0 && std::equal(flat.begin() + i * w, flat.begin() + (i + 1) * w,
                            out.end() - w))
      continue;
    out.insert(out.end(), flat.begin() + i * w, flat.begin() + (i + 1) * w);
  }
  flat.swap(out);
}

}  // namespace

GroundSet::GroundSet(Ambient amb, std::vector<int64_t> flat) : amb_(amb), flat_(std::move(flat)) {
  const int w = amb_.width();
  if (flat_.size() % static_cast<size_t>(w) != 0)
    throw InvalidInput("coordinate count is not a multiple of the rank");
  if (amb_.residues())
    for (auto& x : flat_) x = mod_norm(x, amb_.modulus);
  sort_rows(flat_, w);
}

GroundSet GroundSet::interval(int64_t lo, int64_t hi) {
  std::vector<int64_t> v;
  for (int64_t x = lo; x <= hi; ++x) v.push_back(x);
  return ints(std::move(v));
}

int64_t GroundSet::scalar(size_t i) const {
  if (width() != 1) throw Unsupported("scalar access on a lattice set of rank > 1");
  return flat_[i];
}

std::vector<int64_t> GroundSet::scalars() const {
  if (width() != 1) throw Unsupported("scalar access on a lattice set of rank > 1");
  return flat_;
}

std::optional<size_t> GroundSet::index_of(std::span<const int64_t> x) const {
  const size_t w = static_cast<size_t>(width());
  if (x.size() != w) throw AmbientMismatch("element has the wrong number of coordinates");
  size_t lo = 0, hi = size();
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    auto row = at(mid);
    if (std::lexicographical_compare(row.begin(), row.end(), x.begin(), x.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < size() && std::equal(x.begin(), x.end(), at(lo).begin())) return lo;
  return std::nullopt;
}

bool GroundSet::contains(int64_t x) const {
  if (amb_.residues()) x = mod_norm(x, amb_.modulus);
  return index_of(std::span<const int64_t>(&x, 1)).has_value();
}

GroundSet GroundSet::subset(const std::vector<size_t>& idx) const {
  std::vector<int64_t> flat;
  flat.reserve(idx.size() * width());
  for (size_t i : idx) {
    if (i >= size()) throw InvalidInput("subset index out of range");
    auto r = at(i);
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return GroundSet(amb_, std::move(flat));
}

GroundSet GroundSet::from_mask(uint64_t mask) const {
  std::vector<size_t> idx;
  for (size_t i = 0; i < size() && i < 64; ++i)
    if (mask >> i & 1) idx.push_back(i);
  return subset(idx);
}

bool GroundSet::has_zero() const {
  std::vector<int64_t> z(width(), 0);
  return contains(z);
}

GroundSet GroundSet::without_zero() const {
  std::vector<size_t> idx;
  for (size_t i = 0; i < size(); ++i) {
    auto r = at(i);
    if (!std::all_of(r.begin(), r.end(), [](int64_t v) { return v == 0; })) idx.push_back(i);
  }
  return subset(idx);
}

bool GroundSet::is_subset_of(const GroundSet& o) const {
  if (!(amb_ == o.amb_)) return false;
  for (size_t i = 0; i < size(); ++i)
    if (!o.contains(at(i))) return false;
  return true;
}

std::string GroundSet::str() const {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < size(); ++i) {
    if (i) os << ',';
    auto r = at(i);
    if (width() == 1) {
      os << r[0];
    } else {
      os << '(';
      for (size_t j = 0; j < r.size(); ++j) os << (j ? "," : "") << r[j];
      os << ')';
    }
  }
  os << '}';
  return os.str();
}

void require_same_ambient(const GroundSet& a, const GroundSet& b) {
  if (!(a.ambient() == b.ambient()))
    throw AmbientMismatch("ambient mismatch: " + a.ambient().describe() + " vs " +
                          b.ambient().describe());
}

void require_scalar_z(const GroundSet& a, const char* what) {
  if (a.ambient().residues() || a.width() != 1)
    throw Unsupported(std::string(what) + " needs a subset of Z");
}

GroundSet set_union(const GroundSet& a, const GroundSet& b) {
  require_same_ambient(a, b);
  std::vector<int64_t> f = a.flat();
  f.insert(f.end(), b.flat().begin(), b.flat().end());
  return GroundSet(a.ambient(), std::move(f));
}

GroundSet set_intersection(const GroundSet& a, const GroundSet& b) {
  require_same_ambient(a, b);
  std::vector<size_t> idx;
  for (size_t i = 0; i < a.size(); ++i)
    if (b.contains(a.at(i))) idx.push_back(i);
  return a.subset(idx);
}

GroundSet set_difference(const GroundSet& a, const GroundSet& b) {
  require_same_ambient(a, b);
  std::vector<size_t> idx;
  for (size_t i = 0; i < a.size(); ++i)
    if (!b.contains(a.at(i))) idx.push_back(i);
  return a.subset(idx);
}

// ---- codec ----

Codec Codec::identity(const Ambient& amb) {
  if (amb.width() != 1) throw Unsupported("identity codec needs rank 1");
  Codec c;
  c.amb_ = amb;
  c.modulus_ = amb.residues() ? amb.modulus : 0;
  c.lo_ = {std::numeric_limits<int64_t>::min() / 4};
  c.hi_ = {std::numeric_limits<int64_t>::max() / 4};
  c.stride_ = {1};
  c.base_ = 0;
  return c;
}

Codec Codec::for_box(const Ambient& amb, std::vector<std::pair<int64_t, int64_t>> box) {
  if (amb.residues()) return identity(amb);
  const int w = amb.width();
  if (static_cast<int>(box.size()) != w) throw InvalidInput("box rank mismatch");
  Codec c;
  c.amb_ = amb;
  c.modulus_ = 0;
  c.stride_.assign(w, 1);
  const BigInt lim = BigInt(1) << 61;
  BigInt stride = 1, reach = 0;
  for (int j = w - 1; j >= 0; --j) {
    auto [lo, hi] = box[j];
    if (lo > hi) throw InvalidInput("empty box");
    if (stride > lim) throw Overflow("lattice box too large to encode in 64 bits");
    c.stride_[j] = static_cast<int64_t>(stride);
    BigInt mag = std::max(BigInt(lo < 0 ? -BigInt(lo) : BigInt(lo)), BigInt(hi < 0 ? -BigInt(hi) : BigInt(hi)));
    reach += mag * stride;
    stride *= BigInt(hi) - BigInt(lo) + 1;
  }
  if (stride > lim || reach > lim) throw Overflow("lattice box too large to encode in 64 bits");
  for (auto [lo, hi] : box) {
    c.lo_.push_back(lo);
    c.hi_.push_back(hi);
  }
  c.base_ = c.encode(c.lo_);
  return c;
}

int64_t Codec::encode(std::span<const int64_t> v) const {
  if (modulus_) return mod_norm(v[0], modulus_);
  if (stride_.size() == 1) return v[0];
  int64_t s = 0;
  for (size_t j = 0; j < stride_.size(); ++j) s = add_ck(s, mul_ck(v[j], stride_[j]));
  return s;
}

void Codec::decode(int64_t x, int64_t* out) const {
  if (modulus_ || stride_.size() == 1) {
    out[0] = x;
    return;
  }
  int64_t y = x - base_;
  for (size_t j = 0; j < stride_.size(); ++j) {
    out[j] = lo_[j] + y / stride_[j];
    y %= stride_[j];
  }
}

std::vector<int64_t> Codec::encode_all(const GroundSet& a) const {
  if (!(a.ambient() == amb_)) throw AmbientMismatch("codec ambient mismatch");
  std::vector<int64_t> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = encode(a.at(i));
  // order agrees with lexicographic order inside the box, but inputs may sit
  // outside it, so sort anyway
  std::sort(out.begin(), out.end());
  return out;
}

GroundSet Codec::decode_all(const std::vector<int64_t>& xs) const {
  const int w = amb_.width();
  std::vector<int64_t> flat(xs.size() * w);
  for (size_t i = 0; i < xs.size(); ++i) decode(xs[i], flat.data() + i * w);
  return GroundSet(amb_, std::move(flat));
}

BoxBuilder::BoxBuilder(int w) : box(w, {BigInt(0), BigInt(0)}) {}

namespace {

std::pair<BigInt, BigInt> coord_range(const GroundSet& a, size_t j) {
  BigInt mn = 0, mx = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    BigInt v = a.at(i)[j];
    if (i == 0 || v < mn) mn = v;
    if (i == 0 || v > mx) mx = v;
  }
  return {mn, mx};
}

}  // namespace

void BoxBuilder::add_set(const GroundSet& a, int64_t cmin, int64_t cmax) {
  if (a.empty()) return;
  for (size_t j = 0; j < box.size(); ++j) {
    auto [xl, xh] = coord_range(a, j);
    BigInt c[4] = {xl * cmin, xl * cmax, xh * cmin, xh * cmax};
    box[j].first += *std::min_element(c, c + 4);
    box[j].second += *std::max_element(c, c + 4);
  }
}

void BoxBuilder::add_each(const GroundSet& a, int64_t cmin, int64_t cmax) {
  for (size_t i = 0; i < a.size(); ++i) {
    auto r = a.at(i);
    for (size_t j = 0; j < box.size(); ++j) {
      BigInt lo = BigInt(r[j]) * cmin, hi = BigInt(r[j]) * cmax;
      if (lo > hi) std::swap(lo, hi);
      box[j].first += lo;
      box[j].second += hi;
    }
  }
}

Codec BoxBuilder::build(const Ambient& amb) const {
  if (amb.residues()) return Codec::identity(amb);
  const BigInt lim = BigInt(1) << 61;
  std::vector<std::pair<int64_t, int64_t>> b;
  for (auto& [lo, hi] : box) {
    if (lo < -lim || hi > lim) throw Overflow("coordinate range exceeds 2^61");
    b.push_back({static_cast<int64_t>(lo), static_cast<int64_t>(hi)});
  }
  return Codec::for_box(amb, std::move(b));
}

Codec codec_for_terms(const std::vector<std::pair<const GroundSet*, int64_t>>& terms) {
  if (terms.empty()) throw InvalidInput("no terms");
  const Ambient& amb = terms.front().first->ambient();
  BoxBuilder bb(amb.width());
  for (auto& [s, sign] : terms) {
    if (!(s->ambient() == amb)) throw AmbientMismatch("ambient mismatch between terms");
    bb.add_set(*s, std::min<int64_t>(0, sign), std::max<int64_t>(0, sign));
  }
  return bb.build(amb);
}

// ---- set operations ----

GroundSet negate(const GroundSet& a) {
  std::vector<int64_t> f = a.flat();
  for (auto& x : f) x = a.ambient().residues() ? mod_norm(-x, a.ambient().modulus) : neg_ck(x);
  return GroundSet(a.ambient(), std::move(f));
}

GroundSet translate(const GroundSet& a, std::span<const int64_t> x) {
  const int w = a.width();
  if (static_cast<int>(x.size()) != w) throw AmbientMismatch("shift has the wrong rank");
  std::vector<int64_t> f = a.flat();
  for (size_t i = 0; i < f.size(); ++i) {
    if (a.ambient().residues())
      f[i] = mod_add(f[i], mod_norm(x[0], a.ambient().modulus), a.ambient().modulus);
    else
      f[i] = add_ck(f[i], x[i % w]);
  }
  return GroundSet(a.ambient(), std::move(f));
}

GroundSet translate(const GroundSet& a, int64_t x) {
  return translate(a, std::span<const int64_t>(&x, 1));
}

GroundSet sumset(const GroundSet& a, const GroundSet& b) {
  require_same_ambient(a, b);
  if (a.empty() || b.empty()) return GroundSet(a.ambient(), {});
  Codec c = codec_for_terms({{&a, 1}, {&b, 1}});
  auto s = detail::set_sum(c.encode_all(a), c.encode_all(b), c.modulus());
  return c.decode_all(s);
}

GroundSet diffset(const GroundSet& a, const GroundSet& b) {
  require_same_ambient(a, b);
  if (a.empty() || b.empty()) return GroundSet(a.ambient(), {});
  Codec c = codec_for_terms({{&a, 1}, {&b, -1}});
  auto nb = detail::negated_sorted(c.encode_all(b), c.modulus());
  return c.decode_all(detail::set_sum(c.encode_all(a), nb, c.modulus()));
}

GroundSet iterated_sumset(const GroundSet& a, int n, int m, size_t cap) {
  if (n < 0 || m < 0) throw InvalidInput("negative multiplicity");
  if (a.empty()) throw EmptySet("iterated sumset of the empty set");
  BoxBuilder bb(a.width());
  bb.add_set(a, 0, n);
  bb.add_set(a, -m, 0);
  Codec c = bb.build(a.ambient());
  auto xa = c.encode_all(a);
  auto xn = detail::negated_sorted(xa, c.modulus());
  std::vector<int64_t> s = {0};
  for (int i = 0; i < n + m; ++i) {
    s = detail::set_sum(s, i < n ? xa : xn, c.modulus());
    if (s.size() > cap)
      throw Truncated("sumset exceeded cap " + std::to_string(cap) + " at step " +
                      std::to_string(i + 1));
  }
  return c.decode_all(s);
}

GroundSet dilate(const GroundSet& a, int64_t lambda) {
  std::vector<int64_t> f = a.flat();
  for (auto& x : f) {
    if (a.ambient().residues())
      x = mod_mul(x, mod_norm(lambda, a.ambient().modulus), a.ambient().modulus);
    else
      x = mul_ck(x, lambda);
  }
  return GroundSet(a.ambient(), std::move(f));
}

GroundSet sigma_k(const GroundSet& a, int k, size_t cap) {
  if (k < 0) throw InvalidInput("k must be >= 0");
  BoxBuilder bb(a.width());
  bb.add_each(a, 0, 1);
  Codec c = bb.build(a.ambient());
  auto xa = c.encode_all(a);
  const int64_t md = c.modulus();
  std::vector<std::vector<int64_t>> layer(k + 1);
  layer[0] = {0};
  for (size_t i = 0; i < xa.size(); ++i) {
    int top = std::min<int>(k, static_cast<int>(i) + 1);
    for (int j = top; j >= 1; --j) {
      if (layer[j - 1].empty()) continue;
      auto shifted = detail::set_sum(layer[j - 1], std::vector<int64_t>{xa[i]}, md);
      std::vector<int64_t> merged;
      std::set_union(layer[j].begin(), layer[j].end(), shifted.begin(), shifted.end(),
                     std::back_inserter(merged));
      if (merged.size() > cap) throw Truncated("sigma_k layer exceeded cap");
      layer[j].swap(merged);
    }
  }
  std::vector<int64_t> all;
  for (auto& l : layer) all.insert(all.end(), l.begin(), l.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  if (all.size() > cap) throw Truncated("sigma_k exceeded cap");
  return c.decode_all(all);
}

// ---- representation functions ----

BigInt RepFn::at(std::span<const int64_t> x) const {
  auto i = support.index_of(x);
  return i ? counts[*i] : BigInt(0);
}

BigInt RepFn::at(int64_t x) const {
  if (support.ambient().residues()) x = mod_norm(x, support.ambient().modulus);
  return at(std::span<const int64_t>(&x, 1));
}

BigInt RepFn::total() const {
  BigInt t = 0;
  for (auto& c : counts) t += c;
  return t;
}

BigInt RepFn::sum_squares() const {
  BigInt t = 0;
  for (auto& c : counts) t += c * c;
  return t;
}

BigInt RepFn::max() const {
  BigInt m = 0;
  for (auto& c : counts) m = std::max(m, c);
  return m;
}

namespace {

template <class C>
RepFn run_rep(const std::vector<std::pair<const GroundSet*, int>>& terms, const Codec& c) {
  detail::Dist<C> d;
  d.key = {0};
  d.cnt = {C(1)};
  for (auto& [s, sign] : terms) {
    auto x = c.encode_all(*s);
    if (sign < 0) x = detail::negated_sorted(x, c.modulus());
    d = detail::convolve(d, x, c.modulus());
  }
  RepFn r;
  r.support = c.decode_all(d.key);
  r.counts.reserve(d.cnt.size());
  for (auto& v : d.cnt) r.counts.push_back(detail::to_big(v));
  return r;
}

}  // namespace

RepFn rep_fn(const std::vector<std::pair<const GroundSet*, int>>& terms) {
  if (terms.empty()) throw InvalidInput("rep_fn needs at least one term");
  std::vector<std::pair<const GroundSet*, int64_t>> t64;
  std::vector<size_t> sizes;
  for (auto& [s, sign] : terms) {
    if (sign != 1 && sign != -1) throw InvalidInput("sign must be +1 or -1");
    t64.push_back({s, sign});
    sizes.push_back(s->size());
    if (s->empty()) throw EmptySet("rep_fn term is empty");
  }
  Codec c = codec_for_terms(t64);
  if (detail::fits_u64_mass(sizes)) return run_rep<uint64_t>(terms, c);
  return run_rep<BigInt>(terms, c);
}

RepFn rep_fn_k(const GroundSet& a, int k) {
  if (k < 1) throw InvalidInput("k must be >= 1");
  std::vector<std::pair<const GroundSet*, int>> t(k, {&a, 1});
  return rep_fn(t);
}

RepFn rep_fn_diff(const GroundSet& a, const GroundSet& b) {
  require_same_ambient(a, b);
  return rep_fn({{&a, 1}, {&b, -1}});
}

// ---- multiplicative embedding ----

namespace {

std::vector<std::pair<int64_t, int>> factor(int64_t n) {
  std::vector<std::pair<int64_t, int>> f;
  for (int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.push_back({p, e});
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

}  // namespace

MultEmbedding mult_embed(const GroundSet& a) {
  require_scalar_z(a, "mult_embed");
  std::vector<std::vector<std::pair<int64_t, int>>> fac;
  std::vector<int64_t> primes;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t v = a.scalar(i);
    if (v <= 0) throw InvalidInput("mult_embed needs positive integers");
    fac.push_back(factor(v));
    for (auto& [p, e] : fac.back()) primes.push_back(p);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  const int r = std::max<int>(1, static_cast<int>(primes.size()));
  std::vector<std::pair<std::vector<int64_t>, int64_t>> rows;
  for (size_t i = 0; i < a.size(); ++i) {
    std::vector<int64_t> v(r, 0);
    for (auto& [p, e] : fac[i])
      v[std::lower_bound(primes.begin(), primes.end(), p) - primes.begin()] = e;
    rows.push_back({v, a.scalar(i)});
  }
  std::sort(rows.begin(), rows.end());
  MultEmbedding m;
  m.primes = primes;
  std::vector<int64_t> flat;
  for (auto& [v, src] : rows) {
    flat.insert(flat.end(), v.begin(), v.end());
    m.source.push_back(src);
  }
  m.vectors = GroundSet(Ambient::Z(r), std::move(flat));
  return m;
}

GroundSet mult_unembed(const GroundSet& v, const std::vector<int64_t>& primes) {
  std::vector<int64_t> out;
  for (size_t i = 0; i < v.size(); ++i) {
    auto row = v.at(i);
    int64_t x = 1;
    for (size_t j = 0; j < row.size(); ++j) {
      if (row[j] < 0) throw InvalidInput("negative exponent has no integer image");
      if (row[j] > 0 && j >= primes.size()) throw InvalidInput("exponent vector longer than prime list");
      for (int64_t e = 0; e < row[j]; ++e) x = mul_ck(x, primes[j]);
    }
    out.push_back(x);
  }
  return GroundSet::ints(std::move(out));
}

GroundSet product_set(const GroundSet& a, const GroundSet& b) {
  require_scalar_z(a, "product_set");
  require_scalar_z(b, "product_set");
  std::vector<int64_t> out;
  out.reserve(a.size() * b.size());
  for (int64_t x : a.flat())
    for (int64_t y : b.flat()) out.push_back(mul_ck(x, y));
  return GroundSet::ints(std::move(out));
}

}  // namespace adlab

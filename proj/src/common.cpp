#include "adlab/common.hpp"

#include <cmath>
#include <cstdlib>

namespace adlab {

std::string to_dec(const BigInt& x) { return x.str(); }

std::string to_frac(const Rational& q) {
  BigInt n = boost::multiprecision::numerator(q);
  BigInt d = boost::multiprecision::denominator(q);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

long double to_ld(const BigInt& x) { return x.convert_to<long double>(); }

long double to_ld(const Rational& q) {
  // numerator/denominator separately would overflow for huge values
  BigInt n = boost::multiprecision::numerator(q);
  BigInt d = boost::multiprecision::denominator(q);
  long double ln = to_ld(n), ld = to_ld(d);
  if (std::isfinite(static_cast<double>(ln)) && std::isfinite(static_cast<double>(ld)))
    return ln / ld;
  return q.convert_to<long double>();
}

BigInt ipow(const BigInt& b, unsigned e) {
  return boost::multiprecision::pow(b, e);
}

Rational rpow(const Rational& b, unsigned e) {
  Rational r = 1, x = b;
  while (e) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

uint64_t default_budget() {
  if (const char* s = std::getenv("ADLAB_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return v;
  }
  return uint64_t{1} << 26;
}

int64_t add_ck(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("int64 overflow in addition");
  return r;
}
int64_t sub_ck(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow("int64 overflow in subtraction");
  return r;
}
int64_t mul_ck(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("int64 overflow in multiplication");
  return r;
}
int64_t neg_ck(int64_t a) { return sub_ck(0, a); }

int64_t mod_pow(int64_t a, uint64_t e, int64_t n) {
  int64_t r = 1 % n;
  a = mod_norm(a, n);
  while (e) {
    if (e & 1) r = mod_mul(r, a, n);
    a = mod_mul(a, a, n);
    e >>= 1;
  }
  return r;
}

int64_t gcd64(int64_t a, int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  // deterministic Miller-Rabin for 64-bit
  int64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    int64_t x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int r = 1; r < s; ++r) {
      x = mod_mul(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

int64_t next_prime(int64_t n) {
  if (n <= 2) return 2;
  while (!is_prime(n)) n = add_ck(n, 1);
  return n;
}

std::vector<int64_t> first_primes(int count) {
  std::vector<int64_t> out;
  for (int64_t p = 2; static_cast<int>(out.size()) < count; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

uint64_t Rng::below(uint64_t n) {
  if (n == 0) throw InvalidInput("Rng::below(0)");
  // rejection on the top range to stay unbiased
  uint64_t lim = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do {
    x = eng_();
  } while (x >= lim);
  return x % n;
}

int64_t Rng::range(int64_t lo, int64_t hi) {
  if (hi < lo) throw InvalidInput("Rng::range with hi < lo");
  uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
  if (span == 0) return static_cast<int64_t>(eng_());
  return static_cast<int64_t>(static_cast<uint64_t>(lo) + below(span));
}

double Rng::unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

}  // namespace adlab

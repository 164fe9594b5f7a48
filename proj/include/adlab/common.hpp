#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace adlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_dec(const BigInt& x);
std::string to_frac(const Rational& q);  // "p/q", or "p" when q == 1
long double to_ld(const Rational& q);
long double to_ld(const BigInt& x);
BigInt ipow(const BigInt& b, unsigned e);
Rational rpow(const Rational& b, unsigned e);

// error kinds

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define ADLAB_ERROR(Name)                                              \
  struct Name : Error {                                                \
    using Error::Error;                                                \
    const char* kind() const noexcept override { return #Name; }       \
  }

ADLAB_ERROR(AmbientMismatch);
ADLAB_ERROR(Overflow);
ADLAB_ERROR(Truncated);
ADLAB_ERROR(BudgetExceeded);
ADLAB_ERROR(VerificationFailed);
ADLAB_ERROR(InvalidInput);
ADLAB_ERROR(PreconditionViolation);
ADLAB_ERROR(Unsupported);
ADLAB_ERROR(ParseError);
ADLAB_ERROR(TrialsExhausted);
ADLAB_ERROR(NotDissociated);
ADLAB_ERROR(EmptySet);

#undef ADLAB_ERROR

// Work counter shared by the exponential searches. One unit ~ one state
// (a subset sum, a coefficient vector, a search node).
struct Budget {
  uint64_t limit;
  uint64_t used = 0;

  explicit Budget(uint64_t lim) : limit(lim) {}
  bool spend(uint64_t n) {
    used += n;
    return used <= limit;
  }
  bool exhausted() const { return used > limit; }
  uint64_t left() const { return used >= limit ? 0 : limit - used; }
};

// 2^26 unless ADLAB_BUDGET says otherwise
uint64_t default_budget();

// checked int64 arithmetic
int64_t add_ck(int64_t a, int64_t b);
int64_t sub_ck(int64_t a, int64_t b);
int64_t mul_ck(int64_t a, int64_t b);
int64_t neg_ck(int64_t a);

inline int64_t mod_norm(int64_t a, int64_t n) {
  int64_t r = a % n;
  return r < 0 ? r + n : r;
}
inline int64_t mod_add(int64_t a, int64_t b, int64_t n) {
  // a, b already in [0, n)
  uint64_t s = static_cast<uint64_t>(a) + static_cast<uint64_t>(b);
  if (s >= static_cast<uint64_t>(n)) s -= n;
  return static_cast<int64_t>(s);
}
inline int64_t mod_mul(int64_t a, int64_t b, int64_t n) {
  return static_cast<int64_t>((static_cast<__int128>(a) * b) % n);
}
int64_t mod_pow(int64_t a, uint64_t e, int64_t n);
int64_t gcd64(int64_t a, int64_t b);
bool is_prime(int64_t n);
int64_t next_prime(int64_t n);  // smallest prime >= n
std::vector<int64_t> first_primes(int count);

// Portable seeded rng. Bounded draws avoid std distributions so streams
// match across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}
  uint64_t next() { return eng_(); }
  uint64_t below(uint64_t n);              // uniform in [0, n)
  int64_t range(int64_t lo, int64_t hi);   // uniform in [lo, hi]
  double unit();                           // [0, 1)
  bool coin(double p) { return unit() < p; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace adlab

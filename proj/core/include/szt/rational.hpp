#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace szt {

// Exact arithmetic everywhere: arbitrary precision integers and rationals.
// mpq_class keeps values in lowest terms with a positive denominator, which
// is exactly the normal form we want.
using Int = mpz_class;
using Rat = mpq_class;

// Parses "p", "-p" or "p/q" with decimal integer parts. Throws
// std::invalid_argument on malformed input or a zero denominator.
Rat rat_from_string(const std::string& s);

std::string to_string(const Rat& r);
std::string to_string(const Int& z);

Int binomial(unsigned long n, unsigned long k);
Int factorial(unsigned long n);

// Scales a rational vector to a primitive integer vector: common denominator
// cleared, content divided out, first nonzero entry positive. The zero vector
// stays zero.
std::vector<Int> primitive_lift(const std::vector<Rat>& v);

// Deterministic pseudo random numbers for tests and self checks. Hand rolled
// rejection sampling on top of a fixed 64-bit generator so that sequences do
// not depend on the standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  // uniform integer in [lo, hi], inclusive
  int uniform(int lo, int hi);

 private:
  std::uint64_t state_[4];
};

}  // namespace szt

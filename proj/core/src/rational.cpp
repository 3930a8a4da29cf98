#include "szt/rational.hpp"

#include <stdexcept>

namespace szt {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Rat rat_from_string(const std::string& s) {
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den))
    throw std::invalid_argument("malformed rational literal: '" + s + "'");
  Int n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Int& z) { return z.get_str(); }

Int binomial(unsigned long n, unsigned long k) {
  Int out;
  if (k > n) return 0;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Int factorial(unsigned long n) {
  Int out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

std::vector<Int> primitive_lift(const std::vector<Rat>& v) {
  Int lcm = 1;
  for (const auto& x : v)
    if (x != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<Int> out(v.size());
  Int content = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = Int(v[i].get_num() * (lcm / v[i].get_den()));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
  }
  if (content == 0) return out;  // all zero
  int lead_sign = 0;
  for (const auto& x : out)
    if (x != 0) {
      lead_sign = sgn(x);
      break;
    }
  if (lead_sign < 0) content = -content;
  for (auto& x : out) x /= content;
  return out;
}

// xoshiro256** by Blackman and Vigna, seeded with splitmix64
Rng::Rng(std::uint64_t seed) {
  auto splitmix = [&seed]() {
    seed += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = seed;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  for (auto& s : state_) s = splitmix();
}

std::uint64_t Rng::next() {
  auto rotl = [](std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); };
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

int Rng::uniform(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

}  // namespace szt

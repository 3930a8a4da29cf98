#include "szt/bipoly.hpp"

#include <algorithm>

namespace szt {

BiPoly BiPoly::constant(const Int& v) { return monomial(0, 0, v); }

BiPoly BiPoly::monomial(int a, int b, const Int& v) {
  BiPoly p;
  p.add_term(a, b, v);
  return p;
}

Int BiPoly::coeff(int a, int b) const {
  auto it = c_.find({a, b});
  return it == c_.end() ? Int(0) : it->second;
}

void BiPoly::add_term(int a, int b, const Int& v) {
  if (v == 0) return;
  auto [it, fresh] = c_.try_emplace({a, b}, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) c_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, v] : o.c_) add_term(k.first, k.second, v);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [k, v] : o.c_) add_term(k.first, k.second, -v);
  return *this;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r = *this;
  r += o;
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
  BiPoly r = *this;
  r -= o;
  return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r;
  for (const auto& [ka, va] : c_)
    for (const auto& [kb, vb] : o.c_)
      r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
  return r;
}

BiPoly BiPoly::operator*(const Int& v) const {
  BiPoly r;
  if (v == 0) return r;
  for (const auto& [k, c] : c_) r.c_[k] = c * v;
  return r;
}

int BiPoly::deg1() const {
  int d = -1;
  for (const auto& [k, v] : c_) d = std::max(d, k.first);
  return d;
}

int BiPoly::deg2() const {
  int d = -1;
  for (const auto& [k, v] : c_) d = std::max(d, k.second);
  return d;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [k, v] : c_) d = std::max(d, k.first + k.second);
  return d;
}

Int BiPoly::eval(const Int& a, const Int& b) const {
  Int r = 0;
  for (const auto& [k, v] : c_) {
    Int pa, pb;
    mpz_pow_ui(pa.get_mpz_t(), a.get_mpz_t(), k.first);
    mpz_pow_ui(pb.get_mpz_t(), b.get_mpz_t(), k.second);
    r += v * pa * pb;
  }
  return r;
}

Rat BiPoly::eval(const Rat& a, const Rat& b) const {
  Rat r = 0;
  for (const auto& [k, v] : c_) {
    Rat term(v);
    for (int i = 0; i < k.first; ++i) term *= a;
    for (int i = 0; i < k.second; ++i) term *= b;
    r += term;
  }
  return r;
}

BiPoly pow(const BiPoly& p, int e) {
  BiPoly r = BiPoly::constant(1);
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

}  // namespace szt

#include "szt/superspace.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace szt {

std::optional<std::pair<ThetaWord, int>> theta_concat(const ThetaWord& a, const ThetaWord& b) {
  ThetaWord out;
  out.reserve(a.size() + b.size());
  // merge the two increasing words; each element of b skipped past an element
  // of a larger than it contributes one transposition
  int sign = 1;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return std::nullopt;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      if ((a.size() - i) % 2 != 0) sign = -sign;
      out.push_back(b[j++]);
    }
  }
  out.insert(out.end(), a.begin() + i, a.end());
  out.insert(out.end(), b.begin() + j, b.end());
  return std::make_pair(std::move(out), sign);
}

SuperElement SuperElement::constant(int n, const Rat& c) {
  SuperElement f(n);
  f.add_term(TermKey{XExp(n, 0), {}}, c);
  return f;
}

SuperElement SuperElement::variable(int n, int i) {
  SuperElement f(n);
  XExp e(n, 0);
  e.at(i) = 1;
  f.add_term(TermKey{std::move(e), {}}, 1);
  return f;
}

SuperElement SuperElement::theta(int n, int i) {
  SuperElement f(n);
  if (i < 0 || i >= n) throw std::out_of_range("theta index");
  f.add_term(TermKey{XExp(n, 0), {i}}, 1);
  return f;
}

SuperElement SuperElement::linear_form(const std::vector<Rat>& coeffs) {
  const int n = static_cast<int>(coeffs.size());
  SuperElement f(n);
  for (int i = 0; i < n; ++i) {
    if (coeffs[i] == 0) continue;
    XExp e(n, 0);
    e[i] = 1;
    f.add_term(TermKey{std::move(e), {}}, coeffs[i]);
  }
  return f;
}

SuperElement SuperElement::linear_theta(const std::vector<Rat>& coeffs) {
  const int n = static_cast<int>(coeffs.size());
  SuperElement f(n);
  for (int i = 0; i < n; ++i)
    if (coeffs[i] != 0) f.add_term(TermKey{XExp(n, 0), {i}}, coeffs[i]);
  return f;
}

Rat SuperElement::coeff(const TermKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rat(0) : it->second;
}

void SuperElement::add_term(const TermKey& k, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SuperElement& SuperElement::operator+=(const SuperElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

SuperElement& SuperElement::operator-=(const SuperElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

SuperElement SuperElement::operator+(const SuperElement& o) const {
  SuperElement r = *this;
  r += o;
  return r;
}

SuperElement SuperElement::operator-(const SuperElement& o) const {
  SuperElement r = *this;
  r -= o;
  return r;
}

SuperElement SuperElement::operator*(const SuperElement& o) const {
  SuperElement r(n_);
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      auto th = theta_concat(ka.th, kb.th);
      if (!th) continue;
      XExp e(n_);
      for (int i = 0; i < n_; ++i) e[i] = ka.x[i] + kb.x[i];
      r.add_term(TermKey{std::move(e), std::move(th->first)}, ca * cb * th->second);
    }
  }
  return r;
}

SuperElement SuperElement::operator*(const Rat& c) const {
  SuperElement r(n_);
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

bool SuperElement::operator==(const SuperElement& o) const {
  return n_ == o.n_ && terms_ == o.terms_;
}

bool SuperElement::is_bihomogeneous() const { return components().size() <= 1; }

std::optional<Bidegree> SuperElement::bidegree() const {
  auto comps = components();
  if (comps.size() != 1) return std::nullopt;
  return comps.begin()->first;
}

std::map<Bidegree, SuperElement> SuperElement::components() const {
  std::map<Bidegree, SuperElement> out;
  for (const auto& [k, c] : terms_) {
    Bidegree bd{std::accumulate(k.x.begin(), k.x.end(), 0), static_cast<int>(k.th.size())};
    auto [it, fresh] = out.try_emplace(bd, SuperElement(n_));
    it->second.add_term(k, c);
  }
  return out;
}

SuperElement SuperElement::euler_d() const {
  SuperElement r(n_);
  for (const auto& [k, c] : terms_) {
    for (int i = 0; i < n_; ++i) {
      if (k.x[i] == 0) continue;
      auto th = theta_concat(k.th, {i});
      if (!th) continue;
      XExp e = k.x;
      e[i] -= 1;
      r.add_term(TermKey{std::move(e), std::move(th->first)}, c * k.x[i] * th->second);
    }
  }
  return r;
}

SuperElement SuperElement::apply_to(const SuperElement& g) const {
  if (n_ != g.n_) throw std::invalid_argument("variable count mismatch in apply_to");
  SuperElement r(n_);
  for (const auto& [op, cop] : terms_) {
    for (const auto& [tg, ctg] : g.terms_) {
      // bosonic part: iterated partials of the x monomial
      bool dead = false;
      Int scale = 1;
      XExp e(n_);
      for (int i = 0; i < n_; ++i) {
        if (tg.x[i] < op.x[i]) {
          dead = true;
          break;
        }
        e[i] = tg.x[i] - op.x[i];
        for (int a = 0; a < op.x[i]; ++a) scale *= tg.x[i] - a;
      }
      if (dead) continue;
      // fermionic part: contractions compose right to left
      int sign = 1;
      ThetaWord word = tg.th;
      for (auto it = op.th.rbegin(); it != op.th.rend() && !dead; ++it) {
        auto pos = std::find(word.begin(), word.end(), *it);
        if (pos == word.end()) {
          dead = true;
          break;
        }
        if ((pos - word.begin()) % 2 != 0) sign = -sign;
        word.erase(pos);
      }
      if (dead) continue;
      r.add_term(TermKey{std::move(e), std::move(word)}, cop * ctg * scale * sign);
    }
  }
  return r;
}

SuperElement SuperElement::pow(int e) const {
  SuperElement r = constant(n_, 1);
  for (int i = 0; i < e; ++i) r = r * (*this);
  return r;
}

std::string SuperElement::str() const {
  if (terms_.empty()) return "0";
  // display order: x part by decreasing lexicographic exponent, words ascending
  std::vector<const std::pair<const TermKey, Rat>*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    if (a->first.x != b->first.x) return a->first.x > b->first.x;
    return a->first.th < b->first.th;
  });
  std::string out;
  for (const auto* t : order) {
    const auto& [k, c] = *t;
    std::string mono;
    for (int i = 0; i < n_; ++i) {
      if (k.x[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (k.x[i] > 1) mono += "^" + std::to_string(k.x[i]);
    }
    for (int i : k.th) {
      if (!mono.empty()) mono += "*";
      mono += "th" + std::to_string(i + 1);
    }
    std::string cs = to_string(c);
    std::string body;
    if (mono.empty()) {
      body = cs;
    } else if (cs == "1") {
      body = mono;
    } else if (cs == "-1") {
      body = "-" + mono;
    } else {
      body = cs + "*" + mono;
    }
    if (out.empty()) {
      out = body;
    } else if (!body.empty() && body[0] == '-') {
      out += " - " + body.substr(1);
    } else {
      out += " + " + body;
    }
  }
  return out;
}

SuperElement operator*(const Rat& c, const SuperElement& f) { return f * c; }

}  // namespace szt

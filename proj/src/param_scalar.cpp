#include "racah/param_scalar.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "racah/errors.hpp"

namespace racah {

namespace {

void strip_trailing_zeros(ExpVec& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

unsigned long grade(const ExpVec& e) {
  return std::accumulate(e.begin(), e.end(), 0ul);
}

}  // namespace

bool GradedLexDesc::operator()(const ExpVec& a, const ExpVec& b) const {
  unsigned long ga = grade(a);
  unsigned long gb = grade(b);
  if (ga != gb) return ga > gb;
  std::size_t m = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < m; ++i) {
    uint32_t ea = i < a.size() ? a[i] : 0;
    uint32_t eb = i < b.size() ? b[i] : 0;
    if (ea != eb) return ea > eb;
  }
  return false;
}

ParamScalar::ParamScalar(GaussianRational c) {
  if (!c.is_zero()) terms_.emplace(ExpVec{}, std::move(c));
}

ParamScalar ParamScalar::rational(long num, long den) {
  return ParamScalar(GaussianRational::rational(num, den));
}

ParamScalar ParamScalar::imaginary() { return ParamScalar(GaussianRational::imaginary()); }

ParamScalar ParamScalar::hbar(uint32_t power) {
  return monomial(ExpVec{power}, GaussianRational(1));
}

ParamScalar ParamScalar::a(uint32_t i, uint32_t power) {
  if (i == 0) throw BadIndices("a: parameter index must be >= 1");
  ExpVec e(i + 1, 0);
  e[i] = power;
  return monomial(std::move(e), GaussianRational(1));
}

ParamScalar ParamScalar::monomial(ExpVec exps, GaussianRational c) {
  ParamScalar s;
  s.add_term(std::move(exps), c);
  return s;
}

bool ParamScalar::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first.empty();
}

GaussianRational ParamScalar::constant_value() const {
  if (terms_.empty()) return GaussianRational(0);
  if (!is_constant()) throw std::logic_error("constant_value: scalar has parameters");
  return terms_.begin()->second;
}

void ParamScalar::add_term(ExpVec e, const GaussianRational& c) {
  if (c.is_zero()) return;
  strip_trailing_zeros(e);
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamScalar ParamScalar::operator-() const {
  ParamScalar r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

ParamScalar ParamScalar::operator+(const ParamScalar& o) const {
  ParamScalar r = *this;
  return r += o;
}

ParamScalar ParamScalar::operator-(const ParamScalar& o) const {
  ParamScalar r = *this;
  return r -= o;
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

ParamScalar ParamScalar::operator*(const ParamScalar& o) const {
  ParamScalar r;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      ExpVec e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      r.add_term(std::move(e), ca * cb);
    }
  }
  return r;
}

ParamScalar& ParamScalar::operator*=(const ParamScalar& o) { return *this = *this * o; }

ParamScalar ParamScalar::substitute(const ParamBindings& b) const {
  ParamScalar r;
  for (const auto& [e, c] : terms_) {
    ExpVec ne = e;
    GaussianRational nc = c;
    for (const auto& [slot, val] : b) {
      if (slot < ne.size() && ne[slot] > 0) {
        nc *= val.pow(ne[slot]);
        ne[slot] = 0;
      }
    }
    r.add_term(std::move(ne), nc);
  }
  return r;
}

bool ParamScalar::divisible_by_hbar(uint32_t k) const {
  for (const auto& [e, c] : terms_) {
    uint32_t h = e.empty() ? 0 : e[0];
    if (h < k) return false;
  }
  return true;
}

ParamScalar ParamScalar::divide_by_hbar(uint32_t k) const {
  if (k == 0) return *this;
  ParamScalar r;
  for (const auto& [e, c] : terms_) {
    uint32_t h = e.empty() ? 0 : e[0];
    if (h < k) throw NotDivisible("divide_by_hbar: term " + str() + " has hb degree < " + std::to_string(k));
    ExpVec ne = e;
    ne[0] -= k;
    r.add_term(std::move(ne), c);
  }
  return r;
}

std::string ParamScalar::str() const {
  if (terms_.empty()) return "(0)";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += c.str();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out += "*";
      out += i == 0 ? "hb" : "a" + std::to_string(i);
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

}  // namespace racah

#include "racah/phase_function.hpp"

#include "racah/errors.hpp"

namespace racah {

PhaseFunction PhaseFunction::constant(uint32_t dim, ParamScalar c) {
  return monomial(dim, SiteMonomial{std::vector<int32_t>(dim, 0), std::vector<uint32_t>(dim, 0)},
                  std::move(c));
}

PhaseFunction PhaseFunction::coordinate(uint32_t dim, uint32_t site, int32_t power) {
  PhaseFunction f(dim);
  f.check_site(site);
  SiteMonomial m{std::vector<int32_t>(dim, 0), std::vector<uint32_t>(dim, 0)};
  m.x_exp[site - 1] = power;
  f.add_term(std::move(m), ParamScalar(1));
  return f;
}

PhaseFunction PhaseFunction::momentum(uint32_t dim, uint32_t site, uint32_t power) {
  PhaseFunction f(dim);
  f.check_site(site);
  SiteMonomial m{std::vector<int32_t>(dim, 0), std::vector<uint32_t>(dim, 0)};
  m.p_exp[site - 1] = power;
  f.add_term(std::move(m), ParamScalar(1));
  return f;
}

PhaseFunction PhaseFunction::monomial(uint32_t dim, SiteMonomial m, ParamScalar c) {
  PhaseFunction f(dim);
  if (m.x_exp.size() != dim || m.p_exp.size() != dim)
    throw DimensionMismatch("monomial: exponent vectors must have length dim");
  f.add_term(std::move(m), c);
  return f;
}

void PhaseFunction::check_site(uint32_t site) const {
  if (site < 1 || site > dim_)
    throw BadIndices("site " + std::to_string(site) + " outside 1.." + std::to_string(dim_));
}

void PhaseFunction::check_dim(const PhaseFunction& o) const {
  if (dim_ != o.dim_)
    throw DimensionMismatch("operands over " + std::to_string(dim_) + " and " +
                            std::to_string(o.dim_) + " sites");
}

void PhaseFunction::add_term(SiteMonomial m, const ParamScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PhaseFunction PhaseFunction::operator-() const {
  PhaseFunction r(dim_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

PhaseFunction PhaseFunction::operator+(const PhaseFunction& o) const {
  PhaseFunction r = *this;
  return r += o;
}

PhaseFunction PhaseFunction::operator-(const PhaseFunction& o) const {
  PhaseFunction r = *this;
  return r -= o;
}

PhaseFunction& PhaseFunction::operator+=(const PhaseFunction& o) {
  check_dim(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PhaseFunction& PhaseFunction::operator-=(const PhaseFunction& o) {
  check_dim(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

PhaseFunction PhaseFunction::operator*(const PhaseFunction& o) const {
  check_dim(o);
  PhaseFunction r(dim_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      SiteMonomial m = ma;
      for (uint32_t s = 0; s < dim_; ++s) {
        m.x_exp[s] += mb.x_exp[s];
        m.p_exp[s] += mb.p_exp[s];
      }
      r.add_term(std::move(m), ca * cb);
    }
  }
  return r;
}

PhaseFunction PhaseFunction::scaled(const ParamScalar& c) const {
  PhaseFunction r(dim_);
  for (const auto& [m, k] : terms_) r.add_term(m, k * c);
  return r;
}

bool PhaseFunction::operator==(const PhaseFunction& o) const {
  return dim_ == o.dim_ && terms_ == o.terms_;
}

PhaseFunction PhaseFunction::substitute_params(const ParamBindings& b) const {
  PhaseFunction r(dim_);
  for (const auto& [m, c] : terms_) r.add_term(m, c.substitute(b));
  return r;
}

PhaseFunction poisson_bracket(const PhaseFunction& f, const PhaseFunction& g) {
  f.check_dim(g);
  uint32_t dim = f.dim_;
  PhaseFunction r(dim);
  for (const auto& [ma, ca] : f.terms_) {
    for (const auto& [mb, cb] : g.terms_) {
      for (uint32_t s = 0; s < dim; ++s) {
        long w = static_cast<long>(ma.x_exp[s]) * mb.p_exp[s] -
                 static_cast<long>(ma.p_exp[s]) * mb.x_exp[s];
        if (w == 0) continue;
        SiteMonomial m = ma;
        for (uint32_t t = 0; t < dim; ++t) {
          m.x_exp[t] += mb.x_exp[t];
          m.p_exp[t] += mb.p_exp[t];
        }
        m.x_exp[s] -= 1;
        m.p_exp[s] -= 1;
        r.add_term(std::move(m), ca * cb * ParamScalar(GaussianRational(w)));
      }
    }
  }
  return r;
}

std::string PhaseFunction::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    std::string coeff = c.term_count() > 1 ? "(" + c.str() + ")" : c.str();
    out += coeff + m.factors("x", "p");
  }
  return out;
}

std::vector<std::string> PhaseFunction::term_strings(std::size_t limit) const {
  std::vector<std::string> out;
  for (const auto& [m, c] : terms_) {
    if (out.size() >= limit) break;
    std::string coeff = c.term_count() > 1 ? "(" + c.str() + ")" : c.str();
    out.push_back(coeff + m.factors("x", "p"));
  }
  return out;
}

}  // namespace racah

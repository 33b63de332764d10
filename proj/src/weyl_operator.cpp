#include "racah/weyl_operator.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <utility>

#include "racah/errors.hpp"

namespace racah {

namespace {

// Normal ordering of p^b x^k as sum_j coef[j] * (-i*hb)^j * x^(k-j) p^(b-j).
// Derived by the swap rule one momentum factor at a time:
//   p^b x^k = (p^(b-1) x^k) p - i*hb*k * (p^(b-1) x^(k-1))
// Memoised per thread on the (k, b) pair; coefficients are plain integers,
// so the table is shared by symbolic and numeric hb alike.
const std::vector<mpz_class>& normal_order_coefs(int32_t k, uint32_t b) {
  thread_local std::map<std::pair<int32_t, uint32_t>, std::vector<mpz_class>> memo;
  auto key = std::make_pair(k, b);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  std::vector<mpz_class> coefs;
  if (b == 0) {
    coefs.assign(1, mpz_class(1));
  } else {
    const auto& same = normal_order_coefs(k, b - 1);
    const auto& shifted = normal_order_coefs(k - 1, b - 1);
    coefs.assign(b + 1, mpz_class(0));
    for (std::size_t j = 0; j < same.size(); ++j) coefs[j] += same[j];
    for (std::size_t j = 0; j < shifted.size(); ++j) coefs[j + 1] += k * shifted[j];
  }
  return memo.emplace(key, std::move(coefs)).first->second;
}

mpz_class falling_factorial(long m, uint32_t count) {
  mpz_class r(1);
  for (uint32_t j = 0; j < count; ++j) r *= mpz_class(m - static_cast<long>(j));
  return r;
}

std::vector<ParamScalar> minus_i_hbar_powers(const ParamScalar& hbar_elem, std::size_t up_to) {
  std::vector<ParamScalar> pw(up_to + 1);
  pw[0] = ParamScalar(1);
  ParamScalar base = hbar_elem.is_zero() ? ParamScalar() : -(ParamScalar::imaginary() * hbar_elem);
  for (std::size_t j = 1; j <= up_to; ++j) pw[j] = pw[j - 1] * base;
  return pw;
}

}  // namespace

WeylOperator WeylOperator::constant(uint32_t dim, ParamScalar c) {
  return monomial(dim, SiteMonomial{std::vector<int32_t>(dim, 0), std::vector<uint32_t>(dim, 0)},
                  std::move(c));
}

WeylOperator WeylOperator::position(uint32_t dim, uint32_t site, int32_t power) {
  WeylOperator w(dim);
  w.check_site(site);
  SiteMonomial m{std::vector<int32_t>(dim, 0), std::vector<uint32_t>(dim, 0)};
  m.x_exp[site - 1] = power;
  w.add_term(std::move(m), ParamScalar(1));
  return w;
}

WeylOperator WeylOperator::momentum(uint32_t dim, uint32_t site, uint32_t power) {
  WeylOperator w(dim);
  w.check_site(site);
  SiteMonomial m{std::vector<int32_t>(dim, 0), std::vector<uint32_t>(dim, 0)};
  m.p_exp[site - 1] = power;
  w.add_term(std::move(m), ParamScalar(1));
  return w;
}

WeylOperator WeylOperator::monomial(uint32_t dim, SiteMonomial m, ParamScalar c) {
  WeylOperator w(dim);
  if (m.x_exp.size() != dim || m.p_exp.size() != dim)
    throw DimensionMismatch("monomial: exponent vectors must have length dim");
  w.add_term(std::move(m), c);
  return w;
}

void WeylOperator::check_site(uint32_t site) const {
  if (site < 1 || site > dim_)
    throw BadIndices("site " + std::to_string(site) + " outside 1.." + std::to_string(dim_));
}

void WeylOperator::check_dim(const WeylOperator& o) const {
  if (dim_ != o.dim_)
    throw DimensionMismatch("operands over " + std::to_string(dim_) + " and " +
                            std::to_string(o.dim_) + " sites");
}

void WeylOperator::add_term(SiteMonomial m, const ParamScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeylOperator WeylOperator::operator-() const {
  WeylOperator r(dim_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

WeylOperator WeylOperator::operator+(const WeylOperator& o) const {
  WeylOperator r = *this;
  return r += o;
}

WeylOperator WeylOperator::operator-(const WeylOperator& o) const {
  WeylOperator r = *this;
  return r -= o;
}

WeylOperator& WeylOperator::operator+=(const WeylOperator& o) {
  check_dim(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

WeylOperator& WeylOperator::operator-=(const WeylOperator& o) {
  check_dim(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

WeylOperator WeylOperator::scaled(const ParamScalar& c) const {
  WeylOperator r(dim_);
  for (const auto& [m, k] : terms_) r.add_term(m, k * c);
  return r;
}

bool WeylOperator::operator==(const WeylOperator& o) const {
  return dim_ == o.dim_ && terms_ == o.terms_;
}

WeylOperator WeylOperator::substitute_params(const ParamBindings& b) const {
  WeylOperator r(dim_);
  for (const auto& [m, c] : terms_) r.add_term(m, c.substitute(b));
  return r;
}

WeylOperator WeylOperator::divide_by_hbar(uint32_t k) const {
  WeylOperator r(dim_);
  for (const auto& [m, c] : terms_) r.add_term(m, c.divide_by_hbar(k));
  return r;
}

PhaseFunction WeylOperator::semiclassical_limit() const {
  ParamBindings kill_hbar{{0u, GaussianRational(0)}};
  PhaseFunction r(dim_);
  for (const auto& [m, c] : terms_) {
    ParamScalar cc = c.substitute(kill_hbar);
    if (!cc.is_zero()) r += PhaseFunction::monomial(dim_, m, cc);
  }
  return r;
}

std::string WeylOperator::str() const {
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

std::vector<std::string> WeylOperator::term_strings(std::size_t limit) const {
  std::vector<std::string> out;
  for (const auto& [m, c] : terms_) {
    if (out.size() >= limit) break;
    std::string coeff = c.term_count() > 1 ? "(" + c.str() + ")" : c.str();
    out.push_back(coeff + m.factors("x", "p"));
  }
  return out;
}

WeylOperator op_mul(const WeylOperator& a, const WeylOperator& b, const ParamScalar& hbar_elem) {
  a.check_dim(b);
  uint32_t dim = a.dim_;
  WeylOperator r(dim);

  uint32_t max_swaps = 0;
  for (const auto& [ma, ca] : a.terms_)
    for (uint32_t s = 0; s < dim; ++s) max_swaps = std::max(max_swaps, ma.p_exp[s]);
  std::vector<ParamScalar> ipow = minus_i_hbar_powers(hbar_elem, std::size_t(max_swaps) * dim);

  struct SiteChoice {
    uint32_t site;
    const std::vector<mpz_class>* coefs;
  };

  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      ParamScalar base = ca * cb;

      std::vector<SiteChoice> active;
      for (uint32_t s = 0; s < dim; ++s) {
        if (ma.p_exp[s] > 0 && mb.x_exp[s] != 0)
          active.push_back({s, &normal_order_coefs(mb.x_exp[s], ma.p_exp[s])});
      }

      SiteMonomial m{std::vector<int32_t>(dim, 0), std::vector<uint32_t>(dim, 0)};
      for (uint32_t s = 0; s < dim; ++s) {
        m.x_exp[s] = ma.x_exp[s] + mb.x_exp[s];
        m.p_exp[s] = ma.p_exp[s] + mb.p_exp[s];
      }

      if (active.empty()) {
        r.add_term(std::move(m), base);
        continue;
      }

      // Walk every combination of per-site swap counts.
      std::vector<uint32_t> j(active.size(), 0);
      for (;;) {
        mpz_class prod(1);
        uint32_t total = 0;
        bool dead = false;
        for (std::size_t t = 0; t < active.size(); ++t) {
          const mpz_class& c = (*active[t].coefs)[j[t]];
          if (c == 0) {
            dead = true;
            break;
          }
          prod *= c;
          total += j[t];
        }
        if (!dead) {
          SiteMonomial mm = m;
          for (std::size_t t = 0; t < active.size(); ++t) {
            mm.x_exp[active[t].site] -= static_cast<int32_t>(j[t]);
            mm.p_exp[active[t].site] -= j[t];
          }
          r.add_term(std::move(mm), base * ipow[total] * ParamScalar(GaussianRational(mpq_class(prod))));
        }
        std::size_t t = 0;
        for (; t < active.size(); ++t) {
          if (j[t] + 1 < active[t].coefs->size()) {
            ++j[t];
            break;
          }
          j[t] = 0;
        }
        if (t == active.size()) break;
      }
    }
  }
  return r;
}

WeylOperator commutator(const WeylOperator& a, const WeylOperator& b, const ParamScalar& hbar_elem) {
  return op_mul(a, b, hbar_elem) - op_mul(b, a, hbar_elem);
}

WeylOperator anticommutator(const WeylOperator& a, const WeylOperator& b,
                            const ParamScalar& hbar_elem) {
  return op_mul(a, b, hbar_elem) + op_mul(b, a, hbar_elem);
}

WeylOperator symmetrize3(const WeylOperator& a, const WeylOperator& b, const WeylOperator& c,
                         const ParamScalar& hbar_elem) {
  auto mul3 = [&](const WeylOperator& x, const WeylOperator& y, const WeylOperator& z) {
    return op_mul(op_mul(x, y, hbar_elem), z, hbar_elem);
  };
  return mul3(a, b, c) + mul3(a, c, b) + mul3(b, a, c) + mul3(b, c, a) + mul3(c, a, b) +
         mul3(c, b, a);
}

PhaseFunction semiclassical_bracket(const WeylOperator& a, const WeylOperator& b) {
  WeylOperator c = commutator(a, b, ParamScalar::hbar());
  return c.divide_by_hbar(1).scaled(-ParamScalar::imaginary()).semiclassical_limit();
}

PhaseFunction apply_to_wavefunction(const WeylOperator& op, const PhaseFunction& psi,
                                    const ParamScalar& hbar_elem) {
  if (op.dim() != psi.dim())
    throw DimensionMismatch("apply_to_wavefunction: operand dimensions differ");
  uint32_t dim = op.dim();

  uint32_t max_swaps = 0;
  for (const auto& [m, c] : op.terms())
    for (uint32_t s = 0; s < dim; ++s) max_swaps = std::max(max_swaps, m.p_exp[s]);
  std::vector<ParamScalar> ipow = minus_i_hbar_powers(hbar_elem, std::size_t(max_swaps) * dim);

  PhaseFunction out(dim);
  for (const auto& [mo, co] : op.terms()) {
    for (const auto& [mp, cp] : psi.terms()) {
      for (uint32_t s = 0; s < dim; ++s)
        if (mp.p_exp[s] != 0)
          throw BadIndices("apply_to_wavefunction: wavefunction must be position-only");
      mpz_class factor(1);
      uint32_t total = 0;
      SiteMonomial m{std::vector<int32_t>(dim, 0), std::vector<uint32_t>(dim, 0)};
      bool dead = false;
      for (uint32_t s = 0; s < dim; ++s) {
        uint32_t b = mo.p_exp[s];
        factor *= falling_factorial(mp.x_exp[s], b);
        if (factor == 0) {
          dead = true;
          break;
        }
        total += b;
        m.x_exp[s] = mp.x_exp[s] - static_cast<int32_t>(b) + mo.x_exp[s];
      }
      if (dead) continue;
      out += PhaseFunction::monomial(
          dim, std::move(m), co * cp * ipow[total] * ParamScalar(GaussianRational(mpq_class(factor))));
    }
  }
  return out;
}

}  // namespace racah

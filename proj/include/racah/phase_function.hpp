#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "racah/param_scalar.hpp"
#include "racah/site_monomial.hpp"

namespace racah {

/// Element of the classical phase-space ring over n sites: polynomial in the
/// momenta, Laurent polynomial in the positions, coefficients in the
/// parameter ring.
class PhaseFunction {
 public:
  using TermMap = std::map<SiteMonomial, ParamScalar, SiteMonomialDesc>;

  explicit PhaseFunction(uint32_t dim) : dim_(dim) {}

  static PhaseFunction constant(uint32_t dim, ParamScalar c);
  static PhaseFunction coordinate(uint32_t dim, uint32_t site, int32_t power = 1);
  static PhaseFunction momentum(uint32_t dim, uint32_t site, uint32_t power = 1);
  static PhaseFunction monomial(uint32_t dim, SiteMonomial m, ParamScalar c);

  uint32_t dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  PhaseFunction operator-() const;
  PhaseFunction operator+(const PhaseFunction& o) const;
  PhaseFunction operator-(const PhaseFunction& o) const;
  PhaseFunction operator*(const PhaseFunction& o) const;
  PhaseFunction& operator+=(const PhaseFunction& o);
  PhaseFunction& operator-=(const PhaseFunction& o);
  PhaseFunction scaled(const ParamScalar& c) const;
  bool operator==(const PhaseFunction& o) const;
  bool operator!=(const PhaseFunction& o) const { return !(*this == o); }

  PhaseFunction substitute_params(const ParamBindings& b) const;

  /// Canonical bracket sum over sites of dx*dp crossed partials.
  friend PhaseFunction poisson_bracket(const PhaseFunction& f, const PhaseFunction& g);

  std::string str() const;
  std::vector<std::string> term_strings(std::size_t limit) const;

 private:
  void add_term(SiteMonomial m, const ParamScalar& c);
  void check_site(uint32_t site) const;
  void check_dim(const PhaseFunction& o) const;

  uint32_t dim_;
  TermMap terms_;
};

PhaseFunction poisson_bracket(const PhaseFunction& f, const PhaseFunction& g);

}  // namespace racah

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "racah/gaussian_rational.hpp"

namespace racah {

/// Exponent vector over the formal parameters: slot 0 is hb, slot i >= 1 is a_i.
/// Trailing zeros are always stripped so equal monomials compare equal.
using ExpVec = std::vector<uint32_t>;

/// Slot -> value map used when specialising parameters numerically.
using ParamBindings = std::map<uint32_t, GaussianRational>;

/// Graded-lex order, leading term first (higher total degree, then lex-larger).
struct GradedLexDesc {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

/// Polynomial in hb and a_1..a_k with Gaussian-rational coefficients.
class ParamScalar {
 public:
  using TermMap = std::map<ExpVec, GaussianRational, GradedLexDesc>;

  ParamScalar() = default;
  ParamScalar(GaussianRational c);  // NOLINT: implicit on purpose
  ParamScalar(long v) : ParamScalar(GaussianRational(v)) {}  // NOLINT

  static ParamScalar rational(long num, long den);
  static ParamScalar imaginary();
  static ParamScalar hbar(uint32_t power = 1);
  static ParamScalar a(uint32_t i, uint32_t power = 1);
  static ParamScalar monomial(ExpVec exps, GaussianRational c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// True when no parameter appears (zero counts as constant).
  bool is_constant() const;
  /// The value of a constant scalar; throws std::logic_error otherwise.
  GaussianRational constant_value() const;

  ParamScalar operator-() const;
  ParamScalar operator+(const ParamScalar& o) const;
  ParamScalar operator-(const ParamScalar& o) const;
  ParamScalar operator*(const ParamScalar& o) const;
  ParamScalar& operator+=(const ParamScalar& o);
  ParamScalar& operator-=(const ParamScalar& o);
  ParamScalar& operator*=(const ParamScalar& o);
  bool operator==(const ParamScalar& o) const { return terms_ == o.terms_; }
  bool operator!=(const ParamScalar& o) const { return !(*this == o); }

  /// Replace bound parameters by their values, keeping the rest formal.
  ParamScalar substitute(const ParamBindings& b) const;

  bool divisible_by_hbar(uint32_t k) const;
  /// Exact division by hb^k; throws NotDivisible if any term has lower hb degree.
  ParamScalar divide_by_hbar(uint32_t k) const;

  /// Leading-term-first rendering, e.g. "(3/16)*hb^2 + (-1/4)*a1".
  std::string str() const;

 private:
  void add_term(ExpVec e, const GaussianRational& c);
  TermMap terms_;
};

}  // namespace racah

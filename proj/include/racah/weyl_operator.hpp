#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "racah/param_scalar.hpp"
#include "racah/phase_function.hpp"
#include "racah/site_monomial.hpp"

namespace racah {

/// Element of the n-site Weyl algebra, kept in normal order: every term is
/// a product of position powers (Laurent) to the left of momentum powers.
/// Multiplication reorders through the per-site swap rule
///   p x^k = x^k p - i*hb*k*x^(k-1)
/// applied recursively; the scalar injected for hb is a parameter of the
/// product so numerically specialised algebras use the same code path.
class WeylOperator {
 public:
  using TermMap = std::map<SiteMonomial, ParamScalar, SiteMonomialDesc>;

  explicit WeylOperator(uint32_t dim) : dim_(dim) {}

  static WeylOperator constant(uint32_t dim, ParamScalar c);
  static WeylOperator position(uint32_t dim, uint32_t site, int32_t power = 1);
  static WeylOperator momentum(uint32_t dim, uint32_t site, uint32_t power = 1);
  static WeylOperator monomial(uint32_t dim, SiteMonomial m, ParamScalar c);

  uint32_t dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  WeylOperator operator-() const;
  WeylOperator operator+(const WeylOperator& o) const;
  WeylOperator operator-(const WeylOperator& o) const;
  WeylOperator& operator+=(const WeylOperator& o);
  WeylOperator& operator-=(const WeylOperator& o);
  WeylOperator scaled(const ParamScalar& c) const;
  bool operator==(const WeylOperator& o) const;
  bool operator!=(const WeylOperator& o) const { return !(*this == o); }

  WeylOperator substitute_params(const ParamBindings& b) const;

  /// Coefficient-wise exact division by hb^k; throws NotDivisible.
  WeylOperator divide_by_hbar(uint32_t k) const;

  /// hb -> 0 coefficient-wise, monomials reread as phase-space monomials.
  PhaseFunction semiclassical_limit() const;

  std::string str() const;
  std::vector<std::string> term_strings(std::size_t limit) const;

 private:
  void add_term(SiteMonomial m, const ParamScalar& c);
  void check_site(uint32_t site) const;
  void check_dim(const WeylOperator& o) const;

  uint32_t dim_;
  TermMap terms_;

  friend WeylOperator op_mul(const WeylOperator& a, const WeylOperator& b,
                             const ParamScalar& hbar_elem);
};

WeylOperator op_mul(const WeylOperator& a, const WeylOperator& b,
                    const ParamScalar& hbar_elem = ParamScalar::hbar());
WeylOperator commutator(const WeylOperator& a, const WeylOperator& b,
                        const ParamScalar& hbar_elem = ParamScalar::hbar());
WeylOperator anticommutator(const WeylOperator& a, const WeylOperator& b,
                            const ParamScalar& hbar_elem = ParamScalar::hbar());
/// Sum of the six ordered products of the three operators.
WeylOperator symmetrize3(const WeylOperator& a, const WeylOperator& b, const WeylOperator& c,
                         const ParamScalar& hbar_elem = ParamScalar::hbar());

/// [a,b]/(i*hb) followed by hb -> 0. Operands must carry symbolic hb.
PhaseFunction semiclassical_bracket(const WeylOperator& a, const WeylOperator& b);

/// Differential action on a position-only Laurent polynomial, with momentum
/// acting as -i*hb*(d/dx). Independent of the reordering code path, so it
/// serves as an oracle for op_mul in the tests.
PhaseFunction apply_to_wavefunction(const WeylOperator& op, const PhaseFunction& psi,
                                    const ParamScalar& hbar_elem = ParamScalar::hbar());

}  // namespace racah

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "racah/param_scalar.hpp"
#include "racah/phase_function.hpp"
#include "racah/weyl_operator.hpp"

namespace racah {

enum class AlgebraMode { Classical, Quantum };

/// One classical or quantum algebra element.
using Observable = std::variant<PhaseFunction, WeylOperator>;

/// How hb enters quantum products: symbolic by default, or bound to a
/// nonzero rational so randomized runs stay in exact arithmetic.
struct HbarPolicy {
  ParamScalar elem = ParamScalar::hbar();
  std::optional<GaussianRational> value;

  static HbarPolicy symbolic() { return {}; }
  static HbarPolicy numeric(GaussianRational v) {
    HbarPolicy p;
    p.elem = ParamScalar(v);
    p.value = std::move(v);
    return p;
  }
};

/// Mode, site count, hb handling and parameter bindings for one verification
/// run. All construction and bracket helpers dispatch through this.
class AlgebraEnv {
 public:
  AlgebraEnv(AlgebraMode mode, uint32_t n) : mode_(mode), n_(n) {}

  static AlgebraEnv exact(AlgebraMode mode, uint32_t n) { return AlgebraEnv(mode, n); }
  /// Binds a_1..a_n (and hb in quantum mode unless keep_hbar) to seeded
  /// nonzero rationals.
  static AlgebraEnv randomized(AlgebraMode mode, uint32_t n, uint64_t seed,
                               bool keep_hbar = false);

  AlgebraMode mode() const { return mode_; }
  uint32_t n() const { return n_; }
  const HbarPolicy& hbar() const { return hbar_; }
  const ParamBindings& bindings() const { return bindings_; }
  bool randomized_params() const { return !bindings_.empty(); }

  Observable bind(Observable o) const;
  Observable zero() const;
  Observable constant(const ParamScalar& c) const;

  Observable add(const Observable& a, const Observable& b) const;
  Observable sub(const Observable& a, const Observable& b) const;
  Observable neg(const Observable& a) const;
  Observable mul(const Observable& a, const Observable& b) const;
  Observable scale(const Observable& a, const ParamScalar& c) const;

  /// Poisson bracket, or the commutator normalised by i*hb.
  Observable bracket(const Observable& a, const Observable& b) const;
  /// Not normalised: plain Poisson bracket / plain commutator.
  Observable raw_bracket(const Observable& a, const Observable& b) const;
  /// 2ab classically, the anticommutator in quantum mode.
  Observable acomm(const Observable& a, const Observable& b) const;
  /// 6abc classically, the six-term symmetrizer in quantum mode.
  Observable sym3(const Observable& a, const Observable& b, const Observable& c) const;

  bool is_zero(const Observable& o) const;
  bool equal(const Observable& a, const Observable& b) const;
  std::size_t term_count(const Observable& o) const;
  std::vector<std::string> term_strings(const Observable& o, std::size_t limit) const;

 private:
  AlgebraMode mode_;
  uint32_t n_;
  HbarPolicy hbar_;
  ParamBindings bindings_;
};

}  // namespace racah

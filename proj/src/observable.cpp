#include "racah/observable.hpp"

#include "racah/errors.hpp"
#include "racah/rng.hpp"

namespace racah {

AlgebraEnv AlgebraEnv::randomized(AlgebraMode mode, uint32_t n, uint64_t seed, bool keep_hbar) {
  AlgebraEnv env(mode, n);
  SplitMix64 rng(seed);
  for (uint32_t i = 1; i <= n; ++i) env.bindings_[i] = rng.nonzero_rational();
  if (mode == AlgebraMode::Quantum && !keep_hbar) {
    GaussianRational h = rng.nonzero_rational();
    env.bindings_[0] = h;
    env.hbar_ = HbarPolicy::numeric(h);
  }
  return env;
}

Observable AlgebraEnv::bind(Observable o) const {
  if (bindings_.empty()) return o;
  if (auto* f = std::get_if<PhaseFunction>(&o)) return f->substitute_params(bindings_);
  return std::get<WeylOperator>(o).substitute_params(bindings_);
}

Observable AlgebraEnv::zero() const {
  if (mode_ == AlgebraMode::Classical) return PhaseFunction(n_);
  return WeylOperator(n_);
}

Observable AlgebraEnv::constant(const ParamScalar& c) const {
  ParamScalar cc = c.substitute(bindings_);
  if (mode_ == AlgebraMode::Classical) return PhaseFunction::constant(n_, cc);
  return WeylOperator::constant(n_, cc);
}

Observable AlgebraEnv::add(const Observable& a, const Observable& b) const {
  if (a.index() != b.index()) throw DimensionMismatch("mixed classical/quantum operands");
  if (auto* f = std::get_if<PhaseFunction>(&a)) return *f + std::get<PhaseFunction>(b);
  return std::get<WeylOperator>(a) + std::get<WeylOperator>(b);
}

Observable AlgebraEnv::sub(const Observable& a, const Observable& b) const {
  if (a.index() != b.index()) throw DimensionMismatch("mixed classical/quantum operands");
  if (auto* f = std::get_if<PhaseFunction>(&a)) return *f - std::get<PhaseFunction>(b);
  return std::get<WeylOperator>(a) - std::get<WeylOperator>(b);
}

Observable AlgebraEnv::neg(const Observable& a) const {
  if (auto* f = std::get_if<PhaseFunction>(&a)) return -*f;
  return -std::get<WeylOperator>(a);
}

Observable AlgebraEnv::mul(const Observable& a, const Observable& b) const {
  if (a.index() != b.index()) throw DimensionMismatch("mixed classical/quantum operands");
  if (auto* f = std::get_if<PhaseFunction>(&a)) return *f * std::get<PhaseFunction>(b);
  return op_mul(std::get<WeylOperator>(a), std::get<WeylOperator>(b), hbar_.elem);
}

Observable AlgebraEnv::scale(const Observable& a, const ParamScalar& c) const {
  if (auto* f = std::get_if<PhaseFunction>(&a)) return f->scaled(c);
  return std::get<WeylOperator>(a).scaled(c);
}

Observable AlgebraEnv::raw_bracket(const Observable& a, const Observable& b) const {
  if (a.index() != b.index()) throw DimensionMismatch("mixed classical/quantum operands");
  if (auto* f = std::get_if<PhaseFunction>(&a)) return poisson_bracket(*f, std::get<PhaseFunction>(b));
  return commutator(std::get<WeylOperator>(a), std::get<WeylOperator>(b), hbar_.elem);
}

Observable AlgebraEnv::bracket(const Observable& a, const Observable& b) const {
  Observable raw = raw_bracket(a, b);
  if (std::holds_alternative<PhaseFunction>(raw)) return raw;
  const auto& c = std::get<WeylOperator>(raw);
  if (hbar_.value) {
    GaussianRational inv = (GaussianRational::imaginary() * *hbar_.value).inverse();
    return c.scaled(ParamScalar(inv));
  }
  return c.divide_by_hbar(1).scaled(-ParamScalar::imaginary());
}

Observable AlgebraEnv::acomm(const Observable& a, const Observable& b) const {
  if (a.index() != b.index()) throw DimensionMismatch("mixed classical/quantum operands");
  if (auto* f = std::get_if<PhaseFunction>(&a))
    return (*f * std::get<PhaseFunction>(b)).scaled(ParamScalar(2));
  return anticommutator(std::get<WeylOperator>(a), std::get<WeylOperator>(b), hbar_.elem);
}

Observable AlgebraEnv::sym3(const Observable& a, const Observable& b, const Observable& c) const {
  if (a.index() != b.index() || b.index() != c.index())
    throw DimensionMismatch("mixed classical/quantum operands");
  if (auto* f = std::get_if<PhaseFunction>(&a))
    return (*f * std::get<PhaseFunction>(b) * std::get<PhaseFunction>(c)).scaled(ParamScalar(6));
  return symmetrize3(std::get<WeylOperator>(a), std::get<WeylOperator>(b),
                     std::get<WeylOperator>(c), hbar_.elem);
}

bool AlgebraEnv::is_zero(const Observable& o) const {
  if (auto* f = std::get_if<PhaseFunction>(&o)) return f->is_zero();
  return std::get<WeylOperator>(o).is_zero();
}

bool AlgebraEnv::equal(const Observable& a, const Observable& b) const {
  return is_zero(sub(a, b));
}

std::size_t AlgebraEnv::term_count(const Observable& o) const {
  if (auto* f = std::get_if<PhaseFunction>(&o)) return f->term_count();
  return std::get<WeylOperator>(o).term_count();
}

std::vector<std::string> AlgebraEnv::term_strings(const Observable& o, std::size_t limit) const {
  if (auto* f = std::get_if<PhaseFunction>(&o)) return f->term_strings(limit);
  return std::get<WeylOperator>(o).term_strings(limit);
}

}  // namespace racah

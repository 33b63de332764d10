#include "racah/realisation.hpp"

#include "racah/errors.hpp"

namespace racah {

namespace {

void check_range(const AlgebraEnv& env, SiteRange r) {
  if (r.lo < 1 || r.lo > r.hi || r.hi > env.n())
    throw BadRange("range " + std::to_string(r.lo) + ".." + std::to_string(r.hi) +
                   " invalid for n=" + std::to_string(env.n()));
}

PhaseFunction classical_generator(uint32_t n, SiteRange r, GenKind which) {
  PhaseFunction g(n);
  ParamScalar half = ParamScalar::rational(1, 2);
  for (uint32_t s = r.lo; s <= r.hi; ++s) {
    switch (which) {
      case GenKind::JPlus:
        g += PhaseFunction::momentum(n, s, 2).scaled(half);
        g += PhaseFunction::coordinate(n, s, -2).scaled(half * ParamScalar::a(s));
        break;
      case GenKind::JMinus:
        g += PhaseFunction::coordinate(n, s, 2).scaled(half);
        break;
      case GenKind::J3:
        g += (PhaseFunction::coordinate(n, s) * PhaseFunction::momentum(n, s)).scaled(half);
        break;
    }
  }
  return g;
}

WeylOperator quantum_generator(uint32_t n, SiteRange r, GenKind which) {
  WeylOperator g(n);
  ParamScalar half = ParamScalar::rational(1, 2);
  for (uint32_t s = r.lo; s <= r.hi; ++s) {
    switch (which) {
      case GenKind::JPlus:
        g += WeylOperator::momentum(n, s, 2).scaled(half);
        g += WeylOperator::position(n, s, -2).scaled(half * ParamScalar::a(s));
        break;
      case GenKind::JMinus:
        g += WeylOperator::position(n, s, 2).scaled(half);
        break;
      case GenKind::J3: {
        SiteMonomial m{std::vector<int32_t>(n, 0), std::vector<uint32_t>(n, 0)};
        m.x_exp[s - 1] = 1;
        m.p_exp[s - 1] = 1;
        g += WeylOperator::monomial(n, std::move(m), half);
        g += WeylOperator::constant(
            n, ParamScalar::rational(-1, 4) * ParamScalar::imaginary() * ParamScalar::hbar());
        break;
      }
    }
  }
  return g;
}

}  // namespace

Observable generator(const AlgebraEnv& env, SiteRange range, GenKind which) {
  check_range(env, range);
  if (env.mode() == AlgebraMode::Classical)
    return env.bind(classical_generator(env.n(), range, which));
  return env.bind(quantum_generator(env.n(), range, which));
}

Observable casimir_of_generators(const AlgebraEnv& env, const Observable& jp, const Observable& jm,
                                 const Observable& j3) {
  Observable j3sq = env.mul(j3, j3);
  Observable sym = env.scale(env.acomm(jp, jm), ParamScalar::rational(1, 2));
  return env.sub(j3sq, sym);
}

Observable left_casimir(const AlgebraEnv& env, uint32_t m) {
  SiteRange r{1, m};
  check_range(env, r);
  return casimir_of_generators(env, generator(env, r, GenKind::JPlus),
                               generator(env, r, GenKind::JMinus),
                               generator(env, r, GenKind::J3));
}

Observable right_casimir(const AlgebraEnv& env, uint32_t m) {
  if (m < 1 || m > env.n()) throw BadRange("right_casimir: m outside 1..n");
  SiteRange r{env.n() - m + 1, env.n()};
  return casimir_of_generators(env, generator(env, r, GenKind::JPlus),
                               generator(env, r, GenKind::JMinus),
                               generator(env, r, GenKind::J3));
}

HamiltonianSpec HamiltonianSpec::drawn(SplitMix64& rng) {
  HamiltonianSpec spec;
  long nterms = rng.range(1, 3);
  for (long t = 0; t < nterms; ++t) {
    Term term;
    do {
      term.deg_plus = static_cast<uint32_t>(rng.range(0, 2));
      term.deg_minus = static_cast<uint32_t>(rng.range(0, 2));
      term.deg_3 = static_cast<uint32_t>(rng.range(0, 2));
    } while (term.deg_plus + term.deg_minus + term.deg_3 == 0);
    term.coeff = ParamScalar(rng.nonzero_rational(6, 4));
    spec.terms.push_back(std::move(term));
  }
  return spec;
}

Observable sample_hamiltonian(const AlgebraEnv& env, const HamiltonianSpec& spec) {
  SiteRange full{1, env.n()};
  Observable jp = generator(env, full, GenKind::JPlus);
  Observable jm = generator(env, full, GenKind::JMinus);
  Observable j3 = generator(env, full, GenKind::J3);

  Observable h = env.zero();
  for (const auto& term : spec.terms) {
    Observable acc = env.constant(term.coeff);
    for (uint32_t d = 0; d < term.deg_plus; ++d) acc = env.mul(acc, jp);
    for (uint32_t d = 0; d < term.deg_minus; ++d) acc = env.mul(acc, jm);
    for (uint32_t d = 0; d < term.deg_3; ++d) acc = env.mul(acc, j3);
    h = env.add(h, acc);
  }
  return h;
}

}  // namespace racah

#pragma once

#include <cstdint>
#include <vector>

#include "racah/observable.hpp"
#include "racah/rng.hpp"

namespace racah {

enum class GenKind { JPlus, JMinus, J3 };

/// Inclusive 1-based site interval.
struct SiteRange {
  uint32_t lo;
  uint32_t hi;
};

/// The sl(2) generator realised over the given sites: the coproduct is
/// primitive, so the range realisation is the sum of one-site copies.
/// Classical: J+ = sum 1/2(p_j^2 + a_j/x_j^2), J- = sum 1/2 x_j^2,
/// J3 = sum 1/2 x_j p_j. Quantum J3 picks up the -i*hb/2 shift per site.
Observable generator(const AlgebraEnv& env, SiteRange range, GenKind which);

/// J3^2 - (1/2)(J+ J- + J- J+); the second term collapses to J+ J-
/// classically, so one expression serves both modes.
Observable casimir_of_generators(const AlgebraEnv& env, const Observable& jp, const Observable& jm,
                                 const Observable& j3);

/// Casimir over sites 1..m.
Observable left_casimir(const AlgebraEnv& env, uint32_t m);
/// Casimir over sites n-m+1..n.
Observable right_casimir(const AlgebraEnv& env, uint32_t m);

/// Polynomial in the three full-range generators: sum of
/// coeff * J+^deg_plus * J-^deg_minus * J3^deg_3 in that factor order.
struct HamiltonianSpec {
  struct Term {
    ParamScalar coeff;
    uint32_t deg_plus = 0;
    uint32_t deg_minus = 0;
    uint32_t deg_3 = 0;
  };
  std::vector<Term> terms;

  static HamiltonianSpec drawn(SplitMix64& rng);
};

Observable sample_hamiltonian(const AlgebraEnv& env, const HamiltonianSpec& spec);

}  // namespace racah

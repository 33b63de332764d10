#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "racah/errors.hpp"
#include "racah/realisation.hpp"

using namespace racah;

namespace {

/// br(J3,J+)-J+, br(J3,J-)+J-, br(J-,J+)-2J3 over the full range, combined.
Observable sl2_residual(const AlgebraEnv& env) {
  SiteRange all{1, env.n()};
  Observable jp = generator(env, all, GenKind::JPlus);
  Observable jm = generator(env, all, GenKind::JMinus);
  Observable j3 = generator(env, all, GenKind::J3);
  Observable r = env.sub(env.bracket(j3, jp), jp);
  r = env.add(r, env.add(env.bracket(j3, jm), jm));
  r = env.add(r, env.sub(env.bracket(jm, jp), env.scale(j3, ParamScalar(2))));
  return r;
}

}  // namespace

TEST_CASE("one-site generators have the expected shape") {
  AlgebraEnv env = AlgebraEnv::exact(AlgebraMode::Classical, 1);
  PhaseFunction jp = std::get<PhaseFunction>(generator(env, {1, 1}, GenKind::JPlus));
  PhaseFunction expected =
      PhaseFunction::momentum(1, 1, 2).scaled(ParamScalar::rational(1, 2)) +
      PhaseFunction::coordinate(1, 1, -2).scaled(ParamScalar::rational(1, 2) * ParamScalar::a(1));
  CHECK(jp == expected);

  PhaseFunction jm = std::get<PhaseFunction>(generator(env, {1, 1}, GenKind::JMinus));
  CHECK(jm == PhaseFunction::coordinate(1, 1, 2).scaled(ParamScalar::rational(1, 2)));

  PhaseFunction j3 = std::get<PhaseFunction>(generator(env, {1, 1}, GenKind::J3));
  CHECK(j3 == (PhaseFunction::coordinate(1, 1) * PhaseFunction::momentum(1, 1))
                  .scaled(ParamScalar::rational(1, 2)));
}

TEST_CASE("quantum one-site J3 carries the half-shift") {
  AlgebraEnv env = AlgebraEnv::exact(AlgebraMode::Quantum, 1);
  WeylOperator j3 = std::get<WeylOperator>(generator(env, {1, 1}, GenKind::J3));
  WeylOperator expected =
      op_mul(WeylOperator::position(1, 1), WeylOperator::momentum(1, 1))
          .scaled(ParamScalar::rational(1, 2)) -
      WeylOperator::constant(1, ParamScalar::rational(1, 4) * ParamScalar::imaginary() *
                                    ParamScalar::hbar());
  CHECK(j3 == expected);
}

TEST_CASE("realised generators close the algebra for every site count") {
  for (uint32_t n : {1u, 3u, 4u, 5u}) {
    for (AlgebraMode mode : {AlgebraMode::Classical, AlgebraMode::Quantum}) {
      AlgebraEnv env = AlgebraEnv::exact(mode, n);
      CHECK(env.is_zero(sl2_residual(env)));
    }
  }
}

TEST_CASE("closure survives numeric parameter draws") {
  for (AlgebraMode mode : {AlgebraMode::Classical, AlgebraMode::Quantum}) {
    AlgebraEnv env = AlgebraEnv::randomized(mode, 3, 99);
    CHECK(env.is_zero(sl2_residual(env)));
  }
}

TEST_CASE("one-site casimir values match the closed forms") {
  {
    AlgebraEnv env = AlgebraEnv::exact(AlgebraMode::Classical, 3);
    Observable c = left_casimir(env, 1);
    CHECK(env.equal(c, env.constant(ParamScalar::rational(-1, 4) * ParamScalar::a(1))));
    Observable r = right_casimir(env, 1);
    CHECK(env.equal(r, env.constant(ParamScalar::rational(-1, 4) * ParamScalar::a(3))));
  }
  {
    AlgebraEnv env = AlgebraEnv::exact(AlgebraMode::Quantum, 3);
    Observable c = left_casimir(env, 1);
    ParamScalar expected = ParamScalar::rational(3, 16) * ParamScalar::hbar(2) +
                           ParamScalar::rational(-1, 4) * ParamScalar::a(1);
    CHECK(env.equal(c, env.constant(expected)));
  }
}

TEST_CASE("quantum one-site casimir at pinned parameters") {
  AlgebraEnv env = AlgebraEnv::exact(AlgebraMode::Quantum, 1);
  ParamBindings b;
  b[0] = GaussianRational(1);
  b[1] = GaussianRational(4);
  WeylOperator c = std::get<WeylOperator>(left_casimir(env, 1)).substitute_params(b);
  // (3*1 - 4*4)/16 = -13/16
  CHECK(c == WeylOperator::constant(1, ParamScalar::rational(-13, 16)));
}

TEST_CASE("casimirs are central for the generators that build them") {
  for (AlgebraMode mode : {AlgebraMode::Classical, AlgebraMode::Quantum}) {
    AlgebraEnv env = AlgebraEnv::exact(mode, 3);
    for (uint32_t m = 1; m <= 3; ++m) {
      Observable c = left_casimir(env, m);
      for (GenKind g : {GenKind::JPlus, GenKind::JMinus, GenKind::J3})
        CHECK(env.is_zero(env.raw_bracket(c, generator(env, {1, m}, g))));
    }
  }
}

TEST_CASE("site ranges are validated") {
  AlgebraEnv env = AlgebraEnv::exact(AlgebraMode::Classical, 3);
  CHECK_THROWS_AS(generator(env, {0, 2}, GenKind::JPlus), BadRange);
  CHECK_THROWS_AS(generator(env, {2, 1}, GenKind::JPlus), BadRange);
  CHECK_THROWS_AS(generator(env, {1, 4}, GenKind::JPlus), BadRange);
  CHECK_THROWS_AS(left_casimir(env, 4), BadRange);
  CHECK_THROWS_AS(right_casimir(env, 0), BadRange);
}

TEST_CASE("randomized environments draw matching site parameters across modes") {
  AlgebraEnv c = AlgebraEnv::randomized(AlgebraMode::Classical, 4, 123);
  AlgebraEnv q = AlgebraEnv::randomized(AlgebraMode::Quantum, 4, 123);
  AlgebraEnv qk = AlgebraEnv::randomized(AlgebraMode::Quantum, 4, 123, true);
  for (uint32_t i = 1; i <= 4; ++i) {
    CHECK(c.bindings().at(i) == q.bindings().at(i));
    CHECK(c.bindings().at(i) == qk.bindings().at(i));
  }
  CHECK(q.bindings().count(0) == 1);
  CHECK(qk.bindings().count(0) == 0);
  CHECK(c.bindings().count(0) == 0);
  CHECK(q.hbar().value.has_value());
  CHECK_FALSE(qk.hbar().value.has_value());
}

TEST_CASE("hamiltonian specs draw deterministically and commute with casimirs") {
  SplitMix64 a(42), b(42);
  HamiltonianSpec sa = HamiltonianSpec::drawn(a);
  HamiltonianSpec sb = HamiltonianSpec::drawn(b);
  REQUIRE(sa.terms.size() == sb.terms.size());
  for (std::size_t i = 0; i < sa.terms.size(); ++i) {
    CHECK(sa.terms[i].coeff == sb.terms[i].coeff);
    CHECK(sa.terms[i].deg_plus == sb.terms[i].deg_plus);
    CHECK(sa.terms[i].deg_minus == sb.terms[i].deg_minus);
    CHECK(sa.terms[i].deg_3 == sb.terms[i].deg_3);
  }

  AlgebraEnv env = AlgebraEnv::exact(AlgebraMode::Classical, 3);
  Observable H = sample_hamiltonian(env, sa);
  for (uint32_t m = 1; m <= 3; ++m)
    CHECK(env.is_zero(env.raw_bracket(left_casimir(env, m), H)));
}

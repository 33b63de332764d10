#include <array>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "racah/errors.hpp"
#include "racah/verify.hpp"

namespace racah {

namespace {

std::string mode_prefix(const AlgebraEnv& env) {
  return env.mode() == AlgebraMode::Classical ? "classical." : "quantum.";
}

const ParamScalar kHalf = ParamScalar::rational(1, 2);
const ParamScalar kTwo = ParamScalar::rational(2, 1);

/// Flat classical form of the casimir over sites lo..hi: -1/4 of the sum of
/// squared angular terms, the cross ratios and the one-site parameters.
Observable flat_classical_casimir(const AlgebraEnv& env, uint32_t lo, uint32_t hi) {
  const uint32_t dim = env.n();
  PhaseFunction sum(dim);
  for (uint32_t i = lo; i <= hi; ++i) {
    sum += PhaseFunction::constant(dim, ParamScalar::a(i));
    for (uint32_t j = i + 1; j <= hi; ++j) {
      PhaseFunction lij = PhaseFunction::coordinate(dim, i) * PhaseFunction::momentum(dim, j) -
                          PhaseFunction::coordinate(dim, j) * PhaseFunction::momentum(dim, i);
      sum += lij * lij;
      sum += (PhaseFunction::coordinate(dim, j, 2) * PhaseFunction::coordinate(dim, i, -2))
                 .scaled(ParamScalar::a(i));
      sum += (PhaseFunction::coordinate(dim, i, 2) * PhaseFunction::coordinate(dim, j, -2))
                 .scaled(ParamScalar::a(j));
    }
  }
  return env.bind(Observable(sum.scaled(ParamScalar::rational(-1, 4))));
}

}  // namespace

std::vector<Check> racah_suite(RacahContext& ctx) {
  std::vector<Check> checks;
  const AlgebraEnv env = ctx.env();
  const std::string pre = mode_prefix(env);
  const uint32_t n = env.n();
  const bool classical = env.mode() == AlgebraMode::Classical;

  for (uint32_t i = 1; i <= n; ++i)
    for (uint32_t j = i + 1; j <= n; ++j)
      for (uint32_t k = j + 1; k <= n; ++k) {
        Observable pij = ctx.P(i, j), pjk = ctx.P(j, k), pik = ctx.P(i, k);
        Observable fijk = ctx.F_signed(i, j, k);
        checks.push_back({pre + "racah1.f-cyclic-a", {i, j, k}, [=] {
                            return env.sub(env.scale(env.bracket(pij, pjk), kHalf),
                                           env.scale(env.bracket(pjk, pik), kHalf));
                          }});
        checks.push_back({pre + "racah1.f-cyclic-b", {i, j, k}, [=] {
                            return env.sub(env.scale(env.bracket(pjk, pik), kHalf),
                                           env.scale(env.bracket(pik, pij), kHalf));
                          }});
        checks.push_back({pre + "racah1.f-antisym-a", {i, j, k}, [=] {
                            return env.add(env.scale(env.bracket(pij, pik), kHalf), fijk);
                          }});
        checks.push_back({pre + "racah1.f-antisym-b", {i, j, k}, [=] {
                            return env.add(env.scale(env.bracket(pik, pjk), kHalf), fijk);
                          }});
        if (classical) {
          Observable cj = ctx.one_index_C(j), ck = ctx.one_index_C(k);
          checks.push_back({pre + "racah2.pf", {i, j, k}, [=] {
                              Observable rhs = env.sub(env.mul(pik, pjk), env.mul(pjk, pij));
                              rhs = env.add(rhs, env.scale(env.mul(pik, cj), kTwo));
                              rhs = env.sub(rhs, env.scale(env.mul(pij, ck), kTwo));
                              return env.sub(env.bracket(pjk, fijk), rhs);
                            }});
        }
      }

  if (classical) {
    for (uint32_t i = 1; i <= n; ++i)
      for (uint32_t j = i + 1; j <= n; ++j)
        for (uint32_t k = j + 1; k <= n; ++k)
          for (uint32_t l = k + 1; l <= n; ++l) {
            Observable pij = ctx.P(i, j), pjk = ctx.P(j, k), pkl = ctx.P(k, l);
            Observable pik = ctx.P(i, k), pil = ctx.P(i, l), pjl = ctx.P(j, l);
            Observable fijk = ctx.F_signed(i, j, k), fjkl = ctx.F_signed(j, k, l);
            Observable fikl = ctx.F_signed(i, k, l);
            Observable cj = ctx.one_index_C(j);
            checks.push_back({pre + "racah3.pf", {i, j, k, l}, [=] {
                                Observable rhs = env.sub(env.mul(pik, pjl), env.mul(pil, pjk));
                                return env.sub(env.bracket(pkl, fijk), rhs);
                              }});
            checks.push_back({pre + "racah4.ff", {i, j, k, l}, [=] {
                                Observable rhs = env.mul(fjkl, pij);
                                rhs = env.sub(rhs, env.mul(fikl, env.add(pjk, env.scale(cj, kTwo))));
                                rhs = env.sub(rhs, env.mul(fijk, pjl));
                                return env.sub(env.bracket(fijk, fjkl), rhs);
                              }});
          }
    for (uint32_t i = 1; i <= n; ++i)
      for (uint32_t j = i + 1; j <= n; ++j)
        for (uint32_t k = j + 1; k <= n; ++k)
          for (uint32_t l = k + 1; l <= n; ++l)
            for (uint32_t m = l + 1; m <= n; ++m) {
              Observable pjk = ctx.P(j, k), pik = ctx.P(i, k);
              Observable fijk = ctx.F_signed(i, j, k), fklm = ctx.F_signed(k, l, m);
              Observable film = ctx.F_signed(i, l, m), fjlm = ctx.F_signed(j, l, m);
              checks.push_back({pre + "racah5.ff", {i, j, k, l, m}, [=] {
                                  Observable rhs =
                                      env.sub(env.mul(film, pjk), env.mul(pik, fjlm));
                                  return env.sub(env.bracket(fijk, fklm), rhs);
                                }});
            }
  }
  return checks;
}

std::vector<Check> substructure_checks(const AlgebraEnv& env_in, const Substructure& s) {
  const AlgebraEnv env = env_in;
  const std::string pre = mode_prefix(env);
  const uint32_t k = s.k;
  const Observable Lk = s.Lk, Rk = s.Rk, Mk = s.Mk, Fk = s.Fk;
  const Observable Lkm1 = s.Lkm1, Ck = s.Ck, Rkp1 = s.Rkp1, Ln = s.Ln;

  std::vector<Check> checks;
  checks.push_back({pre + "sub.f-agree-a", {k}, [=] {
                      return env.sub(env.scale(env.bracket(Lk, Rk), kHalf),
                                     env.scale(env.bracket(Rk, Mk), kHalf));
                    }});
  checks.push_back({pre + "sub.f-agree-b", {k}, [=] {
                      return env.sub(env.scale(env.bracket(Rk, Mk), kHalf),
                                     env.scale(env.bracket(Mk, Lk), kHalf));
                    }});
  checks.push_back({pre + "sub.rel-l", {k}, [=] {
                      Observable rhs = env.sub(env.mul(Rk, Lk), env.mul(Lk, Mk));
                      rhs = env.add(rhs, env.mul(env.sub(Ck, Lkm1), env.sub(Rkp1, Ln)));
                      return env.sub(env.bracket(Lk, Fk), rhs);
                    }});
  checks.push_back({pre + "sub.rel-r", {k}, [=] {
                      Observable rhs = env.sub(env.mul(Mk, Rk), env.mul(Rk, Lk));
                      rhs = env.add(rhs, env.mul(env.sub(Rkp1, Ck), env.sub(Lkm1, Ln)));
                      return env.sub(env.bracket(Rk, Fk), rhs);
                    }});
  checks.push_back({pre + "sub.rel-m", {k}, [=] {
                      Observable rhs = env.sub(env.mul(Lk, Mk), env.mul(Mk, Rk));
                      rhs = env.add(rhs, env.mul(env.sub(Lkm1, Rkp1), env.sub(Ck, Ln)));
                      return env.sub(env.bracket(Mk, Fk), rhs);
                    }});
  checks.push_back(
      {pre + "sub.dk-r", {k}, [=] { return env.bracket(Rk, env.add(Lk, Mk)); }});
  checks.push_back(
      {pre + "sub.dk-l", {k}, [=] { return env.bracket(Lk, env.add(Mk, Rk)); }});
  checks.push_back(
      {pre + "sub.dk-m", {k}, [=] { return env.bracket(Mk, env.add(Lk, Rk)); }});
  checks.push_back({pre + "sub.sum-zero", {k}, [=] {
                      return env.bracket(env.add(env.add(Lk, Rk), Mk), Fk);
                    }});
  checks.push_back({pre + "sub.quad-l", {k}, [=] {
                      Observable sum4 = env.add(env.add(Ln, Lkm1), env.add(Ck, Rkp1));
                      Observable rhs = env.add(env.mul(Lk, Lk), env.acomm(Rk, Lk));
                      rhs = env.sub(rhs, env.mul(sum4, Lk));
                      rhs = env.add(rhs, env.mul(env.sub(Ck, Lkm1), env.sub(Rkp1, Ln)));
                      return env.sub(env.bracket(Lk, Fk), rhs);
                    }});
  checks.push_back({pre + "sub.quad-r", {k}, [=] {
                      Observable sum4 = env.add(env.add(Ln, Lkm1), env.add(Ck, Rkp1));
                      Observable rhs = env.neg(env.add(env.mul(Rk, Rk), env.acomm(Lk, Rk)));
                      rhs = env.add(rhs, env.mul(sum4, Rk));
                      rhs = env.add(rhs, env.mul(env.sub(Rkp1, Ck), env.sub(Lkm1, Ln)));
                      return env.sub(env.bracket(Rk, Fk), rhs);
                    }});
  checks.push_back({pre + "sub.linear-m", {k}, [=] {
                      Observable rhs = env.sub(env.add(env.add(Lk, Rk), Mk),
                                               env.add(env.add(Lkm1, Ck), Rkp1));
                      return env.sub(Ln, rhs);
                    }});
  return checks;
}

std::vector<Check> substructure_suite(RacahContext& ctx) {
  std::vector<Check> checks;
  const AlgebraEnv env = ctx.env();
  const std::string pre = mode_prefix(env);
  const uint32_t n = env.n();
  for (uint32_t k = 2; k + 1 <= n; ++k) {
    Substructure s = ctx.substructure(k);
    std::vector<Check> sc = substructure_checks(env, s);
    checks.insert(checks.end(), std::make_move_iterator(sc.begin()),
                  std::make_move_iterator(sc.end()));
  }
  for (uint32_t i = 1; i + 1 <= n; ++i)
    for (uint32_t j = 1; j <= i; ++j) {
      Observable lj = ctx.L(j), ri = ctx.R(i + 1);
      checks.push_back(
          {pre + "sub.cross", {j, i + 1}, [=] { return env.raw_bracket(lj, ri); }});
    }
  return checks;
}

std::vector<Check> casimir_suite(RacahContext& ctx) {
  std::vector<Check> checks;
  const AlgebraEnv env = ctx.env();
  const std::string pre = mode_prefix(env);
  const uint32_t n = env.n();

  {
    Observable c1 = ctx.one_index_C(1), cn = ctx.one_index_C(n);
    checks.push_back(
        {pre + "cas.left-m1", {}, [=] { return env.sub(left_casimir(env, 1), c1); }});
    checks.push_back(
        {pre + "cas.right-m1", {}, [=] { return env.sub(right_casimir(env, 1), cn); }});
  }

  checks.push_back({pre + "cas.coassoc", {}, [env, n] {
                      const GenKind kinds[3] = {GenKind::JPlus, GenKind::JMinus, GenKind::J3};
                      std::vector<Observable> ja, jb;
                      Observable res = env.zero();
                      for (int t = 0; t < 3; ++t) {
                        ja.push_back(env.add(generator(env, {1, n - 1}, kinds[t]),
                                             generator(env, {n, n}, kinds[t])));
                        jb.push_back(env.add(generator(env, {1, 1}, kinds[t]),
                                             generator(env, {2, n}, kinds[t])));
                        res = env.add(res, env.sub(ja[t], jb[t]));
                      }
                      res = env.add(res,
                                    env.sub(casimir_of_generators(env, ja[0], ja[1], ja[2]),
                                            casimir_of_generators(env, jb[0], jb[1], jb[2])));
                      return res;
                    }});

  for (uint32_t m = 1; m <= n; ++m) {
    Observable lc = left_casimir(env, m);
    Observable rc = right_casimir(env, m);
    Observable ls = ctx.subset_casimir(IndexSubset::range(1, m));
    Observable rs = ctx.subset_casimir(IndexSubset::range(n - m + 1, n));
    checks.push_back({pre + "cas.subset-left", {m}, [=] { return env.sub(ls, lc); }});
    checks.push_back({pre + "cas.subset-right", {m}, [=] { return env.sub(rs, rc); }});

    Observable lp = env.zero(), rp = env.zero();
    for (uint32_t i = 1; i <= m; ++i) {
      lp = env.add(lp, ctx.one_index_C(i));
      for (uint32_t j = i + 1; j <= m; ++j) lp = env.add(lp, ctx.P(i, j));
    }
    for (uint32_t i = n - m + 1; i <= n; ++i) {
      rp = env.add(rp, ctx.one_index_C(i));
      for (uint32_t j = i + 1; j <= n; ++j) rp = env.add(rp, ctx.P(i, j));
    }
    checks.push_back({pre + "cas.pform-left", {m}, [=] { return env.sub(lp, lc); }});
    checks.push_back({pre + "cas.pform-right", {m}, [=] { return env.sub(rp, rc); }});

    if (env.mode() == AlgebraMode::Classical) {
      Observable le = flat_classical_casimir(env, 1, m);
      Observable re = flat_classical_casimir(env, n - m + 1, n);
      checks.push_back({pre + "cas.explicit-left", {m}, [=] { return env.sub(lc, le); }});
      checks.push_back({pre + "cas.explicit-right", {m}, [=] { return env.sub(rc, re); }});
    }
  }

  for (uint32_t k = 2; k + 1 <= n; ++k) {
    Substructure s = ctx.substructure(k);
    Observable K = ctx.substructure_casimir(s);
    Observable Lk = s.Lk, Rk = s.Rk, Mk = s.Mk, Fk = s.Fk;
    checks.push_back({pre + "cas.central-l", {k}, [=] { return env.raw_bracket(K, Lk); }});
    checks.push_back({pre + "cas.central-r", {k}, [=] { return env.raw_bracket(K, Rk); }});
    checks.push_back({pre + "cas.central-m", {k}, [=] { return env.raw_bracket(K, Mk); }});
    checks.push_back({pre + "cas.central-f", {k}, [=] { return env.raw_bracket(K, Fk); }});
  }
  return checks;
}

std::vector<Check> involution_suite(RacahContext& ctx, const std::vector<HamiltonianSpec>& specs) {
  std::vector<Check> checks;
  const AlgebraEnv env = ctx.env();
  const std::string pre = mode_prefix(env);
  const uint32_t n = env.n();

  std::vector<Observable> lefts, rights;
  for (uint32_t m = 1; m <= n; ++m) {
    lefts.push_back(left_casimir(env, m));
    rights.push_back(right_casimir(env, m));
  }
  for (uint32_t m = 1; m <= n; ++m)
    for (uint32_t mp = m + 1; mp <= n; ++mp) {
      Observable la = lefts[m - 1], lb = lefts[mp - 1];
      Observable ra = rights[m - 1], rb = rights[mp - 1];
      checks.push_back({pre + "inv.left", {m, mp}, [=] { return env.raw_bracket(la, lb); }});
      checks.push_back({pre + "inv.right", {m, mp}, [=] { return env.raw_bracket(ra, rb); }});
    }
  for (uint32_t si = 0; si < specs.size(); ++si) {
    Observable H = sample_hamiltonian(env, specs[si]);
    for (uint32_t m = 1; m <= n; ++m) {
      Observable la = lefts[m - 1], ra = rights[m - 1];
      checks.push_back(
          {pre + "inv.left-ham", {m, si + 1}, [=] { return env.raw_bracket(la, H); }});
      checks.push_back(
          {pre + "inv.right-ham", {m, si + 1}, [=] { return env.raw_bracket(ra, H); }});
    }
  }
  return checks;
}

std::vector<Check> limit_suite(RacahContext& quantum_ctx, RacahContext& classical_ctx) {
  const AlgebraEnv qenv = quantum_ctx.env();
  const AlgebraEnv cenv = classical_ctx.env();
  if (qenv.mode() != AlgebraMode::Quantum || cenv.mode() != AlgebraMode::Classical)
    throw BadRange("limit suite wants a quantum and a classical context");
  if (qenv.n() != cenv.n()) throw DimensionMismatch("limit suite needs matching site counts");
  const uint32_t n = qenv.n();

  std::vector<Check> checks;
  auto qop = [](const Observable& o) { return std::get<WeylOperator>(o); };
  auto cfun = [](const Observable& o) { return std::get<PhaseFunction>(o); };
  auto pair_check = [&checks](std::string name, std::vector<uint32_t> idx, WeylOperator qa,
                              WeylOperator qb, PhaseFunction ca, PhaseFunction cb) {
    checks.push_back({std::move(name), std::move(idx), [=]() -> Observable {
                        return Observable(semiclassical_bracket(qa, qb) -
                                          poisson_bracket(ca, cb));
                      }});
  };
  auto limit_check = [&checks](std::string name, std::vector<uint32_t> idx, WeylOperator q,
                               PhaseFunction c) {
    checks.push_back({std::move(name), std::move(idx),
                      [=]() -> Observable { return Observable(q.semiclassical_limit() - c); }});
  };

  const GenKind kinds[3] = {GenKind::JPlus, GenKind::JMinus, GenKind::J3};
  std::vector<WeylOperator> qg;
  std::vector<PhaseFunction> cg;
  for (int t = 0; t < 3; ++t) {
    qg.push_back(qop(generator(qenv, {1, n}, kinds[t])));
    cg.push_back(cfun(generator(cenv, {1, n}, kinds[t])));
    limit_check("limit.gen-limit", {uint32_t(t + 1)}, qg[t], cg[t]);
  }
  for (uint32_t s1 = 0; s1 < 3; ++s1)
    for (uint32_t s2 = s1 + 1; s2 < 3; ++s2)
      pair_check("limit.sl2", {s1 + 1, s2 + 1}, qg[s1], qg[s2], cg[s1], cg[s2]);

  for (uint32_t i = 1; i <= n; ++i)
    for (uint32_t j = i + 1; j <= n; ++j)
      limit_check("limit.cij", {i, j}, qop(quantum_ctx.two_index_C(i, j)),
                  cfun(classical_ctx.two_index_C(i, j)));

  for (uint32_t a = 1; a + 1 <= n; ++a)
    for (uint32_t b = 2; b <= n; ++b)
      pair_check("limit.cas-pair", {a, b}, qop(quantum_ctx.L(a)), qop(quantum_ctx.R(b)),
                 cfun(classical_ctx.L(a)), cfun(classical_ctx.R(b)));

  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  for (uint32_t i = 1; i <= n; ++i)
    for (uint32_t j = i + 1; j <= n; ++j) pairs.push_back({i, j});
  for (std::size_t u = 0; u < pairs.size(); ++u)
    for (std::size_t v = u + 1; v < pairs.size(); ++v)
      pair_check("limit.p-pair", {pairs[u].first, pairs[u].second, pairs[v].first, pairs[v].second},
                 qop(quantum_ctx.P(pairs[u].first, pairs[u].second)),
                 qop(quantum_ctx.P(pairs[v].first, pairs[v].second)),
                 cfun(classical_ctx.P(pairs[u].first, pairs[u].second)),
                 cfun(classical_ctx.P(pairs[v].first, pairs[v].second)));

  std::vector<std::array<uint32_t, 3>> triples;
  for (uint32_t i = 1; i <= n; ++i)
    for (uint32_t j = i + 1; j <= n; ++j)
      for (uint32_t k = j + 1; k <= n; ++k) triples.push_back({i, j, k});

  for (const auto& t : triples) {
    limit_check("limit.f-def", {t[0], t[1], t[2]}, qop(quantum_ctx.F_signed(t[0], t[1], t[2])),
                cfun(classical_ctx.F_signed(t[0], t[1], t[2])));
    for (const auto& pr : pairs)
      pair_check("limit.pf-pair", {pr.first, pr.second, t[0], t[1], t[2]},
                 qop(quantum_ctx.P(pr.first, pr.second)), qop(quantum_ctx.F_signed(t[0], t[1], t[2])),
                 cfun(classical_ctx.P(pr.first, pr.second)),
                 cfun(classical_ctx.F_signed(t[0], t[1], t[2])));
  }
  for (std::size_t u = 0; u < triples.size(); ++u)
    for (std::size_t v = u + 1; v < triples.size(); ++v)
      pair_check("limit.ff-pair",
                 {triples[u][0], triples[u][1], triples[u][2], triples[v][0], triples[v][1],
                  triples[v][2]},
                 qop(quantum_ctx.F_signed(triples[u][0], triples[u][1], triples[u][2])),
                 qop(quantum_ctx.F_signed(triples[v][0], triples[v][1], triples[v][2])),
                 cfun(classical_ctx.F_signed(triples[u][0], triples[u][1], triples[u][2])),
                 cfun(classical_ctx.F_signed(triples[v][0], triples[v][1], triples[v][2])));

  for (uint32_t k = 2; k + 1 <= n; ++k) {
    Substructure qs = quantum_ctx.substructure(k);
    Substructure cs = classical_ctx.substructure(k);
    std::vector<WeylOperator> q8 = {qop(qs.Lkm1), qop(qs.Ck), qop(qs.Rkp1), qop(qs.Lk),
                                    qop(qs.Rk),   qop(qs.Mk), qop(qs.Ln),   qop(qs.Fk)};
    std::vector<PhaseFunction> c8 = {cfun(cs.Lkm1), cfun(cs.Ck), cfun(cs.Rkp1), cfun(cs.Lk),
                                     cfun(cs.Rk),   cfun(cs.Mk), cfun(cs.Ln),   cfun(cs.Fk)};
    for (uint32_t g1 = 1; g1 <= 8; ++g1)
      for (uint32_t g2 = g1 + 1; g2 <= 8; ++g2)
        pair_check("limit.sub-pair", {k, g1, g2}, q8[g1 - 1], q8[g2 - 1], c8[g1 - 1], c8[g2 - 1]);
    limit_check("limit.khat", {k}, qop(quantum_ctx.substructure_casimir(qs)),
                cfun(classical_ctx.substructure_casimir(cs)));
  }
  return checks;
}

}  // namespace racah

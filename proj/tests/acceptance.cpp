// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Budgets are wall-clock; relation batches run on a small pool.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "racah/chain_graph.hpp"
#include "racah/verify.hpp"

using namespace racah;

namespace {

constexpr unsigned kThreads = 4;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

bool all_pass(const std::vector<RelationReport>& reports) {
  for (const auto& r : reports)
    if (r.status != CheckStatus::Pass) return false;
  return !reports.empty();
}

std::size_t count_failures(const std::vector<RelationReport>& reports) {
  std::size_t c = 0;
  for (const auto& r : reports)
    if (r.status != CheckStatus::Pass) ++c;
  return c;
}

std::size_t count_named(const std::vector<RelationReport>& reports, const std::string& piece) {
  std::size_t c = 0;
  for (const auto& r : reports)
    if (r.name.find(piece) != std::string::npos) ++c;
  return c;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

Observable closure_residual(const AlgebraEnv& env) {
  SiteRange all{1, env.n()};
  Observable jp = generator(env, all, GenKind::JPlus);
  Observable jm = generator(env, all, GenKind::JMinus);
  Observable j3 = generator(env, all, GenKind::J3);
  Observable r = env.sub(env.bracket(j3, jp), jp);
  r = env.add(r, env.add(env.bracket(j3, jm), jm));
  r = env.add(r, env.sub(env.bracket(jm, jp), env.scale(j3, ParamScalar(2))));
  return r;
}

Outcome criterion1() {
  auto start = Clock::now();
  std::size_t checked = 0;
  for (uint32_t n : {1u, 3u, 4u, 5u}) {
    for (AlgebraMode mode : {AlgebraMode::Classical, AlgebraMode::Quantum}) {
      AlgebraEnv env = AlgebraEnv::exact(mode, n);
      if (!env.is_zero(closure_residual(env)))
        return {false, "nonzero closure residual at n=" + std::to_string(n)};
      ++checked;
    }
  }
  double t = seconds_since(start);
  if (t >= 1.0) return {false, "closure took " + fmt(t) + "s, budget 1s"};
  return {true, std::to_string(checked) + " closures in " + fmt(t) + "s"};
}

Outcome criterion2() {
  for (uint32_t n : {3u, 4u, 5u}) {
    {
      AlgebraEnv env = AlgebraEnv::exact(AlgebraMode::Classical, n);
      ParamScalar left = ParamScalar::rational(-1, 4) * ParamScalar::a(1);
      ParamScalar right = ParamScalar::rational(-1, 4) * ParamScalar::a(n);
      if (!env.equal(left_casimir(env, 1), env.constant(left)))
        return {false, "classical one-site chain head is off at n=" + std::to_string(n)};
      if (!env.equal(right_casimir(env, 1), env.constant(right)))
        return {false, "classical one-site chain tail is off at n=" + std::to_string(n)};
      if (!env.equal(left_casimir(env, n), right_casimir(env, n)))
        return {false, "classical chain tops disagree at n=" + std::to_string(n)};
    }
    {
      AlgebraEnv env = AlgebraEnv::exact(AlgebraMode::Quantum, n);
      ParamScalar hb2 = ParamScalar::rational(3, 16) * ParamScalar::hbar(2);
      ParamScalar left = hb2 + ParamScalar::rational(-1, 4) * ParamScalar::a(1);
      ParamScalar right = hb2 + ParamScalar::rational(-1, 4) * ParamScalar::a(n);
      if (!env.equal(left_casimir(env, 1), env.constant(left)))
        return {false, "quantum one-site chain head is off at n=" + std::to_string(n)};
      if (!env.equal(right_casimir(env, 1), env.constant(right)))
        return {false, "quantum one-site chain tail is off at n=" + std::to_string(n)};
      if (!env.equal(left_casimir(env, n), right_casimir(env, n)))
        return {false, "quantum chain tops disagree at n=" + std::to_string(n)};
    }
  }
  return {true, "chain heads, tails and tops agree exactly for n in {3,4,5}"};
}

Outcome criterion3() {
  auto start = Clock::now();
  std::size_t total = 0;
  for (AlgebraMode mode : {AlgebraMode::Classical, AlgebraMode::Quantum}) {
    RacahContext ctx(AlgebraEnv::exact(mode, 4));
    auto specs = draw_hamiltonian_specs(kDefaultHamiltonianSeed);
    auto reports = run_checks(involution_suite(ctx, specs), kThreads);
    if (!all_pass(reports))
      return {false, std::to_string(count_failures(reports)) + " involution checks failed"};
    total += reports.size();
  }
  double t = seconds_since(start);
  if (t >= 30.0) return {false, "involution took " + fmt(t) + "s, budget 30s"};
  return {true, std::to_string(total) + " checks in " + fmt(t) + "s"};
}

Outcome criterion4() {
  auto exact_start = Clock::now();
  std::size_t exact_total = 0;
  for (uint32_t n : {4u, 5u}) {
    for (AlgebraMode mode : {AlgebraMode::Classical, AlgebraMode::Quantum}) {
      RacahContext ctx(AlgebraEnv::exact(mode, n));
      auto reports = run_checks(racah_suite(ctx), kThreads);
      if (!all_pass(reports))
        return {false, std::to_string(count_failures(reports)) + " relation checks failed at n=" +
                           std::to_string(n)};
      if (mode == AlgebraMode::Classical) {
        std::size_t quintic = count_named(reports, "racah5");
        if (n == 4 && quintic != 0)
          return {false, "unexpected five-index relations at n=4"};
        if (n == 5 && quintic == 0)
          return {false, "five-index relations missing at n=5"};
      }
      exact_total += reports.size();
    }
  }
  double exact_t = seconds_since(exact_start);
  if (exact_t >= 600.0) return {false, "exact run took " + fmt(exact_t) + "s, budget 600s"};

  auto random_start = Clock::now();
  for (uint32_t n : {4u, 5u}) {
    RacahContext ctx(AlgebraEnv::randomized(AlgebraMode::Classical, n, 7));
    auto reports = run_checks(racah_suite(ctx), kThreads);
    if (!all_pass(reports))
      return {false, "randomized relation checks failed at n=" + std::to_string(n)};
  }
  double random_t = seconds_since(random_start);
  if (random_t >= 30.0) return {false, "randomized run took " + fmt(random_t) + "s, budget 30s"};
  return {true, std::to_string(exact_total) + " exact checks in " + fmt(exact_t) +
                    "s, randomized in " + fmt(random_t) + "s"};
}

Outcome criterion5() {
  std::size_t total = 0;
  auto run_for = [&](AlgebraMode mode, uint32_t n, Outcome& bad) {
    RacahContext ctx(AlgebraEnv::exact(mode, n));
    auto reports = run_checks(substructure_suite(ctx), kThreads);
    if (!all_pass(reports)) {
      bad = {false, std::to_string(count_failures(reports)) + " substructure checks failed at n=" +
                        std::to_string(n)};
      return false;
    }
    if (count_named(reports, "sub.quad") == 0 || count_named(reports, "sub.dk") == 0 ||
        count_named(reports, "sub.sum-zero") == 0) {
      bad = {false, "expected substructure relation groups are absent"};
      return false;
    }
    total += reports.size();
    return true;
  };
  Outcome bad;
  for (uint32_t n : {3u, 4u, 5u})
    if (!run_for(AlgebraMode::Classical, n, bad)) return bad;
  for (uint32_t n : {3u, 4u})
    if (!run_for(AlgebraMode::Quantum, n, bad)) return bad;
  return {true, std::to_string(total) + " checks across classical n in {3,4,5}, quantum n in {3,4}"};
}

Outcome criterion6() {
  std::vector<Check> checks;
  for (AlgebraMode mode : {AlgebraMode::Classical, AlgebraMode::Quantum}) {
    for (uint32_t n : {3u, 4u}) {
      RacahContext ctx(AlgebraEnv::exact(mode, n));
      const AlgebraEnv env = ctx.env();
      for (uint32_t k = 2; k + 1 <= n; ++k) {
        Substructure s = ctx.substructure(k);
        Observable K = ctx.substructure_casimir(s);
        std::string tag = (mode == AlgebraMode::Classical ? "classical" : "quantum");
        auto add = [&](const char* gen, Observable g) {
          checks.push_back({tag + ".central-" + gen, {n, k},
                            [env, K, g] { return env.raw_bracket(K, g); }});
        };
        add("first", s.Lk);
        add("second", s.Rk);
        add("third", s.Mk);
        add("fourth", s.Fk);
      }
    }
  }
  auto reports = run_checks(checks, kThreads);
  if (!all_pass(reports))
    return {false, std::to_string(count_failures(reports)) + " centrality checks failed"};
  return {true, std::to_string(reports.size()) + " generator brackets vanish"};
}

Outcome criterion7() {
  std::size_t total = 0;
  for (uint32_t n : {3u, 4u}) {
    RacahContext qctx(AlgebraEnv::exact(AlgebraMode::Quantum, n));
    RacahContext cctx(AlgebraEnv::exact(AlgebraMode::Classical, n));
    auto reports = verify_classical_limit(qctx, cctx, kThreads);
    if (!all_pass(reports))
      return {false, std::to_string(count_failures(reports)) + " limit checks failed at n=" +
                         std::to_string(n)};
    if (count_named(reports, "limit.khat") == 0)
      return {false, "substructure casimir limit checks are absent"};
    total += reports.size();
  }
  return {true, std::to_string(total) + " hb->0 comparisons for n in {3,4}"};
}

Outcome criterion8() {
  {
    RacahContext ctx(AlgebraEnv::randomized(AlgebraMode::Classical, 3, 31));
    const AlgebraEnv& env = ctx.env();
    ctx.inject_P(1, 2, env.add(ctx.P(1, 2), env.constant(ParamScalar(1))));
    auto reports = run_checks(racah_suite(ctx), kThreads);
    if (count_failures(reports) == 0) return {false, "shifted pair element went undetected"};
  }
  {
    RacahContext ctx(AlgebraEnv::randomized(AlgebraMode::Classical, 4, 32));
    const AlgebraEnv& env = ctx.env();
    Substructure s = ctx.substructure(2);
    s.Mk = env.add(s.Mk, env.constant(ParamScalar(1)));
    auto reports = run_checks(substructure_checks(env, s), kThreads);
    if (count_failures(reports) == 0) return {false, "shifted middle generator went undetected"};
  }
  {
    RacahContext ctx(AlgebraEnv::randomized(AlgebraMode::Quantum, 3, 33));
    const AlgebraEnv& env = ctx.env();
    ParamScalar quarter_hb2 = ParamScalar::rational(1, 4) * ParamScalar::hbar(2);
    ctx.inject_two_index_C(1, 2, env.sub(ctx.two_index_C(1, 2), env.constant(quarter_hb2)));
    auto reports = run_checks(casimir_suite(ctx), kThreads);
    if (count_failures(reports) == 0) return {false, "dropped hb^2 shift went undetected"};
  }
  {
    RacahContext ctx(AlgebraEnv::randomized(AlgebraMode::Quantum, 3, 34));
    const AlgebraEnv& e = ctx.env();
    Substructure s = ctx.substructure(2);
    Observable rc = e.sub(s.Rkp1, s.Ck);
    Observable lm = e.sub(s.Lkm1, s.Ln);
    Observable cl = e.sub(s.Ck, s.Lkm1);
    Observable rl = e.sub(s.Rkp1, s.Ln);
    Observable truncated = e.mul(s.Fk, s.Fk);
    truncated = e.add(truncated, e.scale(e.sym3(s.Lk, s.Mk, s.Rk), ParamScalar::rational(1, 6)));
    truncated = e.add(truncated, e.mul(e.mul(rc, lm), s.Lk));
    truncated = e.sub(truncated, e.mul(e.mul(cl, rl), s.Rk));
    if (e.is_zero(e.raw_bracket(truncated, s.Mk)))
      return {false, "dropped correction block went undetected"};
    if (!e.is_zero(e.raw_bracket(ctx.substructure_casimir(s), s.Mk)))
      return {false, "control baseline is broken"};
  }
  return {true, "all four tampered constructions produce failing checks"};
}

Outcome criterion9() {
  const int kRounds = 100;

  auto draw_phase = [](SplitMix64& rng, uint32_t dim) {
    PhaseFunction f(dim);
    uint32_t terms = uint32_t(rng.range(1, 3));
    for (uint32_t t = 0; t < terms; ++t) {
      SiteMonomial m{std::vector<int32_t>(dim, 0), std::vector<uint32_t>(dim, 0)};
      for (uint32_t s = 0; s < dim; ++s) {
        m.x_exp[s] = int32_t(rng.range(-2, 2));
        m.p_exp[s] = uint32_t(rng.range(0, 2));
      }
      f += PhaseFunction::monomial(dim, std::move(m), ParamScalar(rng.nonzero_rational(6, 4)));
    }
    return f;
  };
  auto draw_weyl = [](SplitMix64& rng, uint32_t dim) {
    WeylOperator w(dim);
    uint32_t terms = uint32_t(rng.range(1, 2));
    for (uint32_t t = 0; t < terms; ++t) {
      SiteMonomial m{std::vector<int32_t>(dim, 0), std::vector<uint32_t>(dim, 0)};
      for (uint32_t s = 0; s < dim; ++s) {
        m.x_exp[s] = int32_t(rng.range(-2, 2));
        m.p_exp[s] = uint32_t(rng.range(0, 2));
      }
      w += WeylOperator::monomial(dim, std::move(m), ParamScalar(rng.nonzero_rational(6, 4)));
    }
    return w;
  };

  {
    SplitMix64 rng(0xacc0101u);
    for (int i = 0; i < kRounds; ++i) {
      PhaseFunction f = draw_phase(rng, 2), g = draw_phase(rng, 2);
      if (!(poisson_bracket(f, g) + poisson_bracket(g, f)).is_zero() ||
          !poisson_bracket(f, f).is_zero())
        return {false, "antisymmetry failed on round " + std::to_string(i)};
    }
  }
  {
    SplitMix64 rng(0xacc0102u);
    for (int i = 0; i < kRounds; ++i) {
      PhaseFunction f = draw_phase(rng, 2), g = draw_phase(rng, 2), h = draw_phase(rng, 2);
      PhaseFunction lhs = poisson_bracket(f, g * h);
      PhaseFunction rhs = poisson_bracket(f, g) * h + g * poisson_bracket(f, h);
      if (!(lhs - rhs).is_zero()) return {false, "derivation rule failed on round " + std::to_string(i)};
    }
  }
  {
    SplitMix64 rng(0xacc0103u);
    for (int i = 0; i < kRounds; ++i) {
      PhaseFunction f = draw_phase(rng, 2), g = draw_phase(rng, 2), h = draw_phase(rng, 2);
      PhaseFunction cyc = poisson_bracket(f, poisson_bracket(g, h)) +
                          poisson_bracket(g, poisson_bracket(h, f)) +
                          poisson_bracket(h, poisson_bracket(f, g));
      if (!cyc.is_zero()) return {false, "jacobi failed on round " + std::to_string(i)};
    }
  }
  {
    SplitMix64 rng(0xacc0104u);
    for (int i = 0; i < kRounds; ++i) {
      WeylOperator a = draw_weyl(rng, 2), b = draw_weyl(rng, 2), c = draw_weyl(rng, 2);
      if (op_mul(op_mul(a, b), c) != op_mul(a, op_mul(b, c)))
        return {false, "associativity failed on round " + std::to_string(i)};
    }
  }
  {
    SplitMix64 rng(0xacc0105u);
    for (int i = 0; i < kRounds; ++i) {
      uint32_t b = uint32_t(rng.range(0, 3));
      int32_t k = int32_t(rng.range(-3, 3));
      if (k == 0) k = 1;
      WeylOperator direct =
          op_mul(WeylOperator::momentum(1, 1, b), WeylOperator::position(1, 1, k));
      WeylOperator stepwise = WeylOperator::position(1, 1, k);
      for (uint32_t step = 0; step < b; ++step)
        stepwise = op_mul(WeylOperator::momentum(1, 1), stepwise);
      if (direct != stepwise)
        return {false, "reordering confluence failed on round " + std::to_string(i)};
    }
  }
  return {true, "5 properties x 100 randomized rounds"};
}

Outcome criterion10() {
#ifndef RACAH_CLI_PATH
  return {false, "cli path not wired into the build"};
#else
  const std::string cli = RACAH_CLI_PATH;
  const std::string config = " verify --n 3 --mode both --suite all --params random --seed 5";
  struct Run {
    std::string file;
    std::string extra;
  };
  const std::vector<Run> runs = {{"acceptance_rep_a.json", " --threads 1"},
                                 {"acceptance_rep_b.json", " --threads 1"},
                                 {"acceptance_rep_c.json", " --threads 7"}};
  std::vector<std::string> contents;
  for (const Run& r : runs) {
    std::string cmd = cli + config + r.extra + " --json " + r.file + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    if (rc != 0) return {false, "cli run exited with status " + std::to_string(rc)};
    std::ifstream in(r.file, std::ios::binary);
    if (!in) return {false, "missing report " + r.file};
    std::ostringstream buf;
    buf << in.rdbuf();
    contents.push_back(buf.str());
    if (contents.back().empty()) return {false, "empty report " + r.file};
  }
  if (contents[0] != contents[1]) return {false, "repeat run changed the report bytes"};
  if (contents[0] != contents[2]) return {false, "thread count changed the report bytes"};
  return {true, std::to_string(contents[0].size()) + " byte reports identical across runs and thread counts"};
#endif
}

}  // namespace

int main() {
  struct Entry {
    const char* label;
    Outcome (*fn)();
  };
  const std::vector<Entry> entries = {
      {"1. generator closure, both modes, n in {1,3,4,5}, under 1s", criterion1},
      {"2. one-site casimir values and chain-top agreement", criterion2},
      {"3. casimir involution incl. model hamiltonians, n=4, under 30s", criterion3},
      {"4. relation families at n in {4,5}, exact and randomized", criterion4},
      {"5. substructure relations for every admissible (n,k)", criterion5},
      {"6. substructure casimir centrality, n in {3,4}, both modes", criterion6},
      {"7. hb->0 limits reproduce the classical side, n in {3,4}", criterion7},
      {"8. negative controls each trip at least one check", criterion8},
      {"9. bracket and product axioms on randomized instances", criterion9},
      {"10. byte-identical reports across runs and thread counts", criterion10},
  };
  int failures = 0;
  for (const Entry& e : entries) {
    Outcome o = e.fn();
    std::printf("%s  %s  [%s]\n", o.pass ? "PASS" : "FAIL", e.label, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}

#include "racah/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>
#include <variant>

namespace racah {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Error: return "error";
  }
  return "error";
}

namespace {

std::size_t observable_terms(const Observable& o) {
  if (auto* f = std::get_if<PhaseFunction>(&o)) return f->term_count();
  return std::get<WeylOperator>(o).term_count();
}

std::vector<std::string> observable_preview(const Observable& o) {
  if (auto* f = std::get_if<PhaseFunction>(&o)) return f->term_strings(kResidualPreviewCap);
  return std::get<WeylOperator>(o).term_strings(kResidualPreviewCap);
}

RelationReport run_one(const Check& c) {
  RelationReport r;
  r.name = c.name;
  r.indices = c.indices;
  auto start = std::chrono::steady_clock::now();
  try {
    Observable residual = c.residual();
    r.residual_terms = observable_terms(residual);
    r.status = r.residual_terms == 0 ? CheckStatus::Pass : CheckStatus::Fail;
    if (r.status == CheckStatus::Fail) r.residual_preview = observable_preview(residual);
  } catch (const std::exception& e) {
    r.status = CheckStatus::Error;
    r.residual_terms = 0;
    r.residual_preview = {std::string("exception: ") + e.what()};
  }
  auto end = std::chrono::steady_clock::now();
  r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
  return r;
}

}  // namespace

std::vector<RelationReport> run_checks(const std::vector<Check>& checks, unsigned threads) {
  std::vector<RelationReport> reports(checks.size());
  if (threads <= 1 || checks.size() <= 1) {
    for (std::size_t i = 0; i < checks.size(); ++i) reports[i] = run_one(checks[i]);
  } else {
    unsigned workers = std::min<std::size_t>(threads, checks.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= checks.size()) return;
          reports[i] = run_one(checks[i]);
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  std::sort(reports.begin(), reports.end(), [](const RelationReport& a, const RelationReport& b) {
    if (a.name != b.name) return a.name < b.name;
    return a.indices < b.indices;
  });
  return reports;
}

std::vector<HamiltonianSpec> draw_hamiltonian_specs(uint64_t seed, std::size_t count) {
  SplitMix64 rng(seed);
  std::vector<HamiltonianSpec> specs;
  specs.reserve(count);
  for (std::size_t s = 0; s < count; ++s) specs.push_back(HamiltonianSpec::drawn(rng));
  return specs;
}

std::vector<RelationReport> verify_racah_relations(RacahContext& ctx, unsigned threads) {
  return run_checks(racah_suite(ctx), threads);
}

std::vector<RelationReport> verify_substructure(const AlgebraEnv& env, const Substructure& s,
                                                unsigned threads) {
  return run_checks(substructure_checks(env, s), threads);
}

std::vector<RelationReport> verify_cross_chain(RacahContext& ctx, unsigned threads) {
  std::vector<Check> checks;
  const AlgebraEnv& env = ctx.env();
  std::string prefix = env.mode() == AlgebraMode::Classical ? "classical." : "quantum.";
  for (uint32_t i = 1; i + 1 <= env.n(); ++i) {
    for (uint32_t j = 1; j <= i; ++j) {
      Observable lj = ctx.L(j);
      Observable ri = ctx.R(i + 1);
      checks.push_back({prefix + "sub.cross", {j, i + 1},
                        [env, lj, ri] { return env.raw_bracket(lj, ri); }});
    }
  }
  return run_checks(checks, threads);
}

std::vector<RelationReport> verify_classical_limit(RacahContext& quantum_ctx,
                                                   RacahContext& classical_ctx, unsigned threads) {
  return run_checks(limit_suite(quantum_ctx, classical_ctx), threads);
}

}  // namespace racah

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "racah/racah_context.hpp"
#include "racah/realisation.hpp"

namespace racah {

enum class CheckStatus { Pass, Fail, Error };

const char* to_string(CheckStatus s);

struct RelationReport {
  std::string name;
  std::vector<uint32_t> indices;
  CheckStatus status = CheckStatus::Error;
  std::size_t residual_terms = 0;
  std::vector<std::string> residual_preview;
  int64_t millis = 0;
};

/// One deferred identity check. The residual callback owns copies of every
/// observable it needs, so running it is pure and thread-safe; a check passes
/// when its residual is exactly zero.
struct Check {
  std::string name;
  std::vector<uint32_t> indices;
  std::function<Observable()> residual;
};

/// Number of rendered residual terms kept in a report.
inline constexpr std::size_t kResidualPreviewCap = 8;

/// Runs every check (worker pool of `threads`) and returns reports sorted by
/// (name, indices) so the output order never depends on scheduling.
std::vector<RelationReport> run_checks(const std::vector<Check>& checks, unsigned threads = 1);

/// Fixed seed from which `params exact` runs draw the randomized Hamiltonian
/// specs, keeping seedless runs reproducible.
inline constexpr uint64_t kDefaultHamiltonianSeed = 0x5eed0f0d2290a1c3ull;
inline constexpr uint64_t kHamiltonianSeedSalt = 0x9e3779b97f4a7c15ull;

std::vector<HamiltonianSpec> draw_hamiltonian_specs(uint64_t seed, std::size_t count = 5);

/// Suite builders. Names are prefixed "classical."/"quantum." from the
/// context mode ("limit." for the limit suite, which spans both).
std::vector<Check> racah_suite(RacahContext& ctx);
std::vector<Check> substructure_checks(const AlgebraEnv& env, const Substructure& s);
std::vector<Check> substructure_suite(RacahContext& ctx);
std::vector<Check> casimir_suite(RacahContext& ctx);
std::vector<Check> involution_suite(RacahContext& ctx, const std::vector<HamiltonianSpec>& specs);
std::vector<Check> limit_suite(RacahContext& quantum_ctx, RacahContext& classical_ctx);

/// Convenience wrappers: build + run in one call.
std::vector<RelationReport> verify_racah_relations(RacahContext& ctx, unsigned threads = 1);
std::vector<RelationReport> verify_substructure(const AlgebraEnv& env, const Substructure& s,
                                                unsigned threads = 1);
std::vector<RelationReport> verify_cross_chain(RacahContext& ctx, unsigned threads = 1);
std::vector<RelationReport> verify_classical_limit(RacahContext& quantum_ctx,
                                                   RacahContext& classical_ctx,
                                                   unsigned threads = 1);

}  // namespace racah

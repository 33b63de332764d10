#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "racah/chain_graph.hpp"
#include "racah/json_report.hpp"
#include "racah/verify.hpp"

namespace {

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

unsigned resolve_threads(std::optional<int> flag_value) {
  if (flag_value) return unsigned(*flag_value);
  if (const char* env = std::getenv("RACAH_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return unsigned(v);
  }
  return 1;
}

void append(std::vector<racah::Check>& dst, std::vector<racah::Check> src) {
  dst.insert(dst.end(), std::make_move_iterator(src.begin()), std::make_move_iterator(src.end()));
}

/// All checks for one concrete mode (suite "limit" is handled separately).
void build_mode_checks(std::vector<racah::Check>& checks, racah::AlgebraMode mode,
                       const std::string& suite, uint32_t n, bool random, uint64_t seed) {
  using namespace racah;
  AlgebraEnv env = random ? AlgebraEnv::randomized(mode, n, seed) : AlgebraEnv::exact(mode, n);
  RacahContext ctx(env);
  if (suite == "racah" || suite == "all") append(checks, racah_suite(ctx));
  if (suite == "substructures" || suite == "all") append(checks, substructure_suite(ctx));
  if (suite == "casimirs" || suite == "all") append(checks, casimir_suite(ctx));
  if (suite == "involution" || suite == "all") {
    uint64_t ham_seed = random ? (seed ^ kHamiltonianSeedSalt) : kDefaultHamiltonianSeed;
    append(checks, involution_suite(ctx, draw_hamiltonian_specs(ham_seed)));
  }
}

void build_limit_checks(std::vector<racah::Check>& checks, uint32_t n, bool random,
                        uint64_t seed) {
  using namespace racah;
  AlgebraEnv qenv = random ? AlgebraEnv::randomized(AlgebraMode::Quantum, n, seed, true)
                           : AlgebraEnv::exact(AlgebraMode::Quantum, n);
  AlgebraEnv cenv = random ? AlgebraEnv::randomized(AlgebraMode::Classical, n, seed)
                           : AlgebraEnv::exact(AlgebraMode::Classical, n);
  RacahContext qctx(qenv), cctx(cenv);
  append(checks, limit_suite(qctx, cctx));
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  return bool(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constructs the generalised Racah algebra in its classical and quantum "
               "realisations and verifies every defining relation exactly."};
  app.require_subcommand(1);

  CLI::App* verify = app.add_subcommand("verify", "Run one verification suite");
  int n = 0;
  std::string mode, suite, params;
  std::optional<uint64_t> seed_flag;
  std::optional<int> threads_flag;
  std::string json_path, dot_path;
  verify->add_option("--n", n, "Number of sites")->required();
  verify->add_option("--mode", mode, "classical|quantum|both")->required();
  verify->add_option("--suite", suite, "racah|substructures|casimirs|involution|limit|all")
      ->required();
  verify->add_option("--params", params, "exact|random")->required();
  verify->add_option("--seed", seed_flag, "Seed for random parameter draws (default 0)");
  verify->add_option("--json", json_path, "Write the machine-readable report here");
  verify->add_option("--dot", dot_path, "Write the casimir chain graph here");
  verify->add_option("--threads", threads_flag, "Worker count (else RACAH_THREADS, else 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (n < 3) return usage_error("--n must be at least 3");
  if (mode != "classical" && mode != "quantum" && mode != "both")
    return usage_error("--mode must be classical, quantum or both");
  if (suite != "racah" && suite != "substructures" && suite != "casimirs" &&
      suite != "involution" && suite != "limit" && suite != "all")
    return usage_error("--suite must be one of racah, substructures, casimirs, involution, "
                       "limit, all");
  if (params != "exact" && params != "random")
    return usage_error("--params must be exact or random");
  if (suite == "limit" && mode == "classical")
    return usage_error("suite limit needs a quantum side; use --mode quantum or both");
  if (threads_flag && *threads_flag < 1) return usage_error("--threads must be at least 1");

  const bool random = params == "random";
  const uint64_t seed = seed_flag.value_or(0);
  const unsigned threads = resolve_threads(threads_flag);

  std::vector<racah::RelationReport> reports;
  try {
    std::vector<racah::Check> checks;
    if (suite != "limit") {
      if (mode == "classical" || mode == "both")
        build_mode_checks(checks, racah::AlgebraMode::Classical, suite, uint32_t(n), random, seed);
      if (mode == "quantum" || mode == "both")
        build_mode_checks(checks, racah::AlgebraMode::Quantum, suite, uint32_t(n), random, seed);
    }
    if (suite == "limit" || (suite == "all" && mode != "classical"))
      build_limit_checks(checks, uint32_t(n), random, seed);
    reports = racah::run_checks(checks, threads);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }

  std::size_t passed = 0, failed = 0, errored = 0;
  int64_t total_ms = 0;
  for (const racah::RelationReport& r : reports) {
    total_ms += r.millis;
    switch (r.status) {
      case racah::CheckStatus::Pass: ++passed; break;
      case racah::CheckStatus::Fail: ++failed; break;
      case racah::CheckStatus::Error: ++errored; break;
    }
    std::cout << to_string(r.status) << "  " << r.name << " [";
    for (std::size_t i = 0; i < r.indices.size(); ++i)
      std::cout << (i ? "," : "") << r.indices[i];
    std::cout << "]  (" << r.millis << " ms)\n";
    if (r.status != racah::CheckStatus::Pass) {
      for (const std::string& t : r.residual_preview) std::cout << "    " << t << "\n";
      if (r.residual_terms > r.residual_preview.size())
        std::cout << "    ... " << r.residual_terms - r.residual_preview.size()
                  << " more terms\n";
    }
  }
  std::cout << reports.size() << " checks: " << passed << " passed, " << failed << " failed, "
            << errored << " errored  (" << total_ms << " ms total)\n";

  if (!json_path.empty()) {
    std::optional<uint64_t> json_seed;
    if (random) json_seed = seed;
    std::string doc = racah::render_json_report(uint32_t(n), mode, suite, params, json_seed,
                                                reports);
    if (!write_file(json_path, doc)) {
      std::cerr << "internal error: cannot write " << json_path << "\n";
      return 3;
    }
  }
  if (!dot_path.empty()) {
    if (!write_file(dot_path, racah::emit_chain_graph(uint32_t(n)))) {
      std::cerr << "internal error: cannot write " << dot_path << "\n";
      return 3;
    }
  }

  if (errored) return 3;
  return failed ? 1 : 0;
}

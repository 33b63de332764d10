#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "racah/observable.hpp"
#include "racah/realisation.hpp"

namespace racah {

/// Nonempty strictly increasing list of site indices.
class IndexSubset {
 public:
  explicit IndexSubset(std::vector<uint32_t> idx);
  IndexSubset(std::initializer_list<uint32_t> idx) : IndexSubset(std::vector<uint32_t>(idx)) {}

  static IndexSubset range(uint32_t lo, uint32_t hi);
  IndexSubset unite(const IndexSubset& o) const;

  const std::vector<uint32_t>& indices() const { return idx_; }
  std::size_t size() const { return idx_.size(); }
  uint32_t max_index() const { return idx_.back(); }
  bool operator<(const IndexSubset& o) const { return idx_ < o.idx_; }
  bool operator==(const IndexSubset& o) const { return idx_ == o.idx_; }
  std::string str() const;

 private:
  std::vector<uint32_t> idx_;
};

/// The seven generators of the k-th substructure plus its hidden generator.
/// Central elements are Lkm1, Ck, Rkp1 and Ln.
struct Substructure {
  uint32_t n = 0;
  uint32_t k = 0;
  AlgebraMode mode = AlgebraMode::Classical;
  Observable Lkm1, Ck, Rkp1, Lk, Rk, Mk, Ln, Fk;
};

/// Cache-backed builder for the Racah generators over one AlgebraEnv.
/// Not thread-safe; warm the needed entries before fanning out work.
class RacahContext {
 public:
  explicit RacahContext(AlgebraEnv env) : env_(std::move(env)) {}

  const AlgebraEnv& env() const { return env_; }

  /// C_i, the constant one-site Casimir.
  Observable one_index_C(uint32_t i);
  /// C_ij for i < j.
  Observable two_index_C(uint32_t i, uint32_t j);
  /// C_K = sum_{i<j in K} C_ij - (|K|-2) sum_{i in K} C_i, any subset shape.
  Observable subset_casimir(const IndexSubset& K);
  /// P_ij = C_ij - C_i - C_j; symmetric, any i != j.
  Observable P(uint32_t i, uint32_t j);
  /// Direct definition: half the (normalised) bracket of P_ij and P_jk.
  Observable F(uint32_t i, uint32_t j, uint32_t k);
  /// Antisymmetric reduction to the cached sorted-triple F.
  Observable F_signed(uint32_t i, uint32_t j, uint32_t k);
  /// Left casimir chain element built on the Racah side, C_{1..k}.
  Observable L(uint32_t k);
  /// Right chain element C_{k..n}.
  Observable R(uint32_t k);

  Substructure substructure(uint32_t k);
  Observable substructure_casimir(const Substructure& s);

  /// Fault-injection hooks for the negative-control tests: replace a cached
  /// generator so later reads (and everything derived from them) see the
  /// replacement. Clears downstream caches.
  void inject_two_index_C(uint32_t i, uint32_t j, Observable o);
  void inject_P(uint32_t i, uint32_t j, Observable o);

 private:
  void check_site(uint32_t i) const;
  Observable build_two_index(uint32_t i, uint32_t j) const;

  AlgebraEnv env_;
  std::map<uint32_t, Observable> c1_;
  std::map<std::pair<uint32_t, uint32_t>, Observable> c2_;
  std::map<IndexSubset, Observable> csub_;
  std::map<std::pair<uint32_t, uint32_t>, Observable> p_;
  std::map<std::array<uint32_t, 3>, Observable> f_;
};

}  // namespace racah

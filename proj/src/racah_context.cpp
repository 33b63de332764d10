#include "racah/racah_context.hpp"

#include <algorithm>

#include "racah/errors.hpp"

namespace racah {

IndexSubset::IndexSubset(std::vector<uint32_t> idx) : idx_(std::move(idx)) {
  if (idx_.empty()) throw BadIndices("subset: empty");
  for (std::size_t i = 0; i + 1 < idx_.size(); ++i)
    if (idx_[i] >= idx_[i + 1]) throw BadIndices("subset: indices must strictly increase");
  if (idx_.front() < 1) throw BadIndices("subset: indices start at 1");
}

IndexSubset IndexSubset::range(uint32_t lo, uint32_t hi) {
  if (lo < 1 || lo > hi) throw BadIndices("subset range: need 1 <= lo <= hi");
  std::vector<uint32_t> v;
  for (uint32_t i = lo; i <= hi; ++i) v.push_back(i);
  return IndexSubset(std::move(v));
}

IndexSubset IndexSubset::unite(const IndexSubset& o) const {
  std::vector<uint32_t> v;
  std::merge(idx_.begin(), idx_.end(), o.idx_.begin(), o.idx_.end(), std::back_inserter(v));
  return IndexSubset(std::move(v));  // rejects overlaps via strictness check
}

std::string IndexSubset::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < idx_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(idx_[i]);
  }
  return s + "}";
}

void RacahContext::check_site(uint32_t i) const {
  if (i < 1 || i > env_.n())
    throw BadIndices("site " + std::to_string(i) + " outside 1.." + std::to_string(env_.n()));
}

Observable RacahContext::one_index_C(uint32_t i) {
  check_site(i);
  auto it = c1_.find(i);
  if (it != c1_.end()) return it->second;

  ParamScalar c;
  if (env_.mode() == AlgebraMode::Classical) {
    c = ParamScalar::rational(-1, 4) * ParamScalar::a(i);
  } else {
    c = ParamScalar::rational(3, 16) * ParamScalar::hbar(2) +
        ParamScalar::rational(-1, 4) * ParamScalar::a(i);
  }
  return c1_.emplace(i, env_.constant(c)).first->second;
}

Observable RacahContext::build_two_index(uint32_t i, uint32_t j) const {
  uint32_t n = env_.n();
  ParamScalar quarter = ParamScalar::rational(-1, 4);

  if (env_.mode() == AlgebraMode::Classical) {
    PhaseFunction lij = PhaseFunction::coordinate(n, i) * PhaseFunction::momentum(n, j) -
                        PhaseFunction::coordinate(n, j) * PhaseFunction::momentum(n, i);
    PhaseFunction inner = lij * lij;
    inner += (PhaseFunction::coordinate(n, i, -2) * PhaseFunction::coordinate(n, j, 2))
                 .scaled(ParamScalar::a(i));
    inner += (PhaseFunction::coordinate(n, j, -2) * PhaseFunction::coordinate(n, i, 2))
                 .scaled(ParamScalar::a(j));
    inner += PhaseFunction::constant(n, ParamScalar::a(i) + ParamScalar::a(j));
    return env_.bind(inner.scaled(quarter));
  }

  const ParamScalar& hb = ParamScalar::hbar();
  WeylOperator lij = op_mul(WeylOperator::position(n, i), WeylOperator::momentum(n, j), hb) -
                     op_mul(WeylOperator::position(n, j), WeylOperator::momentum(n, i), hb);
  WeylOperator inner = op_mul(lij, lij, hb);
  inner += op_mul(WeylOperator::position(n, i, -2), WeylOperator::position(n, j, 2), hb)
               .scaled(ParamScalar::a(i));
  inner += op_mul(WeylOperator::position(n, j, -2), WeylOperator::position(n, i, 2), hb)
               .scaled(ParamScalar::a(j));
  inner += WeylOperator::constant(n, ParamScalar::a(i) + ParamScalar::a(j) - ParamScalar::hbar(2));
  return env_.bind(inner.scaled(quarter));
}

Observable RacahContext::two_index_C(uint32_t i, uint32_t j) {
  check_site(i);
  check_site(j);
  if (i >= j) throw BadIndices("two_index_C: need i < j");
  auto key = std::make_pair(i, j);
  auto it = c2_.find(key);
  if (it != c2_.end()) return it->second;
  return c2_.emplace(key, build_two_index(i, j)).first->second;
}

Observable RacahContext::subset_casimir(const IndexSubset& K) {
  if (K.max_index() > env_.n()) throw BadIndices("subset " + K.str() + " exceeds n");
  auto it = csub_.find(K);
  if (it != csub_.end()) return it->second;

  const auto& idx = K.indices();
  Observable acc = env_.zero();
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      acc = env_.add(acc, two_index_C(idx[a], idx[b]));
  long shift = static_cast<long>(idx.size()) - 2;
  for (uint32_t i : idx)
    acc = env_.sub(acc, env_.scale(one_index_C(i), ParamScalar(shift)));
  return csub_.emplace(K, std::move(acc)).first->second;
}

Observable RacahContext::P(uint32_t i, uint32_t j) {
  check_site(i);
  check_site(j);
  if (i == j) throw BadIndices("P: need i != j");
  std::pair<uint32_t, uint32_t> key = std::minmax(i, j);
  auto it = p_.find(key);
  if (it != p_.end()) return it->second;
  Observable v = env_.sub(env_.sub(two_index_C(key.first, key.second), one_index_C(key.first)),
                          one_index_C(key.second));
  return p_.emplace(key, std::move(v)).first->second;
}

Observable RacahContext::F(uint32_t i, uint32_t j, uint32_t k) {
  if (i == j || j == k || i == k) throw BadIndices("F: indices must be pairwise distinct");
  return env_.scale(env_.bracket(P(i, j), P(j, k)), ParamScalar::rational(1, 2));
}

Observable RacahContext::F_signed(uint32_t i, uint32_t j, uint32_t k) {
  if (i == j || j == k || i == k) throw BadIndices("F: indices must be pairwise distinct");
  std::array<uint32_t, 3> sorted{i, j, k};
  std::sort(sorted.begin(), sorted.end());
  auto it = f_.find(sorted);
  if (it == f_.end())
    it = f_.emplace(sorted, F(sorted[0], sorted[1], sorted[2])).first;
  // Parity of the permutation taking sorted -> (i,j,k).
  bool odd = (i > j) ^ (j > k) ^ (i > k);
  return odd ? env_.neg(it->second) : it->second;
}

Observable RacahContext::L(uint32_t k) {
  check_site(k);
  return subset_casimir(IndexSubset::range(1, k));
}

Observable RacahContext::R(uint32_t k) {
  check_site(k);
  return subset_casimir(IndexSubset::range(k, env_.n()));
}

Substructure RacahContext::substructure(uint32_t k) {
  uint32_t n = env_.n();
  if (n < 3) throw BadIndices("substructure: need n >= 3");
  if (k < 2 || k > n - 1) throw BadIndices("substructure: need 2 <= k <= n-1");

  Observable lkm1 = subset_casimir(IndexSubset::range(1, k - 1));
  Observable ck = one_index_C(k);
  Observable rkp1 = subset_casimir(IndexSubset::range(k + 1, n));
  Observable lk = L(k);
  Observable rk = R(k);
  Observable mk = subset_casimir(IndexSubset::range(1, k - 1).unite(IndexSubset::range(k + 1, n)));
  Observable ln = subset_casimir(IndexSubset::range(1, n));
  Observable fk = env_.scale(env_.bracket(lk, rk), ParamScalar::rational(1, 2));
  return Substructure{n,
                      k,
                      env_.mode(),
                      std::move(lkm1),
                      std::move(ck),
                      std::move(rkp1),
                      std::move(lk),
                      std::move(rk),
                      std::move(mk),
                      std::move(ln),
                      std::move(fk)};
}

Observable RacahContext::substructure_casimir(const Substructure& s) {
  const AlgebraEnv& e = env_;
  Observable K = e.mul(s.Fk, s.Fk);
  K = e.add(K, e.scale(e.sym3(s.Lk, s.Mk, s.Rk), ParamScalar::rational(1, 6)));
  Observable rc = e.sub(s.Rkp1, s.Ck);     // R_{k+1} - C_k
  Observable lm = e.sub(s.Lkm1, s.Ln);     // L_{k-1} - L_n
  Observable cl = e.sub(s.Ck, s.Lkm1);     // C_k - L_{k-1}
  Observable rl = e.sub(s.Rkp1, s.Ln);     // R_{k+1} - L_n
  K = e.add(K, e.mul(e.mul(rc, lm), s.Lk));
  K = e.sub(K, e.mul(e.mul(cl, rl), s.Rk));
  if (e.mode() == AlgebraMode::Quantum) {
    Observable block = e.acomm(s.Lk, s.Mk);
    block = e.add(block, e.acomm(s.Lk, s.Rk));
    block = e.add(block, e.acomm(s.Mk, s.Rk));
    block = e.add(block, e.mul(cl, rl));
    block = e.sub(block, e.mul(rc, lm));
    ParamScalar hb2_third =
        e.hbar().elem * e.hbar().elem * ParamScalar::rational(1, 3);
    K = e.add(K, e.scale(block, hb2_third));
  }
  return K;
}

void RacahContext::inject_two_index_C(uint32_t i, uint32_t j, Observable o) {
  if (i >= j) throw BadIndices("inject_two_index_C: need i < j");
  c2_.insert_or_assign(std::make_pair(i, j), std::move(o));
  csub_.clear();
  p_.clear();
  f_.clear();
}

void RacahContext::inject_P(uint32_t i, uint32_t j, Observable o) {
  if (i == j) throw BadIndices("inject_P: need i != j");
  std::pair<uint32_t, uint32_t> key = std::minmax(i, j);
  p_.insert_or_assign(key, std::move(o));
  f_.clear();
}

}  // namespace racah

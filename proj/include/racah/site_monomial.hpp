#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace racah {

/// One product of per-site powers. x exponents may be negative (Laurent),
/// p exponents are non-negative. Both vectors always have length dim.
struct SiteMonomial {
  std::vector<int32_t> x_exp;
  std::vector<uint32_t> p_exp;

  bool operator==(const SiteMonomial&) const = default;
  bool trivial() const {
    for (int32_t e : x_exp)
      if (e != 0) return false;
    for (uint32_t e : p_exp)
      if (e != 0) return false;
    return true;
  }
  long total_degree() const {
    long d = 0;
    for (int32_t e : x_exp) d += e;
    for (uint32_t e : p_exp) d += e;
    return d;
  }
  /// " * x1^-2 * p2" style factor list; empty for the trivial monomial.
  std::string factors(const char* xsym, const char* psym) const;
};

/// Graded-lex order, leading term first, on the concatenated exponent list.
struct SiteMonomialDesc {
  bool operator()(const SiteMonomial& a, const SiteMonomial& b) const;
};

}  // namespace racah

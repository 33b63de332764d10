#include "racah/site_monomial.hpp"

namespace racah {

std::string SiteMonomial::factors(const char* xsym, const char* psym) const {
  std::string out;
  for (std::size_t i = 0; i < x_exp.size(); ++i) {
    if (x_exp[i] == 0) continue;
    out += " * " + std::string(xsym) + std::to_string(i + 1);
    if (x_exp[i] != 1) out += "^" + std::to_string(x_exp[i]);
  }
  for (std::size_t i = 0; i < p_exp.size(); ++i) {
    if (p_exp[i] == 0) continue;
    out += " * " + std::string(psym) + std::to_string(i + 1);
    if (p_exp[i] != 1) out += "^" + std::to_string(p_exp[i]);
  }
  return out;
}

bool SiteMonomialDesc::operator()(const SiteMonomial& a, const SiteMonomial& b) const {
  long ga = a.total_degree();
  long gb = b.total_degree();
  if (ga != gb) return ga > gb;
  if (a.x_exp != b.x_exp) return a.x_exp > b.x_exp;
  return a.p_exp > b.p_exp;
}

}  // namespace racah

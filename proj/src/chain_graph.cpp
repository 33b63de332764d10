#include "racah/chain_graph.hpp"

#include <sstream>

#include "racah/errors.hpp"

namespace racah {

std::string emit_chain_graph(uint32_t n) {
  if (n < 3) throw BadIndices("chain graph needs n >= 3");
  std::ostringstream out;
  out << "digraph racah_chain {\n";
  out << "  graph [rankdir=LR];\n";
  out << "  node [shape=circle];\n";
  for (uint32_t j = 1; j + 1 <= n; ++j) out << "  L" << j << ";\n";
  for (uint32_t j = 2; j <= n; ++j) out << "  R" << j << ";\n";
  for (uint32_t j = 1; j + 2 <= n; ++j) out << "  L" << j << " -> L" << j + 1 << ";\n";
  for (uint32_t j = 2; j + 1 <= n; ++j) out << "  R" << j << " -> R" << j + 1 << ";\n";
  for (uint32_t i = 1; i + 1 <= n; ++i)
    for (uint32_t j = 1; j <= i; ++j) out << "  L" << j << " -> R" << i + 1 << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace racah

#pragma once

#include <cstdint>
#include <string>

namespace racah {

/// DOT digraph of the two casimir chains for n sites: nodes L1..L{n-1} and
/// R2..Rn, with an edge for every commuting pair (chain neighbours, plus
/// every Lj with j <= i against R{i+1}). Throws BadIndices for n < 3.
std::string emit_chain_graph(uint32_t n);

}  // namespace racah

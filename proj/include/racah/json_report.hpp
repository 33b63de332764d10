#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "racah/verify.hpp"

namespace racah {

/// Serialises one verification run. Field order is fixed and the millis field
/// is pinned to 0 so repeated runs (at any thread count) emit identical bytes.
std::string render_json_report(uint32_t n, const std::string& mode, const std::string& suite,
                               const std::string& params, std::optional<uint64_t> seed,
                               const std::vector<RelationReport>& reports);

}  // namespace racah

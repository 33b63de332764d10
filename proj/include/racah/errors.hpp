#pragma once

#include <stdexcept>
#include <string>

namespace racah {

/// Operands live over a different number of sites.
struct DimensionMismatch : std::invalid_argument {
  explicit DimensionMismatch(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Division by a power of hb requested on a scalar that is not a multiple of it.
struct NotDivisible : std::runtime_error {
  explicit NotDivisible(const std::string& msg) : std::runtime_error(msg) {}
};

/// Site range outside 1..n, or empty.
struct BadRange : std::invalid_argument {
  explicit BadRange(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Index tuple with repeats, out-of-bounds entries, or an unsupported shape.
struct BadIndices : std::invalid_argument {
  explicit BadIndices(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace racah

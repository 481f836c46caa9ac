#pragma once

#include <cstdint>

namespace ideallab {

/// Resource caps shared by every exponential enumeration in the library.
///
/// Defaults can be overridden through the environment variables
/// IDEAL_LAB_MAX_VARS and IDEAL_LAB_MAX_BOX; the per-variable exponent cap
/// is only adjustable programmatically.
struct Limits {
  int maxVars = 16;
  int maxExponent = 15;
  std::uint64_t maxBox = std::uint64_t{1} << 22;

  /// Defaults with environment overrides applied. Read once per process.
  static const Limits& fromEnvironment();
};

}  // namespace ideallab

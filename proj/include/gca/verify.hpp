#pragma once

#include <cstddef>
#include <cstdint>

#include "gca/report.hpp"

namespace gca {

struct VerifyOptions {
  std::size_t max_order = 6;
  std::size_t q = 2;
  std::size_t max_memory = 2;
  std::uint64_t seed = 1;
};

/// Runs every invariant of the library against brute-force oracles over the
/// catalog groups up to max_order. Checks are tagged by module
/// (groups.*, configurations.*, core.*, pullback.*, equivariance.*,
/// structure.*); a failing check carries its first counterexample.
void run_verify(const VerifyOptions& options, Report& report);

}  // namespace gca

#pragma once

#include "ybx/report.hpp"

#include <cstdint>
#include <vector>

namespace ybx {

/// The full verification matrix: every structural claim the library is
/// built to certify, each as one pass/fail certificate. Randomized parts
/// derive from the seed; identical seeds give identical reports.
std::vector<Certificate> acceptance_suite(std::uint64_t seed, bool parallel = true);

constexpr std::uint64_t kDefaultSeed = 20240915;

} // namespace ybx

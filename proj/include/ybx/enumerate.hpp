#pragma once

#include "ybx/solution.hpp"

#include <vector>

namespace ybx {

/// Exhaustive search for quadratic sets with r^2 = r, the braid relation,
/// and bijective left actions.
///
/// n = 2 enumerates all (n^2)^(n^2) maps on X^2 outright; n = 3 imposes
/// left nondegeneracy structurally (each L_x a permutation) and sweeps the
/// remaining right-action tables. Results are sorted by table encoding, so
/// serial and parallel runs agree byte for byte.
///
/// `dedup_iso` keeps one representative per isomorphism class.
std::vector<SolutionTable> enumerate_idempotent_lnd_solutions(int n, bool dedup_iso = false,
                                                              bool parallel = true);

/// Serial reference implementation kept for testing; identical contract.
std::vector<SolutionTable> enumerate_idempotent_lnd_solutions_serial(int n,
                                                                     bool dedup_iso = false);

} // namespace ybx

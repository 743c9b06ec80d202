#pragma once

#include "commalg/registry.hpp"
#include "commalg/report.hpp"

namespace commalg {

/// Seeded property suites: the complement-sum identity, conductor agreement on
/// random F-families, Auslander–Buchsbaum on Hochster computations and (S2)
/// membership against the brute-force oracle. The output depends only on
/// (seed, trials, field).
VerificationReport run_suite(const RunConfig& cfg);

}  // namespace commalg

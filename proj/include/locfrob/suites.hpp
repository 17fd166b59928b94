#pragma once

// The named verification suites behind the command-line tool.  Each suite
// runs a battery of exact checks and returns a SuiteReport; the consumer
// decides exit codes from allPassed().  Reports are deterministic functions
// of (config, suite, seed, depth): every random choice is drawn from streams
// derived from the seed and the check id.
//
//   frobenius    symmetric forms, integrals, unimodularity, semisimplicity
//   extensions   coset witnesses and induction/coinduction over S4 subgroups
//   coherent     normalized dimension and rank, ideal growth tables
//   ideals       radicals, socles, the minimal-ideal dichotomy
//   hopf         Hopf axioms, twisting, normality, sub-Hopf products
//   homological  Ext vanishing, syzygies, stable isomorphism
//   witnesses    noncoherence, essentiality, descent, hom towers, locality
//   all          everything above in one report

#include "locfrob/config.hpp"
#include "locfrob/report.hpp"

#include <string>
#include <vector>

namespace locfrob {

// An unknown suite name, compute operation, or fixture: the request itself
// is malformed, as opposed to a check failing.
struct UnknownRequest : Error {
    using Error::Error;
};

std::vector<std::string> suiteNames();

// Full structural validation of the configured system as a one-record report.
SuiteReport validateReport(const SystemConfig& cfg, int depthOverride = 0);

SuiteReport runSuite(const SystemConfig& cfg, const std::string& suite,
                     std::uint64_t seed, int depthOverride = 0);

// Evaluates a single expression against the configured system, e.g.
// "cohdim(trivial@stage1)", "cohrank(regular@stage2)", "ext(k,k,4)",
// "ext(k,k,4@stage2)", "integrals(stage 2)".
SuiteReport computeReport(const SystemConfig& cfg, const std::string& expr,
                          int depthOverride = 0);

} // namespace locfrob

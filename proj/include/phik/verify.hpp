#pragma once

// Named property suites that cross-check every formula against its oracle.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "phik/rho.hpp"

namespace phik {

struct VerifyOutcome {
  std::string suite;
  std::uint64_t limit = 0;
  std::uint64_t checks = 0;
  bool passed = true;
  std::string failure;  // first counterexample, empty on success
};

// The suite names accepted by run_suite.
std::vector<std::string_view> suite_names();

// limit scales each suite's bounds; limit = 100 reproduces the reference
// bounds (phi oracles to n <= 100, identities to m, n <= 100, ...).
// Throws DomainError on an unknown suite.
VerifyOutcome run_suite(std::string_view suite, std::uint64_t limit,
                        std::uint64_t guard = kDefaultEnumerationGuard);

VerifyOutcome verify_rho(std::uint64_t limit, std::uint64_t guard = kDefaultEnumerationGuard);
VerifyOutcome verify_phi(std::uint64_t limit, std::uint64_t guard = kDefaultEnumerationGuard);
VerifyOutcome verify_identities(std::uint64_t limit);
VerifyOutcome verify_convolution(std::uint64_t limit);
VerifyOutcome verify_menon_classic(std::uint64_t limit);

}  // namespace phik

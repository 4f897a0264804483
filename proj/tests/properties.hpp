#pragma once

// Randomized property suites shared by the unit tests and the acceptance gate.

#include <cstdint>
#include <string>

namespace props {

struct Outcome {
  long cases = 0;
  long failures = 0;
  std::string first_failure;
};

Outcome padic_ring_laws(std::uint64_t seed, long cases);
bool residue_cover(int p, int k_low, int k_high);
Outcome cyclo_normal_form(std::uint64_t seed, long cases);
Outcome refinement_gates(std::uint64_t seed, long cases);

}  // namespace props

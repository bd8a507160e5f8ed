#ifndef PFOUR_VERIFICATION_HPP
#define PFOUR_VERIFICATION_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pfour/classify.hpp"

namespace pfour {

struct CheckOutcome {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  /// First failing datum when !passed.
  std::string detail;
};

struct VerificationReport {
  Int p = 0;
  std::uint64_t seed = 0;
  std::vector<CheckOutcome> checks;

  bool ok() const;
};

/// Random automorphism of N; the (1,2) entry is kept divisible by p for C_{p^2} x C_p.
MixedModulusMatrix random_automorphism(const ModulusProfile& profile, std::mt19937_64& rng);

/// (x, a)^n by repeated multiplication equals (norm(x) + v, a^0) for every x in N.
CheckOutcome check_power_norm(const CandidateType& c);

/**
 * Property suite over every classification candidate at p (3 or 5).
 * Associativity is exhaustive at p = 3 and sampled at p = 5. Parameters of
 * the randomized checks are drawn from @p seed.
 */
VerificationReport run_verification(Int p, std::uint64_t seed);

}  // namespace pfour

#endif

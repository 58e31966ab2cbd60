#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdskit/pds.hpp"

namespace pdskit {

// Predicted parameters of D ∩ H for a Hall subgroup H of order h:
//   pi     = gcd(h, delta)
//   theta  = the unique integer with (2*theta - 1)*pi <= beta < (2*theta + 1)*pi
//   beta1  = beta - 2*theta*pi            (lies in [-pi, pi))
//   delta1 = pi^2
//   k1     = [(h + beta1) +/- sqrt((h + beta1)^2 - (pi^2 - beta1^2)(h - 1))] / 2
// k1_candidates keeps each sign choice that lands on a non-negative integer
// at most h - 1; both are kept when both are integral.
struct RestrictionPrediction {
  std::uint64_t subgroup_order = 0;
  std::uint64_t pi = 0;
  std::int64_t theta = 0;
  std::int64_t beta1 = 0;
  std::uint64_t delta1_sq = 0;
  std::vector<std::uint64_t> k1_candidates;
};

// Requires square delta_sq, h | v, gcd(h, v/h) = 1 and v/h odd; violations
// are rejected with the failing hypothesis named. When delta1 equals h the
// simplified form [h + beta1 +/- (beta1 + 1)*sqrt(h)] / 2 is used and
// cross-checked against the general formula.
RestrictionPrediction predict_restriction(const PdsParameters& params, std::uint64_t subgroup_order);

// When delta = p^r * pi with p >= 5 prime, pi > 1 and gcd(p, pi) = 1, theta
// is forced into a congruence class mod p - 1: 0 for even r, (p-1)/2 for odd
// r. Returns nothing when the hypothesis pattern does not apply.
struct ThetaParity {
  std::uint64_t p = 0;
  std::uint64_t r = 0;
  std::uint64_t residue = 0;
  std::uint64_t modulus = 0;  // p - 1
};
std::optional<ThetaParity> theta_parity_requirement(std::uint64_t delta, std::uint64_t pi);

struct RestrictionReport {
  PdsParameters input_params;
  std::vector<std::uint64_t> hall_primes;
  std::uint64_t subgroup_order = 0;
  // absent only in the full-subgroup identity case with non-square delta_sq
  std::optional<RestrictionPrediction> prediction;
  std::optional<ThetaParity> parity;
  bool parity_satisfied = true;
  SubsetInGroup restriction;       // D ∩ H pulled back to H
  VerificationReport actual;       // classification of the restriction
  bool regular_pds = false;        // restriction is a regular PDS
  bool k1_matched = false;         // |D ∩ H| is a predicted candidate
  bool delta1_matched = false;     // restriction delta_sq equals pi^2
  bool degenerate = false;         // D ∩ H empty or all of H \ {e}
  bool consistent = false;         // every applicable check passed
};

// Intersects a nontrivial regular PDS with the Hall subgroup of the given
// primes and verifies the predicted parameters against the actual
// classification. A failure on a verified input is reported as an
// inconsistency; it signals an implementation bug.
RestrictionReport restrict_and_verify(const SubsetInGroup& d,
                                      const std::vector<std::uint64_t>& primes);

// Self-contained contradiction trace for a Paley-type PDS of order
// v = p^(2r) * u^2 with p >= 5, r odd, u > 1 coprime to p: restriction to the
// subgroup of order u^2 forces theta = 0, while the parity constraint on
// theta demands (p-1)/2 mod (p-1).
struct NonexistenceCertificate {
  std::uint64_t v = 0;
  std::uint64_t p = 0;
  std::uint64_t r = 0;
  std::uint64_t u = 0;
  std::uint64_t subgroup_order = 0;  // u^2
  std::uint64_t pi = 0;              // = u
  std::int64_t beta1 = 0;            // = -1
  std::int64_t theta_actual = 0;     // = 0
  std::uint64_t k1 = 0;              // (u^2 - 1) / 2
  std::uint64_t theta_required_residue = 0;  // (p-1)/2
  std::uint64_t theta_required_modulus = 0;  // p-1
  std::vector<std::string> steps;
  std::string conclusion;
};

enum class WitnessOutcome { Certificate, NoOffendingPrime, NotApplicableNonsquare };

struct WitnessResult {
  WitnessOutcome outcome = WitnessOutcome::NoOffendingPrime;
  std::optional<NonexistenceCertificate> certificate;
};

// Requires v odd and > 1. Non-square orders are out of reach of this
// argument and report NotApplicableNonsquare.
WitnessResult paley_nonexistence_witness(std::uint64_t v);

// Machine check of every certificate invariant, including re-deriving the
// restriction parameters; returns the list of violations (empty = valid).
std::vector<std::string> certificate_violations(const NonexistenceCertificate& cert);

}  // namespace pdskit

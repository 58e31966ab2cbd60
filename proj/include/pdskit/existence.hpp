#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdskit/pds.hpp"
#include "pdskit/restrict.hpp"

namespace pdskit {

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint64_t exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  std::uint64_t value = 0;
  std::vector<PrimePower> parts;  // primes ascending
};

// Exact factorization by trial division; every listed prime is re-verified.
Factorization factor(std::uint64_t v);

enum class FourthPowerKind { FourthPower, NineTimesFourthPower, Neither };

struct FourthPowerForm {
  FourthPowerKind kind = FourthPowerKind::Neither;
  std::uint64_t n = 0;  // the odd root > 1 when kind != Neither
};

// v = n^4 (all exponents ≡ 0 mod 4) or v = 9 * n^4 (the same after dividing
// by 9, with v/9 > 1); requires v odd and > 1. The two forms are mutually
// exclusive.
FourthPowerForm fourth_power_form(std::uint64_t v);

enum class ExistenceKind {
  ExistsPrimePower,
  ExistsFourthPower,
  ExistsNineFourthPower,
  NotExists,
};

// Whether some abelian group of the given odd order contains a Paley type
// PDS. The verdict reports the first matching clause in the order prime
// power, n^4, 9n^4; all matching witnesses are listed. NotExists on a square
// order carries the restriction contradiction certificate.
struct ExistenceVerdict {
  std::uint64_t v = 0;
  ExistenceKind verdict = ExistenceKind::NotExists;
  std::optional<PrimePower> prime_power;       // with v ≡ 1 (mod 4)
  std::optional<std::uint64_t> fourth_root;
  std::optional<std::uint64_t> nine_fourth_root;
  std::optional<NonexistenceCertificate> certificate;
  std::string reason;
};
ExistenceVerdict classify_order(std::uint64_t v);

enum class FilterOutcome { Consistent, Contradiction, NotApplicable };

struct FilterResult {
  FilterOutcome outcome = FilterOutcome::NotApplicable;
  std::string reason;
};

// Parameter filter for non-square delta_sq: an abelian regular PDS with
// non-square delta_sq must be Paley type on a prime power p^(2s+1) with
// p ≡ 1 (mod 4). Square delta_sq is out of scope and reports NotApplicable.
FilterResult nonsquare_delta_filter(const PdsParameters& params);

}  // namespace pdskit

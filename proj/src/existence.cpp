#include "pdskit/existence.hpp"

#include <stdexcept>

#include "pdskit/numeric.hpp"

namespace pdskit {

Factorization factor(std::uint64_t v) {
  if (v < 2) throw std::invalid_argument("factor: argument must be >= 2");
  Factorization out;
  out.value = v;
  for (auto [p, e] : factor_u64(v)) {
    if (!is_prime_u64(p)) throw std::logic_error("factorization produced a composite part");
    out.parts.push_back(PrimePower{p, e});
  }
  return out;
}

FourthPowerForm fourth_power_form(std::uint64_t v) {
  if (v <= 1 || v % 2 == 0) throw std::invalid_argument("order must be odd and > 1");
  FourthPowerForm out;
  auto parts = factor_u64(v);
  auto root_if_fourth = [](const std::vector<std::pair<std::uint64_t, std::uint64_t>>& ps)
      -> std::optional<std::uint64_t> {
    std::uint64_t n = 1;
    for (auto [p, e] : ps) {
      if (e % 4 != 0) return std::nullopt;
      n *= pow_u64(p, e / 4);
    }
    return n;
  };
  if (auto n = root_if_fourth(parts); n && *n > 1) {
    out.kind = FourthPowerKind::FourthPower;
    out.n = *n;
    return out;
  }
  if (v % 9 == 0 && v / 9 > 1) {
    auto reduced = factor_u64(v / 9);
    if (auto n = root_if_fourth(reduced); n && *n > 1) {
      out.kind = FourthPowerKind::NineTimesFourthPower;
      out.n = *n;
      return out;
    }
  }
  return out;
}

ExistenceVerdict classify_order(std::uint64_t v) {
  if (v <= 1 || v % 2 == 0) throw std::invalid_argument("order must be odd and > 1");
  ExistenceVerdict out;
  out.v = v;
  Factorization fac = factor(v);
  if (fac.parts.size() == 1 && v % 4 == 1)
    out.prime_power = fac.parts.front();
  FourthPowerForm form = fourth_power_form(v);
  if (form.kind == FourthPowerKind::FourthPower) out.fourth_root = form.n;
  if (form.kind == FourthPowerKind::NineTimesFourthPower) out.nine_fourth_root = form.n;

  if (out.prime_power) {
    out.verdict = ExistenceKind::ExistsPrimePower;
    out.reason = "v = " + std::to_string(out.prime_power->prime) + "^" +
                 std::to_string(out.prime_power->exponent) +
                 " ≡ 1 (mod 4): the nonzero squares of GF(v) are a Paley type PDS in (GF(v), +)";
    return out;
  }
  if (out.fourth_root) {
    out.verdict = ExistenceKind::ExistsFourthPower;
    out.reason = "v = " + std::to_string(*out.fourth_root) +
                 "^4 with an odd root > 1: known product constructions reach this order";
    return out;
  }
  if (out.nine_fourth_root) {
    out.verdict = ExistenceKind::ExistsNineFourthPower;
    out.reason = "v = 9 * " + std::to_string(*out.nine_fourth_root) +
                 "^4 with an odd root > 1: known product constructions reach this order";
    return out;
  }
  out.verdict = ExistenceKind::NotExists;
  if (v % 4 == 3) {
    out.reason =
        "v ≡ 3 (mod 4), so the Paley parameter triple ((v-1)/2, (v-5)/4, (v-1)/4) is not integral";
    return out;
  }
  if (!is_perfect_square_u64(v)) {
    out.reason =
        "v is not a square, so delta = sqrt(v) is irrational and the parameters force a prime "
        "power order p^(2s+1) with p ≡ 1 (mod 4); v is not such a prime power";
    return out;
  }
  WitnessResult witness = paley_nonexistence_witness(v);
  if (witness.outcome != WitnessOutcome::Certificate)
    throw std::logic_error("rejected square order without a restriction certificate");
  out.certificate = witness.certificate;
  out.reason = "odd square order, neither a prime power nor n^4 nor 9n^4: the prime " +
               std::to_string(out.certificate->p) +
               " appears to an exponent ≡ 2 (mod 4), and restriction to the complementary Hall "
               "subgroup forces theta = 0 against the required class " +
               std::to_string(out.certificate->theta_required_residue) + " (mod " +
               std::to_string(out.certificate->theta_required_modulus) + ")";
  return out;
}

FilterResult nonsquare_delta_filter(const PdsParameters& params) {
  FilterResult out;
  if (params.delta) {
    out.outcome = FilterOutcome::NotApplicable;
    out.reason = "delta-squared is a perfect square";
    return out;
  }
  if (!is_paley_type(params)) {
    out.outcome = FilterOutcome::Contradiction;
    out.reason = "non-square delta-squared forces Paley type parameters, which these are not";
    return out;
  }
  auto parts = factor_u64(params.v);
  if (parts.size() != 1) {
    out.outcome = FilterOutcome::Contradiction;
    out.reason = "non-square delta-squared forces a prime power order, but v is composite across "
                 "several primes";
    return out;
  }
  auto [p, e] = parts.front();
  if (e % 2 == 0) {
    out.outcome = FilterOutcome::Contradiction;
    out.reason = "the prime power order must have odd exponent 2s + 1";
    return out;
  }
  if (p % 4 != 1) {
    out.outcome = FilterOutcome::Contradiction;
    out.reason = "the prime must be ≡ 1 (mod 4)";
    return out;
  }
  out.outcome = FilterOutcome::Consistent;
  out.reason = "Paley type on v = " + std::to_string(p) + "^" + std::to_string(e) +
               " with p ≡ 1 (mod 4)";
  return out;
}

}  // namespace pdskit

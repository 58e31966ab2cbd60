#include <doctest.h>

#include "pdskit/construct.hpp"
#include "pdskit/existence.hpp"
#include "pdskit/numeric.hpp"

using namespace pdskit;

TEST_CASE("factorization") {
  Factorization f = factor(225);
  REQUIRE(f.parts.size() == 2);
  CHECK(f.parts[0] == PrimePower{3, 2});
  CHECK(f.parts[1] == PrimePower{5, 2});

  f = factor(50625);
  REQUIRE(f.parts.size() == 2);
  CHECK(f.parts[0] == PrimePower{3, 4});
  CHECK(f.parts[1] == PrimePower{5, 4});

  f = factor(13);
  REQUIRE(f.parts.size() == 1);
  CHECK(f.parts[0] == PrimePower{13, 1});

  CHECK_THROWS_AS(factor(1), std::invalid_argument);

  // the product reconstructs the value
  for (std::uint64_t v : {2ull, 97ull, 1024ull, 2310ull, 1000003ull}) {
    std::uint64_t prod = 1;
    for (const PrimePower& pp : factor(v).parts) prod *= pow_u64(pp.prime, pp.exponent);
    CHECK(prod == v);
  }
}

TEST_CASE("fourth power forms") {
  FourthPowerForm form = fourth_power_form(50625);
  CHECK(form.kind == FourthPowerKind::FourthPower);
  CHECK(form.n == 15);

  form = fourth_power_form(729);  // 3^6 = 9 * 3^4
  CHECK(form.kind == FourthPowerKind::NineTimesFourthPower);
  CHECK(form.n == 3);

  CHECK(fourth_power_form(225).kind == FourthPowerKind::Neither);
  CHECK(fourth_power_form(81).kind == FourthPowerKind::FourthPower);
  CHECK(fourth_power_form(9).kind == FourthPowerKind::Neither);  // root would be 1
  CHECK_THROWS_AS(fourth_power_form(8), std::invalid_argument);
  CHECK_THROWS_AS(fourth_power_form(1), std::invalid_argument);
}

TEST_CASE("order classification examples") {
  ExistenceVerdict verdict = classify_order(5);
  CHECK(verdict.verdict == ExistenceKind::ExistsPrimePower);
  REQUIRE(verdict.prime_power.has_value());
  CHECK(*verdict.prime_power == PrimePower{5, 1});

  verdict = classify_order(225);
  CHECK(verdict.verdict == ExistenceKind::NotExists);
  REQUIRE(verdict.certificate.has_value());
  CHECK(certificate_violations(*verdict.certificate).empty());

  verdict = classify_order(50625);
  CHECK(verdict.verdict == ExistenceKind::ExistsFourthPower);
  CHECK(verdict.fourth_root == 15);

  CHECK_THROWS_AS(classify_order(4), std::invalid_argument);
  CHECK_THROWS_AS(classify_order(1), std::invalid_argument);
}

TEST_CASE("classification lists every matching witness") {
  // 81 = 3^4 is both a prime power ≡ 1 (mod 4) and a fourth power
  ExistenceVerdict verdict = classify_order(81);
  CHECK(verdict.verdict == ExistenceKind::ExistsPrimePower);
  CHECK(verdict.prime_power == PrimePower{3, 4});
  CHECK(verdict.fourth_root == 3);

  // 729 = 3^6 ≡ 1 (mod 4) is also 9 * 3^4
  verdict = classify_order(729);
  CHECK(verdict.verdict == ExistenceKind::ExistsPrimePower);
  CHECK(verdict.nine_fourth_root == 3);

  verdict = classify_order(2025);  // 45^2 = 3^4 * 5^2
  CHECK(verdict.verdict == ExistenceKind::NotExists);
  REQUIRE(verdict.certificate.has_value());
  CHECK(verdict.certificate->p == 5);
  CHECK(verdict.certificate->u == 9);
}

TEST_CASE("classifier is the plain restatement of the two clauses") {
  for (std::uint64_t v = 3; v <= 100000; v += 2) {
    ExistenceVerdict verdict = classify_order(v);
    auto parts = factor_u64(v);
    bool prime_power_1mod4 = parts.size() == 1 && v % 4 == 1;
    bool fourth = fourth_power_form(v).kind != FourthPowerKind::Neither;
    bool exists = verdict.verdict != ExistenceKind::NotExists;
    CAPTURE(v);
    CHECK(exists == (prime_power_1mod4 || fourth));
  }
}

TEST_CASE("every rejected odd square order carries a certificate") {
  for (std::uint64_t s = 3; s * s <= 10000; s += 2) {
    std::uint64_t v = s * s;
    ExistenceVerdict verdict = classify_order(v);
    if (verdict.verdict != ExistenceKind::NotExists) continue;
    CAPTURE(v);
    REQUIRE(verdict.certificate.has_value());
    CHECK(certificate_violations(*verdict.certificate).empty());
    CHECK(paley_nonexistence_witness(v).outcome == WitnessOutcome::Certificate);
  }
}

TEST_CASE("witness implies the classifier rejects") {
  for (std::uint64_t v = 3; v <= 20000; v += 2) {
    if (!is_perfect_square_u64(v)) continue;
    if (paley_nonexistence_witness(v).outcome == WitnessOutcome::Certificate) {
      CAPTURE(v);
      CHECK(classify_order(v).verdict == ExistenceKind::NotExists);
    }
  }
}

TEST_CASE("prime power existence is constructive at small scale") {
  for (std::uint64_t v = 5; v <= 400; v += 4) {
    ExistenceVerdict verdict = classify_order(v);
    if (verdict.verdict != ExistenceKind::ExistsPrimePower) continue;
    SubsetInGroup d = paley(v);
    VerificationReport rep = classify(d);
    REQUIRE(rep.is_pds);
    CHECK(is_paley_type(*rep.params));
  }
}

TEST_CASE("non-square delta parameter filter") {
  FilterResult res = nonsquare_delta_filter(make_parameters(13, 6, 2, 3));
  CHECK(res.outcome == FilterOutcome::Consistent);

  res = nonsquare_delta_filter(make_parameters(33, 16, 7, 8));
  CHECK(res.outcome == FilterOutcome::Contradiction);  // 33 = 3 * 11

  res = nonsquare_delta_filter(make_parameters(225, 28, 13, 2));
  CHECK(res.outcome == FilterOutcome::NotApplicable);  // delta_sq = 225 is square

  // Paley shape with a prime ≡ 1 (mod 4) to an odd power
  res = nonsquare_delta_filter(paley_parameters(125));
  CHECK(res.outcome == FilterOutcome::Consistent);
  // non-Paley shape
  res = nonsquare_delta_filter(make_parameters(13, 4, 0, 1));
  CHECK(res.outcome == FilterOutcome::Contradiction);
}

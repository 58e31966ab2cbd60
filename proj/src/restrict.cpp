#include "pdskit/restrict.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pdskit/numeric.hpp"

namespace pdskit {

namespace {

using i128 = __int128;

std::uint64_t isqrt_u128(i128 n) {
  if (n < 0) throw std::invalid_argument("isqrt of negative value");
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && i128(r) * r > n) --r;
  while (i128(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<std::uint64_t> k1_from_discriminant(i128 sum, i128 disc, std::uint64_t h) {
  std::vector<std::uint64_t> out;
  if (disc < 0) return out;
  std::uint64_t s = isqrt_u128(disc);
  if (i128(s) * s != disc) return out;  // irrational root: both branches dropped
  for (int sign : {+1, -1}) {
    i128 num = sum + i128(sign) * i128(s);
    if (num < 0 || num % 2 != 0) continue;
    i128 k1 = num / 2;
    if (k1 <= i128(h) - 1) out.push_back(static_cast<std::uint64_t>(k1));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

RestrictionPrediction predict_restriction(const PdsParameters& params,
                                          std::uint64_t subgroup_order) {
  const std::uint64_t v = params.v;
  const std::uint64_t h = subgroup_order;
  if (h == 0) throw std::invalid_argument("subgroup order must be positive");
  if (!params.delta)
    throw std::domain_error("delta-squared is not a perfect square; restriction is inapplicable");
  if (v % h != 0) throw std::domain_error("subgroup order does not divide the group order");
  if (std::gcd(h, v / h) != 1)
    throw std::domain_error("subgroup order is not coprime to its index");
  if ((v / h) % 2 == 0) throw std::domain_error("the index |G|/|H| is not odd");

  RestrictionPrediction pred;
  pred.subgroup_order = h;
  pred.pi = std::gcd(h, *params.delta);
  const auto pi = static_cast<std::int64_t>(pred.pi);
  // unique theta with (2*theta - 1)*pi <= beta < (2*theta + 1)*pi; the
  // left bound is inclusive, so this is exactly floor((beta + pi) / (2*pi))
  pred.theta = floor_div_i64(params.beta + pi, 2 * pi);
  pred.beta1 = params.beta - 2 * pred.theta * pi;
  pred.delta1_sq = pred.pi * pred.pi;

  i128 sum = i128(h) + pred.beta1;
  i128 disc = sum * sum - (i128(pred.delta1_sq) - i128(pred.beta1) * pred.beta1) * (i128(h) - 1);
  pred.k1_candidates = k1_from_discriminant(sum, disc, h);

  if (pred.delta1_sq == h) {
    // simplified form [h + beta1 +/- (beta1 + 1)*sqrt(h)] / 2, cross-checked
    std::vector<std::uint64_t> simple;
    i128 step = i128(pred.beta1 + 1) * pi;
    for (int sign : {+1, -1}) {
      i128 num = sum + i128(sign) * step;
      if (num < 0 || num % 2 != 0) continue;
      i128 k1 = num / 2;
      if (k1 <= i128(h) - 1) simple.push_back(static_cast<std::uint64_t>(k1));
    }
    std::sort(simple.begin(), simple.end());
    simple.erase(std::unique(simple.begin(), simple.end()), simple.end());
    if (simple != pred.k1_candidates)
      throw std::logic_error("simplified and general restriction size formulas disagree");
  }
  return pred;
}

std::optional<ThetaParity> theta_parity_requirement(std::uint64_t delta, std::uint64_t pi) {
  if (delta == 0 || pi == 0) throw std::invalid_argument("delta and pi must be positive");
  if (delta % pi != 0) throw std::invalid_argument("pi must divide delta");
  if (pi == 1) return std::nullopt;
  std::uint64_t ratio = delta / pi;
  if (ratio == 1) return std::nullopt;
  auto parts = factor_u64(ratio);
  if (parts.size() != 1) return std::nullopt;
  auto [p, r] = parts.front();
  if (p < 5) return std::nullopt;
  if (pi % p == 0) return std::nullopt;  // pi must be coprime to p
  ThetaParity out;
  out.p = p;
  out.r = r;
  out.modulus = p - 1;
  out.residue = (r % 2 == 0) ? 0 : (p - 1) / 2;
  return out;
}

RestrictionReport restrict_and_verify(const SubsetInGroup& d,
                                      const std::vector<std::uint64_t>& primes) {
  VerificationReport input_rep = classify(d);
  if (!input_rep.is_pds)
    throw std::domain_error("subset is not a partial difference set");
  if (!is_regular(d))
    throw std::domain_error("subset is not regular (identity present or not negation-closed)");
  if (is_trivial(d))
    throw std::domain_error("subset is a trivial PDS; the restriction needs a nontrivial one");
  const PdsParameters params = *input_rep.params;

  HallSubgroup hall = hall_subgroup(d.group, primes);
  const std::uint64_t h = hall.subgroup.order;
  if ((params.v / h) % 2 == 0) throw std::domain_error("the index |G|/|H| is not odd");

  RestrictionReport rep;
  rep.input_params = params;
  rep.hall_primes = primes;
  rep.subgroup_order = h;

  const bool full_subgroup = h == params.v;
  if (params.delta) {
    rep.prediction = predict_restriction(params, h);
  } else if (!full_subgroup) {
    throw std::domain_error("delta-squared is not a perfect square; restriction is inapplicable");
  }
  // with H = G and non-square delta the intersection is just D itself, so the
  // report is still meaningful without a prediction

  rep.restriction.group = hall.subgroup;
  rep.restriction.membership.assign(h, false);
  for (std::uint64_t hr = 0; hr < h; ++hr) {
    GroupElement he = unrank(hall.subgroup, hr);
    if (d.membership[rank(d.group, hall.embed(he))]) rep.restriction.membership[hr] = true;
  }

  rep.actual = classify(rep.restriction);
  const std::uint64_t actual_k = rep.restriction.size();
  rep.degenerate = actual_k == 0 || actual_k == h - 1;
  rep.regular_pds = rep.actual.is_pds && is_regular(rep.restriction);
  if (rep.prediction) {
    const auto& cands = rep.prediction->k1_candidates;
    rep.k1_matched = std::find(cands.begin(), cands.end(), actual_k) != cands.end();
    // the parameters of a degenerate restriction are not pinned down, so the
    // delta comparison only applies to proper nonempty restrictions
    rep.delta1_matched =
        rep.degenerate ||
        (rep.actual.is_pds && rep.actual.params->delta_sq == rep.prediction->delta1_sq);
    rep.parity = theta_parity_requirement(*params.delta, rep.prediction->pi);
    if (rep.parity && !rep.degenerate) {
      auto m = static_cast<std::int64_t>(rep.parity->modulus);
      std::int64_t got = ((rep.prediction->theta % m) + m) % m;
      rep.parity_satisfied = got == static_cast<std::int64_t>(rep.parity->residue);
    }
  } else {
    rep.k1_matched = actual_k == params.k;
    rep.delta1_matched = true;
  }
  rep.consistent = rep.regular_pds && rep.k1_matched && rep.delta1_matched && rep.parity_satisfied;
  return rep;
}

WitnessResult paley_nonexistence_witness(std::uint64_t v) {
  if (v <= 1 || v % 2 == 0) throw std::invalid_argument("order must be odd and > 1");
  WitnessResult out;
  if (!is_perfect_square_u64(v)) {
    out.outcome = WitnessOutcome::NotApplicableNonsquare;
    return out;
  }
  for (auto [p, e] : factor_u64(v)) {
    if (p < 5) continue;
    std::uint64_t r = e / 2;  // e is even because v is a square
    if (r % 2 == 0) continue;
    std::uint64_t usq = v / pow_u64(p, e);
    if (usq == 1) continue;
    std::uint64_t u = isqrt_u64(usq);

    // run the actual engine so the certificate replays real computations
    PdsParameters params = paley_parameters(v);
    RestrictionPrediction pred = predict_restriction(params, usq);
    std::optional<ThetaParity> parity = theta_parity_requirement(*params.delta, pred.pi);
    if (pred.pi != u || pred.theta != 0 || pred.beta1 != -1 ||
        pred.k1_candidates != std::vector<std::uint64_t>{(usq - 1) / 2} || !parity ||
        parity->residue == 0)
      throw std::logic_error("nonexistence engine self-check failed");

    NonexistenceCertificate cert;
    cert.v = v;
    cert.p = p;
    cert.r = r;
    cert.u = u;
    cert.subgroup_order = usq;
    cert.pi = pred.pi;
    cert.beta1 = pred.beta1;
    cert.theta_actual = pred.theta;
    cert.k1 = pred.k1_candidates.front();
    cert.theta_required_residue = parity->residue;
    cert.theta_required_modulus = parity->modulus;
    const std::string sv = std::to_string(v);
    const std::string sp = std::to_string(p);
    const std::string su = std::to_string(u);
    cert.steps = {
        "v = " + sv + " = " + sp + "^" + std::to_string(2 * r) + " * " + su +
            "^2 with gcd(" + sp + ", " + su + ") = 1; a Paley type PDS of order " + sv +
            " has parameters (" + sv + ", " + std::to_string(params.k) + ", " +
            std::to_string(params.lambda) + ", " + std::to_string(params.mu) +
            "), beta = -1 and delta = " + std::to_string(*params.delta) + ".",
        "Take the subgroup H of order u^2 = " + std::to_string(usq) + "; its index " +
            std::to_string(v / usq) + " is odd and coprime to |H|.",
        "pi = gcd(" + std::to_string(usq) + ", " + std::to_string(*params.delta) + ") = " + su +
            "; theta = 0 is the unique integer with -" + su + " <= beta = -1 < " + su +
            ", so beta1 = -1.",
        "delta1^2 = pi^2 = " + std::to_string(usq) + " = |H|, so |D ∩ H| = k1 = (" +
            std::to_string(usq) + " - 1)/2 = " + std::to_string(cert.k1) +
            "; the intersection is nonempty and is not all of H \\ {e}.",
        "delta = " + sp + "^" + std::to_string(r) + " * " + su + " with " + sp +
            " >= 5 prime, r = " + std::to_string(r) + " odd and pi coprime to " + sp +
            ", so theta ≡ " + std::to_string(cert.theta_required_residue) + " (mod " +
            std::to_string(cert.theta_required_modulus) + ") is forced.",
        "theta = 0 ≢ " + std::to_string(cert.theta_required_residue) + " (mod " +
            std::to_string(cert.theta_required_modulus) + "): contradiction."};
    cert.conclusion = "no abelian group of order " + sv + " contains a Paley type PDS";
    out.outcome = WitnessOutcome::Certificate;
    out.certificate = std::move(cert);
    return out;
  }
  out.outcome = WitnessOutcome::NoOffendingPrime;
  return out;
}

std::vector<std::string> certificate_violations(const NonexistenceCertificate& cert) {
  std::vector<std::string> bad;
  auto expect = [&](bool cond, const std::string& what) {
    if (!cond) bad.push_back(what);
  };
  expect(cert.p >= 5 && is_prime_u64(cert.p), "p must be a prime >= 5");
  expect(cert.r >= 1 && cert.r % 2 == 1, "r must be a positive odd integer");
  expect(cert.u > 1 && cert.u % 2 == 1, "u must be odd and > 1");
  expect(cert.u % cert.p != 0, "u must be coprime to p");
  std::uint64_t expected_v = 0;
  bool v_ok = true;
  try {
    expected_v = pow_u64(cert.p, 2 * cert.r) * cert.u * cert.u;
  } catch (const std::overflow_error&) {
    v_ok = false;
  }
  expect(v_ok && cert.v == expected_v, "v must equal p^(2r) * u^2");
  expect(cert.subgroup_order == cert.u * cert.u, "subgroup order must be u^2");
  expect(cert.pi == cert.u, "pi must equal u");
  expect(cert.beta1 == -1, "beta1 must be -1");
  expect(cert.theta_actual == 0, "theta must be 0");
  expect(cert.k1 == (cert.u * cert.u - 1) / 2, "k1 must be (u^2 - 1)/2");
  expect(cert.k1 > 0, "the restriction must be nonempty");
  expect(cert.k1 < cert.u * cert.u - 1, "the restriction must be a proper part of H \\ {e}");
  expect(cert.theta_required_modulus == cert.p - 1, "theta modulus must be p - 1");
  expect(cert.theta_required_residue == (cert.p - 1) / 2, "theta residue must be (p-1)/2");
  expect(cert.theta_required_residue % cert.theta_required_modulus != 0,
         "the required theta class must exclude 0");
  if (!bad.empty()) return bad;
  // replay the derivation through the engine
  try {
    PdsParameters params = paley_parameters(cert.v);
    RestrictionPrediction pred = predict_restriction(params, cert.subgroup_order);
    expect(pred.pi == cert.pi && pred.theta == cert.theta_actual && pred.beta1 == cert.beta1,
           "restriction parameters do not replay");
    expect(pred.k1_candidates == std::vector<std::uint64_t>{cert.k1},
           "k1 does not replay uniquely");
    auto parity = theta_parity_requirement(*params.delta, pred.pi);
    expect(parity && parity->residue == cert.theta_required_residue &&
               parity->modulus == cert.theta_required_modulus,
           "theta parity requirement does not replay");
  } catch (const std::exception& e) {
    bad.push_back(std::string("replay failed: ") + e.what());
  }
  return bad;
}

}  // namespace pdskit

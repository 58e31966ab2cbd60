#include "pdskit/json_io.hpp"

#include <json.hpp>

#include "pdskit/construct.hpp"
#include "pdskit/field.hpp"
#include "pdskit/numeric.hpp"

namespace pdskit {

namespace {

using nlohmann::json;

json params_json(const PdsParameters& p) {
  json out;
  out["v"] = p.v;
  out["k"] = p.k;
  out["lambda"] = p.lambda;
  out["mu"] = p.mu;
  out["beta"] = p.beta;
  out["delta_sq"] = p.delta_sq;
  if (p.delta) out["delta"] = *p.delta;
  return out;
}

json ranks_json(const SubsetInGroup& d) { return json(d.member_ranks()); }

const char* character_status_name(CharacterStatus s) {
  switch (s) {
    case CharacterStatus::Pass:
      return "pass";
    case CharacterStatus::Fail:
      return "fail";
    default:
      return "not_applicable";
  }
}

json certificate_json(const NonexistenceCertificate& cert) {
  json out;
  out["v"] = cert.v;
  out["p"] = cert.p;
  out["r"] = cert.r;
  out["u"] = cert.u;
  out["subgroup_order"] = cert.subgroup_order;
  out["pi"] = cert.pi;
  out["beta1"] = cert.beta1;
  out["theta_actual"] = cert.theta_actual;
  out["k1"] = cert.k1;
  out["theta_required_residue"] = cert.theta_required_residue;
  out["theta_required_modulus"] = cert.theta_required_modulus;
  out["steps"] = cert.steps;
  out["conclusion"] = cert.conclusion;
  return out;
}

}  // namespace

std::string verify_json(const SubsetInGroup& d) {
  VerificationReport rep = classify(d);
  const bool regular = is_regular(d);
  const bool trivial = is_trivial(d);
  PdsParameters probe = rep.is_pds ? *rep.params : candidate_parameters(d);
  CharacterCheck character = character_verify(d, probe);

  json out;
  out["group"] = group_descriptor(d.group);
  out["ranks"] = ranks_json(d);
  out["v"] = d.group.order;
  out["k"] = d.size();
  out["is_pds"] = rep.is_pds;
  out["regular"] = regular;
  out["trivial"] = trivial;
  out["character_check"] = character_status_name(character.status);
  out["character_method"] = character.status == CharacterStatus::NotApplicable
                                ? "none"
                                : (character.approximate ? "approximate" : "exact");
  if (rep.is_pds) {
    const PdsParameters& p = *rep.params;
    out["lambda"] = p.lambda;
    out["mu"] = p.mu;
    out["beta"] = p.beta;
    out["delta_sq"] = p.delta_sq;
    if (p.delta) out["delta"] = *p.delta;
    out["paley_type"] = is_paley_type(p);
  } else {
    const Counterexample& c = *rep.counterexample;
    out["counterexample"] = {{"rank", c.element_rank},
                             {"count", c.count},
                             {"expected", c.expected},
                             {"in_subset", c.in_subset}};
  }
  return out.dump();
}

std::string subset_params_json(const SubsetInGroup& d) {
  VerificationReport rep = classify(d);
  if (!rep.is_pds) throw std::logic_error("construction did not classify as a PDS");
  json out;
  out["group"] = group_descriptor(d.group);
  out["ranks"] = ranks_json(d);
  out["params"] = params_json(*rep.params);
  return out.dump();
}

std::string paley_construct_json(std::uint64_t q) {
  SubsetInGroup d = paley(q);
  auto parts = factor_u64(q);
  FiniteField f = make_field(parts.front().first, static_cast<std::uint32_t>(parts.front().second));
  VerificationReport rep = classify(d);
  if (!rep.is_pds) throw std::logic_error("Paley subset did not classify as a PDS");
  json out;
  out["group"] = group_descriptor(d.group);
  out["ranks"] = ranks_json(d);
  out["params"] = params_json(*rep.params);
  out["field"] = {{"p", f.p}, {"m", f.m}, {"modulus", f.modulus}};
  return out.dump();
}

std::string restrict_report_json(const RestrictionReport& report) {
  json out;
  out["group"] = group_descriptor(report.restriction.group);  // the subgroup H
  out["hall_primes"] = report.hall_primes;
  out["subgroup_order"] = report.subgroup_order;
  out["input_params"] = params_json(report.input_params);
  if (report.prediction) {
    const RestrictionPrediction& p = *report.prediction;
    out["prediction"] = {{"pi", p.pi},
                         {"theta", p.theta},
                         {"beta1", p.beta1},
                         {"delta1_sq", p.delta1_sq},
                         {"k1_candidates", p.k1_candidates}};
  } else {
    out["prediction"] = nullptr;
  }
  if (report.parity) {
    out["parity"] = {{"p", report.parity->p},
                     {"r", report.parity->r},
                     {"residue", report.parity->residue},
                     {"modulus", report.parity->modulus},
                     {"satisfied", report.parity_satisfied}};
  } else {
    out["parity"] = nullptr;
  }
  out["restriction_ranks"] = ranks_json(report.restriction);
  out["actual_k"] = report.restriction.size();
  if (report.actual.is_pds) {
    out["actual_params"] = params_json(*report.actual.params);
  } else {
    out["actual_params"] = nullptr;
  }
  out["checks"] = {{"regular_pds", report.regular_pds},
                   {"k1_matched", report.k1_matched},
                   {"delta1_matched", report.delta1_matched}};
  out["degenerate"] = report.degenerate;
  out["consistent"] = report.consistent;
  return out.dump();
}

std::string nonexistence_json(std::uint64_t v) {
  WitnessResult res = paley_nonexistence_witness(v);
  json out;
  out["v"] = v;
  switch (res.outcome) {
    case WitnessOutcome::Certificate:
      out["status"] = "certificate";
      out["certificate"] = certificate_json(*res.certificate);
      break;
    case WitnessOutcome::NoOffendingPrime:
      out["status"] = "no_offending_prime";
      out["certificate"] = nullptr;
      break;
    case WitnessOutcome::NotApplicableNonsquare:
      out["status"] = "not_applicable_nonsquare";
      out["certificate"] = nullptr;
      break;
  }
  return out.dump();
}

std::string existence_verdict_json(const ExistenceVerdict& verdict) {
  json out;
  out["v"] = verdict.v;
  switch (verdict.verdict) {
    case ExistenceKind::ExistsPrimePower:
      out["verdict"] = "exists_prime_power";
      break;
    case ExistenceKind::ExistsFourthPower:
      out["verdict"] = "exists_fourth_power";
      break;
    case ExistenceKind::ExistsNineFourthPower:
      out["verdict"] = "exists_nine_fourth_power";
      break;
    case ExistenceKind::NotExists:
      out["verdict"] = "not_exists";
      break;
  }
  out["prime_power"] = verdict.prime_power
                           ? json{{"p", verdict.prime_power->prime},
                                  {"m", verdict.prime_power->exponent}}
                           : json(nullptr);
  out["fourth_root"] = verdict.fourth_root ? json(*verdict.fourth_root) : json(nullptr);
  out["nine_fourth_root"] =
      verdict.nine_fourth_root ? json(*verdict.nine_fourth_root) : json(nullptr);
  out["certificate"] =
      verdict.certificate ? certificate_json(*verdict.certificate) : json(nullptr);
  out["reason"] = verdict.reason;
  return out.dump();
}

std::string classify_order_json(std::uint64_t v) {
  return existence_verdict_json(classify_order(v));
}

std::string search_summary_json(const AbelianGroup& g, std::uint64_t found) {
  json out;
  out["group"] = group_descriptor(g);
  out["found"] = found;
  return out.dump();
}

}  // namespace pdskit

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdskit/group.hpp"

namespace pdskit {

// A subset of a group as a membership bit-vector indexed by element rank.
struct SubsetInGroup {
  AbelianGroup group;
  std::vector<bool> membership;

  std::uint64_t size() const;
  std::vector<std::uint64_t> member_ranks() const;
  friend bool operator==(const SubsetInGroup&, const SubsetInGroup&) = default;
};

SubsetInGroup make_subset(const AbelianGroup& g, const std::vector<std::uint64_t>& ranks);

// Text form: "<group descriptor> : [rank,rank,...]", whitespace-insensitive.
// Ranks refer to the canonical primary form of the group.
SubsetInGroup parse_subset(const std::string& text);
std::string subset_text(const SubsetInGroup& d);

// (v, k, lambda, mu) with the derived quantities beta = lambda - mu,
// delta_sq = beta^2 + 4(k - mu), and delta = sqrt(delta_sq) when integral.
struct PdsParameters {
  std::uint64_t v = 0;
  std::uint64_t k = 0;
  std::uint64_t lambda = 0;
  std::uint64_t mu = 0;
  std::int64_t beta = 0;
  std::uint64_t delta_sq = 0;
  std::optional<std::uint64_t> delta;

  friend bool operator==(const PdsParameters&, const PdsParameters&) = default;
};
PdsParameters make_parameters(std::uint64_t v, std::uint64_t k, std::uint64_t lambda,
                              std::uint64_t mu);

// The Paley parameter tuple (v, (v-1)/2, (v-5)/4, (v-1)/4); requires
// v ≡ 1 (mod 4) and v >= 5.
PdsParameters paley_parameters(std::uint64_t v);
bool is_paley_type(const PdsParameters& params);

// count[x] = #{(g,h) : g,h in D, g != h, g - h = x}, indexed by rank.
// count[0] (the identity) is always 0.
std::vector<std::uint64_t> difference_counts(const SubsetInGroup& d);

struct Counterexample {
  std::uint64_t element_rank = 0;
  std::uint64_t count = 0;
  std::uint64_t expected = 0;
  bool in_subset = false;
};

// Exactly one of params / counterexample is set.
struct VerificationReport {
  bool is_pds = false;
  std::optional<PdsParameters> params;
  std::optional<Counterexample> counterexample;
};

// Difference-count classification. Counts must be constant on D \ {e} and on
// (G \ D) \ {e}; an empty class imposes no constraint and reports 0. When D
// contains the identity, class membership of a difference element is still
// decided by the membership bit, per the definition.
VerificationReport classify(const SubsetInGroup& d);

// The (lambda, mu) a classification would lock in (first element of each
// class in rank order), regardless of whether the counts are constant.
PdsParameters candidate_parameters(const SubsetInGroup& d);

// Negation-closed and identity-free.
bool is_regular(const SubsetInGroup& d);

// D ∪ {e} or G \ D is a subgroup (exhaustive closure check).
bool is_trivial(const SubsetInGroup& d);

enum class CharacterMethod { Auto, Exact, Approximate };
enum class CharacterStatus { Pass, Fail, NotApplicable };

struct CharacterCheck {
  CharacterStatus status = CharacterStatus::NotApplicable;
  bool approximate = false;  // true when the floating-point path decided
  std::string note;
  std::uint64_t failing_character = 0;  // character rank when status == Fail
};

// Two-eigenvalue cross-check, independent of difference counting: every
// nontrivial character sum over D must equal (beta + delta)/2 or
// (beta - delta)/2. Applicable only to regular subsets with square delta_sq.
// The exact path reduces the sum in Z[x]/(Phi_n) with integer arithmetic; the
// approximate path uses complex doubles with tolerance 1e-6.
CharacterCheck character_verify(const SubsetInGroup& d, const PdsParameters& params,
                                CharacterMethod method = CharacterMethod::Auto);

}  // namespace pdskit

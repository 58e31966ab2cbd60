#pragma once

#include <cstdint>
#include <vector>

#include "pdskit/pds.hpp"

namespace pdskit {

// Running difference counts over a growing selection of negation pairs
// {x, -x}. Counts only grow along a branch, so cutting once any count
// exceeds the cap never discards a completable Paley candidate
// (max(lambda, mu) = (v-1)/4 for the target parameters).
class PairSearchState {
 public:
  PairSearchState(const AbelianGroup& g, std::uint64_t cap);

  // Representatives min(rank x, rank -x) of the (v-1)/2 negation pairs,
  // ascending; the group order must be odd.
  const std::vector<std::uint64_t>& pair_reps() const { return reps_; }

  void push_pair(std::size_t pair_index);
  void pop_pair();
  std::size_t depth() const { return selected_.size() / 2; }
  bool over_cap() const { return over_ > 0; }
  const std::vector<std::uint32_t>& counts() const { return counts_; }

 private:
  void bump(std::uint64_t diff_rank, int delta);

  std::uint64_t order_ = 0;
  std::uint64_t cap_ = 0;
  std::vector<std::uint32_t> diff_;       // rank of a - b at [a * order + b]
  std::vector<std::uint64_t> reps_;
  std::vector<std::uint64_t> reps_neg_;   // rank of -reps_[i]
  std::vector<std::uint64_t> selected_;   // chosen elements, two per pair
  std::vector<std::size_t> chosen_;       // chosen pair indices
  std::vector<std::uint32_t> counts_;
  std::uint64_t over_ = 0;                // number of counts above cap_
};

struct SearchOptions {
  bool prune = true;
  std::uint64_t max_results = 0;  // 0 = unlimited
  std::uint64_t order_bound = 0;  // 0 = default: 121 pruned, 49 exhaustive
  unsigned threads = 1;
};

// Enumerates the unions of (v-1)/4 negation pairs (regularity is structural
// for odd order), fully verifies every candidate through classify, and
// returns the Paley type PDS found, ascending in rank-vector order. Output
// is byte-identical across thread counts.
std::vector<SubsetInGroup> exhaustive_paley_search(const AbelianGroup& g,
                                                   const SearchOptions& options = {});

}  // namespace pdskit

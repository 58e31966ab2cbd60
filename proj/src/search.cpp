#include "pdskit/search.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace pdskit {

namespace {

constexpr std::uint64_t kDefaultPrunedBound = 121;
constexpr std::uint64_t kDefaultExhaustiveBound = 49;

}  // namespace

PairSearchState::PairSearchState(const AbelianGroup& g, std::uint64_t cap)
    : order_(g.order), cap_(cap) {
  if (g.order % 2 == 0) throw std::invalid_argument("pair search needs an odd group order");
  diff_.resize(g.order * g.order);
  std::vector<GroupElement> all;
  all.reserve(g.order);
  for (const GroupElement& e : elements(g)) all.push_back(e);
  for (std::uint64_t a = 0; a < g.order; ++a)
    for (std::uint64_t b = 0; b < g.order; ++b)
      diff_[a * g.order + b] = static_cast<std::uint32_t>(rank(g, sub(g, all[a], all[b])));
  for (std::uint64_t r = 1; r < g.order; ++r) {
    std::uint64_t nr = diff_[0 * g.order + r];  // rank of -r
    if (r < nr) {
      reps_.push_back(r);
      reps_neg_.push_back(nr);
    }
  }
  counts_.assign(g.order, 0);
}

void PairSearchState::bump(std::uint64_t diff_rank, int delta) {
  std::uint32_t& c = counts_[diff_rank];
  if (delta > 0) {
    if (++c == cap_ + 1) ++over_;
  } else {
    if (c-- == cap_ + 1) --over_;
  }
}

void PairSearchState::push_pair(std::size_t pair_index) {
  const std::uint64_t x = reps_[pair_index];
  const std::uint64_t y = reps_neg_[pair_index];
  for (std::uint64_t z : selected_) {
    bump(diff_[x * order_ + z], +1);
    bump(diff_[z * order_ + x], +1);
    bump(diff_[y * order_ + z], +1);
    bump(diff_[z * order_ + y], +1);
  }
  bump(diff_[x * order_ + y], +1);
  bump(diff_[y * order_ + x], +1);
  selected_.push_back(x);
  selected_.push_back(y);
  chosen_.push_back(pair_index);
}

void PairSearchState::pop_pair() {
  if (chosen_.empty()) throw std::logic_error("pop on an empty pair selection");
  const std::size_t pair_index = chosen_.back();
  chosen_.pop_back();
  selected_.pop_back();
  selected_.pop_back();
  const std::uint64_t x = reps_[pair_index];
  const std::uint64_t y = reps_neg_[pair_index];
  bump(diff_[x * order_ + y], -1);
  bump(diff_[y * order_ + x], -1);
  for (std::uint64_t z : selected_) {
    bump(diff_[x * order_ + z], -1);
    bump(diff_[z * order_ + x], -1);
    bump(diff_[y * order_ + z], -1);
    bump(diff_[z * order_ + y], -1);
  }
}

namespace {

struct SearchContext {
  const AbelianGroup* group;
  std::uint64_t target;  // (v-1)/4 pairs
  std::uint64_t cap;     // (v-1)/4
  bool prune;
  std::uint64_t max_results;  // 0 = unlimited; only honored sequentially
};

// Candidate from the chosen pair indices, verified through classify.
void emit_leaf(const SearchContext& ctx, const PairSearchState& state,
               const std::vector<std::size_t>& chosen, std::vector<SubsetInGroup>& out) {
  SubsetInGroup d;
  d.group = *ctx.group;
  d.membership.assign(ctx.group->order, false);
  for (std::size_t idx : chosen) {
    d.membership[state.pair_reps()[idx]] = true;
    GroupElement e = unrank(*ctx.group, state.pair_reps()[idx]);
    d.membership[rank(*ctx.group, neg(*ctx.group, e))] = true;
  }
  VerificationReport rep = classify(d);
  if (rep.is_pds && is_paley_type(*rep.params) && is_regular(d)) out.push_back(std::move(d));
}

void dfs(const SearchContext& ctx, PairSearchState& state, std::vector<std::size_t>& chosen,
         std::size_t start, std::vector<SubsetInGroup>& out) {
  if (ctx.max_results && out.size() >= ctx.max_results) return;
  if (chosen.size() == ctx.target) {
    emit_leaf(ctx, state, chosen, out);
    return;
  }
  const std::size_t npairs = state.pair_reps().size();
  const std::size_t need = ctx.target - chosen.size();
  for (std::size_t i = start; i + need <= npairs; ++i) {
    state.push_pair(i);
    chosen.push_back(i);
    if (!ctx.prune || !state.over_cap()) dfs(ctx, state, chosen, i + 1, out);
    chosen.pop_back();
    state.pop_pair();
    if (ctx.max_results && out.size() >= ctx.max_results) return;
  }
}

}  // namespace

std::vector<SubsetInGroup> exhaustive_paley_search(const AbelianGroup& g,
                                                   const SearchOptions& options) {
  const std::uint64_t v = g.order;
  if (v % 4 != 1)
    throw std::domain_error("order ≢ 1 (mod 4): no Paley parameters exist at this order");
  const std::uint64_t bound =
      options.order_bound ? options.order_bound
                          : (options.prune ? kDefaultPrunedBound : kDefaultExhaustiveBound);
  if (v > bound) throw std::domain_error("order exceeds the configured search bound");
  if (v < 5) return {};

  SearchContext ctx;
  ctx.group = &g;
  ctx.target = (v - 1) / 4;
  ctx.cap = (v - 1) / 4;
  ctx.prune = options.prune;
  ctx.max_results = options.max_results;

  const std::size_t npairs = (v - 1) / 2;
  const std::size_t top_end = npairs - ctx.target + 1;  // valid first-pair choices

  if (options.threads <= 1 || top_end <= 1) {
    PairSearchState state(g, ctx.cap);
    std::vector<std::size_t> chosen;
    std::vector<SubsetInGroup> out;
    dfs(ctx, state, chosen, 0, out);
    return out;
  }

  // split on the first-level pair choice; results are tagged with that
  // choice, so merging in branch order reproduces the sequential output
  SearchContext par_ctx = ctx;
  par_ctx.max_results = 0;
  using Tagged = std::pair<std::size_t, SubsetInGroup>;
  std::vector<std::future<std::vector<Tagged>>> futures;
  const unsigned threads = std::min<unsigned>(options.threads, static_cast<unsigned>(top_end));
  for (unsigned w = 0; w < threads; ++w) {
    futures.push_back(std::async(std::launch::async, [&, w]() {
      std::vector<Tagged> local;
      PairSearchState state(g, par_ctx.cap);
      std::vector<std::size_t> chosen;
      for (std::size_t first = w; first < top_end; first += threads) {
        state.push_pair(first);
        chosen.push_back(first);
        if (!par_ctx.prune || !state.over_cap()) {
          std::vector<SubsetInGroup> branch;
          dfs(par_ctx, state, chosen, first + 1, branch);
          for (auto& d : branch) local.emplace_back(first, std::move(d));
        }
        chosen.pop_back();
        state.pop_pair();
      }
      return local;
    }));
  }
  std::vector<Tagged> tagged;
  for (auto& f : futures) {
    auto part = f.get();
    std::move(part.begin(), part.end(), std::back_inserter(tagged));
  }
  std::stable_sort(tagged.begin(), tagged.end(),
                   [](const Tagged& a, const Tagged& b) { return a.first < b.first; });
  std::vector<SubsetInGroup> out;
  out.reserve(tagged.size());
  for (auto& [first, d] : tagged) {
    (void)first;
    out.push_back(std::move(d));
  }
  if (ctx.max_results && out.size() > ctx.max_results) out.resize(ctx.max_results);
  return out;
}

}  // namespace pdskit

#pragma once

#include <cstdint>
#include <vector>

#include "pdskit/pds.hpp"

namespace pdskit {

// Image of the nonzero squares of GF(q) in Z_p^m under the frozen additive
// embedding. Requires q = p^m with p an odd prime and q ≡ 1 (mod 4).
SubsetInGroup paley(std::uint64_t q);

// H \ {e} for a subgroup H given as an explicit set of element ranks;
// rejects sets not closed under the group law.
SubsetInGroup trivial_pds(const AbelianGroup& g, const std::vector<std::uint64_t>& subgroup_ranks);

// H \ {e} for the Hall subgroup of the given primes.
SubsetInGroup trivial_pds_from_hall(const AbelianGroup& g, const std::vector<std::uint64_t>& primes);

// H \ {e} for the subgroup generated by the given element ranks.
SubsetInGroup trivial_pds_from_generators(const AbelianGroup& g,
                                          const std::vector<std::uint64_t>& generator_ranks);

// Union of the lines {(x, a*x) : x in Z_n} for slopes a = 0..r-1 inside
// Z_n x Z_n, minus the origin. All pairwise slope differences must be units
// mod n, so the lines meet only at the origin. Classifies to
// (n^2, r(n-1), n + r^2 - 3r, r^2 - r) with delta_sq = n^2; used as the
// square-delta fixture on non-prime-power orders.
SubsetInGroup latin_square_lines(std::uint64_t n, std::uint64_t r);

}  // namespace pdskit

#include "pdskit/construct.hpp"

#include <numeric>
#include <stdexcept>

#include "pdskit/field.hpp"
#include "pdskit/numeric.hpp"

namespace pdskit {

SubsetInGroup paley(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  auto parts = factor_u64(q);
  if (parts.size() != 1) throw std::domain_error("q is not a prime power");
  auto [p, m] = parts.front();
  if (p == 2) throw std::domain_error("q is even; Paley type needs an odd prime power");
  if (q % 4 != 1)
    throw std::domain_error(
        "q ≡ 3 (mod 4): -1 is not a square, so the nonzero squares are not "
        "negation-closed and give no Paley type PDS");
  FiniteField f = make_field(p, static_cast<std::uint32_t>(m));
  AdditiveEmbedding emb = additive_embedding(f);
  SubsetInGroup d;
  d.group = emb.group;
  d.membership.assign(q, false);
  for (const FieldElement& s : nonzero_squares(f)) d.membership[rank(d.group, emb.map(s))] = true;
  return d;
}

namespace {

SubsetInGroup drop_identity(const AbelianGroup& g, std::vector<bool> subgroup_bits) {
  subgroup_bits[0] = false;
  SubsetInGroup d;
  d.group = g;
  d.membership = std::move(subgroup_bits);
  return d;
}

}  // namespace

SubsetInGroup trivial_pds(const AbelianGroup& g, const std::vector<std::uint64_t>& subgroup_ranks) {
  std::vector<bool> bits(g.order, false);
  for (std::uint64_t r : subgroup_ranks) {
    if (r >= g.order) throw std::invalid_argument("element rank out of range");
    bits[r] = true;
  }
  bits[0] = true;  // a subgroup always contains the identity
  std::vector<std::uint64_t> members;
  for (std::uint64_t r = 0; r < g.order; ++r)
    if (bits[r]) members.push_back(r);
  for (std::uint64_t a : members) {
    GroupElement ea = unrank(g, a);
    for (std::uint64_t b : members) {
      if (!bits[rank(g, sub(g, ea, unrank(g, b)))])
        throw std::domain_error("the given set is not closed under the group law");
    }
  }
  return drop_identity(g, std::move(bits));
}

SubsetInGroup trivial_pds_from_hall(const AbelianGroup& g,
                                    const std::vector<std::uint64_t>& primes) {
  HallSubgroup hall = hall_subgroup(g, primes);
  std::vector<bool> bits(g.order, false);
  for (const GroupElement& h : elements(hall.subgroup)) bits[rank(g, hall.embed(h))] = true;
  return drop_identity(g, std::move(bits));
}

SubsetInGroup trivial_pds_from_generators(const AbelianGroup& g,
                                          const std::vector<std::uint64_t>& generator_ranks) {
  std::vector<bool> bits(g.order, false);
  bits[0] = true;
  std::vector<std::uint64_t> frontier = {0};
  for (std::uint64_t r : generator_ranks) {
    if (r >= g.order) throw std::invalid_argument("generator rank out of range");
    if (!bits[r]) {
      bits[r] = true;
      frontier.push_back(r);
    }
  }
  // closure under addition of the generators
  std::vector<GroupElement> gens;
  for (std::uint64_t r : generator_ranks) gens.push_back(unrank(g, r));
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    GroupElement cur = unrank(g, frontier[i]);
    for (const GroupElement& gen : gens) {
      std::uint64_t nr = rank(g, add(g, cur, gen));
      if (!bits[nr]) {
        bits[nr] = true;
        frontier.push_back(nr);
      }
    }
  }
  return drop_identity(g, std::move(bits));
}

SubsetInGroup latin_square_lines(std::uint64_t n, std::uint64_t r) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("n must be odd and >= 3");
  if (r < 1 || r > n) throw std::invalid_argument("line count must be in [1, n]");
  for (std::uint64_t d = 1; d < r; ++d)
    if (std::gcd(d, n) != 1)
      throw std::domain_error("slope difference " + std::to_string(d) +
                              " is not a unit mod n; lines would meet off the origin");
  OrdersDecomposition dec = decompose_orders({n, n});
  SubsetInGroup d;
  d.group = dec.group;
  d.membership.assign(dec.group.order, false);
  for (std::uint64_t a = 0; a < r; ++a) {
    for (std::uint64_t x = 1; x < n; ++x) {
      // lines meet only at the origin, which x = 0 already skips
      d.membership[rank(d.group, dec.map({x, a * x % n}))] = true;
    }
  }
  return d;
}

}  // namespace pdskit

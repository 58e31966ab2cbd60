#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pdskit {

// A finite abelian group in primary decomposition: a direct product of cyclic
// groups of prime-power order. `factors` lists the cyclic orders, sorted
// ascending; `order` is their product. Groups are limited to order <= 2^32 so
// that all element arithmetic is exact in 64 bits. Always build through
// make_group / parse_group_descriptor so the canonical form holds.
struct AbelianGroup {
  std::vector<std::uint64_t> factors;
  std::uint64_t order = 1;

  std::size_t num_factors() const { return factors.size(); }
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// One residue per factor; coords[i] lies in [0, factors[i]).
struct GroupElement {
  std::vector<std::uint64_t> coords;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// Splits each order into its prime-power parts and returns the canonical
// primary form. Rejects any order < 2 and products beyond 2^32.
AbelianGroup make_group(const std::vector<std::uint64_t>& orders);

// make_group plus the CRT isomorphism from the input cyclic coordinates onto
// the canonical form, for building subsets from natural coordinates.
struct OrdersDecomposition {
  AbelianGroup group;
  std::vector<std::uint64_t> input_orders;
  // For input slot j, the (factor index, prime power) parts it split into.
  std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> slot_parts;

  GroupElement map(const std::vector<std::uint64_t>& input_coords) const;
};
OrdersDecomposition decompose_orders(const std::vector<std::uint64_t>& orders);

GroupElement identity(const AbelianGroup& g);
GroupElement add(const AbelianGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement sub(const AbelianGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement neg(const AbelianGroup& g, const GroupElement& a);

// Mixed-radix rank with coords[0] as the most significant digit:
//   rank = ((coords[0] * f1 + coords[1]) * f2 + ...) + coords[t-1].
// This convention is frozen; persisted subset ranks depend on it.
std::uint64_t rank(const AbelianGroup& g, const GroupElement& e);
GroupElement unrank(const AbelianGroup& g, std::uint64_t index);

// The unique subgroup collecting the full contribution of the chosen primes;
// its order is coprime to its index. `embed` pads unselected coordinates
// with 0 and is an injective homomorphism into the parent.
struct HallSubgroup {
  AbelianGroup subgroup;
  std::vector<std::size_t> factor_indices;  // positions inside the parent
  std::size_t parent_num_factors = 0;

  GroupElement embed(const GroupElement& h) const;
};
HallSubgroup hall_subgroup(const AbelianGroup& g, const std::vector<std::uint64_t>& primes);

// Lazy iteration over all elements in rank order (identity first).
class ElementRange {
 public:
  class iterator {
   public:
    iterator(const AbelianGroup* g, std::uint64_t index);
    const GroupElement& operator*() const { return current_; }
    iterator& operator++();
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }
    friend bool operator!=(const iterator& a, const iterator& b) { return a.index_ != b.index_; }

   private:
    const AbelianGroup* group_;
    std::uint64_t index_;
    GroupElement current_;
  };

  explicit ElementRange(const AbelianGroup& g) : group_(&g) {}
  iterator begin() const { return iterator(group_, 0); }
  iterator end() const { return iterator(group_, group_->order); }

 private:
  const AbelianGroup* group_;
};
ElementRange elements(const AbelianGroup& g);

// Every abelian group of the given order, one per isomorphism class, in a
// deterministic order (lexicographic by factor list).
std::vector<AbelianGroup> all_abelian_groups(std::uint64_t order);

// Text form: comma-separated cyclic orders, e.g. "3,15"; canonical rendering
// uses the primary form, e.g. "3,3,5".
AbelianGroup parse_group_descriptor(const std::string& text);
std::string group_descriptor(const AbelianGroup& g);

}  // namespace pdskit

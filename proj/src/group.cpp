#include "pdskit/group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "pdskit/numeric.hpp"

namespace pdskit {

namespace {

constexpr std::uint64_t kMaxOrder = 1ull << 32;

void check_element(const AbelianGroup& g, const GroupElement& e) {
  if (e.coords.size() != g.factors.size())
    throw std::invalid_argument("group element has wrong coordinate length");
  for (std::size_t i = 0; i < e.coords.size(); ++i)
    if (e.coords[i] >= g.factors[i])
      throw std::invalid_argument("group element coordinate out of range");
}

}  // namespace

OrdersDecomposition decompose_orders(const std::vector<std::uint64_t>& orders) {
  struct Part {
    std::uint64_t value;
    std::size_t slot;
  };
  std::vector<Part> parts;
  std::uint64_t order = 1;
  for (std::size_t j = 0; j < orders.size(); ++j) {
    if (orders[j] < 2) throw std::invalid_argument("cyclic order must be >= 2");
    if (order > kMaxOrder / orders[j])
      throw std::invalid_argument("group order exceeds the 2^32 limit");
    order *= orders[j];
    for (auto [p, e] : factor_u64(orders[j])) parts.push_back({pow_u64(p, e), j});
  }
  std::stable_sort(parts.begin(), parts.end(),
                   [](const Part& a, const Part& b) { return a.value < b.value; });

  OrdersDecomposition out;
  out.input_orders = orders;
  out.slot_parts.resize(orders.size());
  out.group.factors.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out.group.factors.push_back(parts[i].value);
    out.slot_parts[parts[i].slot].emplace_back(i, parts[i].value);
  }
  out.group.order = order;
  return out;
}

GroupElement OrdersDecomposition::map(const std::vector<std::uint64_t>& input_coords) const {
  if (input_coords.size() != input_orders.size())
    throw std::invalid_argument("coordinate list does not match the input orders");
  GroupElement e;
  e.coords.assign(group.factors.size(), 0);
  for (std::size_t j = 0; j < input_coords.size(); ++j) {
    std::uint64_t x = input_coords[j] % input_orders[j];
    for (auto [idx, q] : slot_parts[j]) e.coords[idx] = x % q;
  }
  return e;
}

AbelianGroup make_group(const std::vector<std::uint64_t>& orders) {
  return decompose_orders(orders).group;
}

GroupElement identity(const AbelianGroup& g) {
  GroupElement e;
  e.coords.assign(g.factors.size(), 0);
  return e;
}

GroupElement add(const AbelianGroup& g, const GroupElement& a, const GroupElement& b) {
  check_element(g, a);
  check_element(g, b);
  GroupElement out;
  out.coords.resize(g.factors.size());
  for (std::size_t i = 0; i < g.factors.size(); ++i)
    out.coords[i] = (a.coords[i] + b.coords[i]) % g.factors[i];
  return out;
}

GroupElement sub(const AbelianGroup& g, const GroupElement& a, const GroupElement& b) {
  check_element(g, a);
  check_element(g, b);
  GroupElement out;
  out.coords.resize(g.factors.size());
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    std::uint64_t f = g.factors[i];
    out.coords[i] = (a.coords[i] + f - b.coords[i]) % f;
  }
  return out;
}

GroupElement neg(const AbelianGroup& g, const GroupElement& a) {
  check_element(g, a);
  GroupElement out;
  out.coords.resize(g.factors.size());
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    std::uint64_t f = g.factors[i];
    out.coords[i] = (f - a.coords[i]) % f;
  }
  return out;
}

std::uint64_t rank(const AbelianGroup& g, const GroupElement& e) {
  check_element(g, e);
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < g.factors.size(); ++i) r = r * g.factors[i] + e.coords[i];
  return r;
}

GroupElement unrank(const AbelianGroup& g, std::uint64_t index) {
  if (index >= g.order) throw std::invalid_argument("element index out of range");
  GroupElement e;
  e.coords.assign(g.factors.size(), 0);
  for (std::size_t i = g.factors.size(); i-- > 0;) {
    e.coords[i] = index % g.factors[i];
    index /= g.factors[i];
  }
  return e;
}

GroupElement HallSubgroup::embed(const GroupElement& h) const {
  if (h.coords.size() != factor_indices.size())
    throw std::invalid_argument("group element has wrong coordinate length");
  GroupElement out;
  out.coords.assign(parent_num_factors, 0);
  for (std::size_t i = 0; i < factor_indices.size(); ++i) out.coords[factor_indices[i]] = h.coords[i];
  return out;
}

HallSubgroup hall_subgroup(const AbelianGroup& g, const std::vector<std::uint64_t>& primes) {
  for (std::uint64_t p : primes) {
    if (!is_prime_u64(p)) throw std::invalid_argument("Hall set entry is not prime");
    if (g.order % p != 0) throw std::invalid_argument("Hall prime does not divide the group order");
  }
  HallSubgroup out;
  out.parent_num_factors = g.factors.size();
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    std::uint64_t p = factor_u64(g.factors[i]).front().first;
    if (std::find(primes.begin(), primes.end(), p) != primes.end()) {
      out.subgroup.factors.push_back(g.factors[i]);
      out.subgroup.order *= g.factors[i];
      out.factor_indices.push_back(i);
    }
  }
  return out;
}

ElementRange::iterator::iterator(const AbelianGroup* g, std::uint64_t index)
    : group_(g), index_(index) {
  if (index_ < group_->order) current_ = unrank(*group_, index_);
}

ElementRange::iterator& ElementRange::iterator::operator++() {
  ++index_;
  if (index_ < group_->order) {
    // odometer step: least significant coordinate is the last one
    for (std::size_t i = current_.coords.size(); i-- > 0;) {
      if (++current_.coords[i] < group_->factors[i]) break;
      current_.coords[i] = 0;
    }
  }
  return *this;
}

ElementRange elements(const AbelianGroup& g) { return ElementRange(g); }

namespace {

// Partitions of e as descending part lists, deterministic order.
std::vector<std::vector<std::uint64_t>> partitions(std::uint64_t e) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> cur;
  auto rec = [&](auto&& self, std::uint64_t rest, std::uint64_t maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (std::uint64_t part = std::min(rest, maxpart); part >= 1; --part) {
      cur.push_back(part);
      self(self, rest - part, part);
      cur.pop_back();
    }
  };
  rec(rec, e, e);
  return out;
}

}  // namespace

std::vector<AbelianGroup> all_abelian_groups(std::uint64_t order) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  if (order == 1) return {AbelianGroup{}};
  auto fac = factor_u64(order);
  // per-prime choices: factor lists p^part for each partition of the exponent
  std::vector<std::vector<std::vector<std::uint64_t>>> choices;
  for (auto [p, e] : fac) {
    std::vector<std::vector<std::uint64_t>> lists;
    for (const auto& part : partitions(e)) {
      std::vector<std::uint64_t> factors;
      for (std::uint64_t a : part) factors.push_back(pow_u64(p, a));
      lists.push_back(std::move(factors));
    }
    choices.push_back(std::move(lists));
  }
  std::vector<AbelianGroup> out;
  std::vector<std::size_t> pick(choices.size(), 0);
  for (;;) {
    std::vector<std::uint64_t> orders;
    for (std::size_t i = 0; i < choices.size(); ++i)
      orders.insert(orders.end(), choices[i][pick[i]].begin(), choices[i][pick[i]].end());
    out.push_back(make_group(orders));
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  std::sort(out.begin(), out.end(),
            [](const AbelianGroup& a, const AbelianGroup& b) { return a.factors < b.factors; });
  return out;
}

AbelianGroup parse_group_descriptor(const std::string& text) {
  std::vector<std::uint64_t> orders;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) throw std::invalid_argument("malformed group descriptor: empty order");
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
      throw std::invalid_argument("malformed group descriptor: '" + token + "' is not an integer");
    orders.push_back(value);
    token.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == '\t') continue;
    if (c == ',') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return make_group(orders);
}

std::string group_descriptor(const AbelianGroup& g) {
  std::string out;
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(g.factors[i]);
  }
  if (out.empty()) out = "1";
  return out;
}

}  // namespace pdskit

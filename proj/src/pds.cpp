#include "pdskit/pds.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "pdskit/numeric.hpp"

namespace pdskit {

std::uint64_t SubsetInGroup::size() const {
  return static_cast<std::uint64_t>(std::count(membership.begin(), membership.end(), true));
}

std::vector<std::uint64_t> SubsetInGroup::member_ranks() const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < membership.size(); ++r)
    if (membership[r]) out.push_back(r);
  return out;
}

SubsetInGroup make_subset(const AbelianGroup& g, const std::vector<std::uint64_t>& ranks) {
  SubsetInGroup d;
  d.group = g;
  d.membership.assign(g.order, false);
  for (std::uint64_t r : ranks) {
    if (r >= g.order) throw std::invalid_argument("element rank out of range");
    if (d.membership[r]) throw std::invalid_argument("duplicate element rank");
    d.membership[r] = true;
  }
  return d;
}

SubsetInGroup parse_subset(const std::string& text) {
  std::string stripped;
  stripped.reserve(text.size());
  for (char c : text)
    if (c != ' ' && c != '\t') stripped.push_back(c);
  auto colon = stripped.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("malformed subset: expected '<group> : [ranks]'");
  AbelianGroup g = parse_group_descriptor(stripped.substr(0, colon));
  std::string rest = stripped.substr(colon + 1);
  if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']')
    throw std::invalid_argument("malformed subset: ranks must be bracketed");
  std::string body = rest.substr(1, rest.size() - 2);
  std::vector<std::uint64_t> ranks;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t next = body.find(',', pos);
    if (next == std::string::npos) next = body.size();
    std::uint64_t value = 0;
    const char* begin = body.data() + pos;
    const char* end = body.data() + next;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
      throw std::invalid_argument("malformed subset: bad rank '" + body.substr(pos, next - pos) +
                                  "'");
    ranks.push_back(value);
    pos = next + 1;
  }
  return make_subset(g, ranks);
}

std::string subset_text(const SubsetInGroup& d) {
  std::string out = group_descriptor(d.group);
  out += " : [";
  bool first = true;
  for (std::uint64_t r : d.member_ranks()) {
    if (!first) out.push_back(',');
    out += std::to_string(r);
    first = false;
  }
  out.push_back(']');
  return out;
}

PdsParameters make_parameters(std::uint64_t v, std::uint64_t k, std::uint64_t lambda,
                              std::uint64_t mu) {
  PdsParameters p;
  p.v = v;
  p.k = k;
  p.lambda = lambda;
  p.mu = mu;
  p.beta = static_cast<std::int64_t>(lambda) - static_cast<std::int64_t>(mu);
  // k >= mu for anything produced by counting; guard anyway
  std::int64_t diff = static_cast<std::int64_t>(k) - static_cast<std::int64_t>(mu);
  std::int64_t dsq = p.beta * p.beta + 4 * diff;
  if (dsq < 0) throw std::invalid_argument("parameters give negative delta-squared");
  p.delta_sq = static_cast<std::uint64_t>(dsq);
  std::uint64_t root = 0;
  if (is_perfect_square_u64(p.delta_sq, &root)) p.delta = root;
  return p;
}

PdsParameters paley_parameters(std::uint64_t v) {
  if (v < 5 || v % 4 != 1)
    throw std::invalid_argument("Paley parameters need v ≡ 1 (mod 4) and v >= 5");
  return make_parameters(v, (v - 1) / 2, (v - 5) / 4, (v - 1) / 4);
}

bool is_paley_type(const PdsParameters& params) {
  if (params.v < 5 || params.v % 4 != 1) return false;
  return params.k == (params.v - 1) / 2 && params.lambda == (params.v - 5) / 4 &&
         params.mu == (params.v - 1) / 4;
}

std::vector<std::uint64_t> difference_counts(const SubsetInGroup& d) {
  const AbelianGroup& g = d.group;
  if (d.membership.size() != g.order)
    throw std::invalid_argument("membership vector does not match the group order");
  auto members = d.member_ranks();
  const std::size_t k = members.size();
  const std::size_t t = g.factors.size();
  // flat coordinate table for the members
  std::vector<std::uint64_t> coords(k * t);
  for (std::size_t i = 0; i < k; ++i) {
    GroupElement e = unrank(g, members[i]);
    std::copy(e.coords.begin(), e.coords.end(), coords.begin() + i * t);
  }
  std::vector<std::uint64_t> counts(g.order, 0);
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t* a = coords.data() + i * t;
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      const std::uint64_t* b = coords.data() + j * t;
      std::uint64_t r = 0;
      for (std::size_t s = 0; s < t; ++s) {
        std::uint64_t f = g.factors[s];
        std::uint64_t c = a[s] >= b[s] ? a[s] - b[s] : a[s] + f - b[s];
        r = r * f + c;
      }
      ++counts[r];
    }
  }
  return counts;
}

namespace {

struct ClassScan {
  bool constant = true;
  std::optional<std::uint64_t> lambda;
  std::optional<std::uint64_t> mu;
  Counterexample bad;
};

ClassScan scan_counts(const SubsetInGroup& d, const std::vector<std::uint64_t>& counts) {
  ClassScan out;
  for (std::uint64_t r = 1; r < d.group.order; ++r) {
    bool in = d.membership[r];
    auto& slot = in ? out.lambda : out.mu;
    if (!slot) {
      slot = counts[r];
    } else if (*slot != counts[r]) {
      out.constant = false;
      out.bad = Counterexample{r, counts[r], *slot, in};
      return out;
    }
  }
  return out;
}

}  // namespace

VerificationReport classify(const SubsetInGroup& d) {
  auto counts = difference_counts(d);
  ClassScan scan = scan_counts(d, counts);
  VerificationReport rep;
  if (!scan.constant) {
    rep.is_pds = false;
    rep.counterexample = scan.bad;
    return rep;
  }
  rep.is_pds = true;
  rep.params = make_parameters(d.group.order, d.size(), scan.lambda.value_or(0),
                               scan.mu.value_or(0));
  return rep;
}

PdsParameters candidate_parameters(const SubsetInGroup& d) {
  auto counts = difference_counts(d);
  std::optional<std::uint64_t> lambda, mu;
  for (std::uint64_t r = 1; r < d.group.order && !(lambda && mu); ++r) {
    auto& slot = d.membership[r] ? lambda : mu;
    if (!slot) slot = counts[r];
  }
  return make_parameters(d.group.order, d.size(), lambda.value_or(0), mu.value_or(0));
}

bool is_regular(const SubsetInGroup& d) {
  if (d.group.order == 0) return false;
  if (d.membership[0]) return false;
  for (std::uint64_t r = 1; r < d.group.order; ++r) {
    if (!d.membership[r]) continue;
    std::uint64_t nr = rank(d.group, neg(d.group, unrank(d.group, r)));
    if (!d.membership[nr]) return false;
  }
  return true;
}

namespace {

bool is_subgroup(const AbelianGroup& g, const std::vector<bool>& bits) {
  std::vector<std::uint64_t> members;
  for (std::uint64_t r = 0; r < bits.size(); ++r)
    if (bits[r]) members.push_back(r);
  if (members.empty()) return false;
  // Lagrange shortcut: a nonempty subtraction-closed set is a subgroup, so
  // its size must divide the group order.
  if (g.order % members.size() != 0) return false;
  const std::size_t t = g.factors.size();
  std::vector<std::uint64_t> coords(members.size() * t);
  for (std::size_t i = 0; i < members.size(); ++i) {
    GroupElement e = unrank(g, members[i]);
    std::copy(e.coords.begin(), e.coords.end(), coords.begin() + i * t);
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    const std::uint64_t* a = coords.data() + i * t;
    for (std::size_t j = 0; j < members.size(); ++j) {
      const std::uint64_t* b = coords.data() + j * t;
      std::uint64_t r = 0;
      for (std::size_t s = 0; s < t; ++s) {
        std::uint64_t f = g.factors[s];
        std::uint64_t c = a[s] >= b[s] ? a[s] - b[s] : a[s] + f - b[s];
        r = r * f + c;
      }
      if (!bits[r]) return false;
    }
  }
  return true;
}

}  // namespace

bool is_trivial(const SubsetInGroup& d) {
  std::vector<bool> with_e = d.membership;
  with_e[0] = true;
  if (is_subgroup(d.group, with_e)) return true;
  std::vector<bool> complement(d.group.order);
  for (std::uint64_t r = 0; r < d.group.order; ++r) complement[r] = !d.membership[r];
  return is_subgroup(d.group, complement);
}

// ---------------------------------------------------------------------------
// character sums

namespace {

// Exact division of a by monic b over Z (remainder known to be zero).
std::vector<std::int64_t> poly_div_exact(const std::vector<std::int64_t>& a,
                                         const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> quot(a.size() - b.size() + 1, 0);
  std::vector<std::int64_t> rem = a;
  for (std::size_t i = quot.size(); i-- > 0;) {
    std::int64_t c = rem[i + b.size() - 1];
    quot[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) rem[i + j] -= c * b[j];
  }
  return quot;
}

// Phi_n, filled bottom-up across divisors: Phi_n = (x^n - 1) / prod Phi_d
// over proper divisors d. All divisors are monic, so everything stays in Z.
const std::vector<std::int64_t>& cyclotomic_cached(std::uint64_t n) {
  static std::map<std::uint64_t, std::vector<std::int64_t>> cache;
  static std::mutex cache_mutex;
  std::lock_guard<std::mutex> lock(cache_mutex);
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d != 0 || cache.count(d)) continue;
    std::vector<std::int64_t> poly(d + 1, 0);
    poly[0] = -1;
    poly[d] = 1;
    for (std::uint64_t e = 1; e < d; ++e)
      if (d % e == 0) poly = poly_div_exact(poly, cache.at(e));
    cache.emplace(d, std::move(poly));
  }
  return cache.at(n);
}

// True when sum_i c[i] * zeta_n^i equals the rational integer target, i.e.
// when c(x) - target is divisible by Phi_n.
bool cyclotomic_sum_equals(const std::vector<std::int64_t>& c, std::uint64_t n,
                           std::int64_t target) {
  const auto& phi = cyclotomic_cached(n);
  const std::size_t deg = phi.size() - 1;
  std::vector<__int128> rem(c.begin(), c.end());
  rem[0] -= target;
  for (std::size_t i = rem.size(); i-- > 0;) {
    if (i < deg) break;
    __int128 lead = rem[i];
    if (lead == 0) continue;
    std::size_t shift = i - deg;
    for (std::size_t j = 0; j < phi.size(); ++j) rem[shift + j] -= lead * phi[j];
  }
  for (std::size_t i = 0; i < deg && i < rem.size(); ++i)
    if (rem[i] != 0) return false;
  return true;
}

}  // namespace

CharacterCheck character_verify(const SubsetInGroup& d, const PdsParameters& params,
                                CharacterMethod method) {
  CharacterCheck out;
  if (!is_regular(d)) {
    out.status = CharacterStatus::NotApplicable;
    out.note = "subset is not regular";
    return out;
  }
  if (!params.delta) {
    out.status = CharacterStatus::NotApplicable;
    out.note = "delta-squared is not a perfect square";
    return out;
  }
  const AbelianGroup& g = d.group;
  const std::uint64_t v = g.order;
  std::uint64_t n = 1;
  for (std::uint64_t f : g.factors) n = std::lcm(n, f);
  std::int64_t delta = static_cast<std::int64_t>(*params.delta);
  // beta and delta have the same parity since delta^2 - beta^2 = 4(k - mu)
  std::int64_t t_plus = (params.beta + delta) / 2;
  std::int64_t t_minus = (params.beta - delta) / 2;

  if (method == CharacterMethod::Auto)
    method = n <= 4096 ? CharacterMethod::Exact : CharacterMethod::Approximate;
  out.approximate = method == CharacterMethod::Approximate;

  auto members = d.member_ranks();
  const std::size_t t = g.factors.size();
  std::vector<std::uint64_t> coords(members.size() * t);
  for (std::size_t i = 0; i < members.size(); ++i) {
    GroupElement e = unrank(g, members[i]);
    std::copy(e.coords.begin(), e.coords.end(), coords.begin() + i * t);
  }
  std::vector<std::uint64_t> weight(t);
  for (std::size_t s = 0; s < t; ++s) weight[s] = n / g.factors[s];

  std::vector<std::complex<double>> roots;
  if (method == CharacterMethod::Approximate) {
    roots.resize(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      double angle = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n);
      roots[i] = {std::cos(angle), std::sin(angle)};
    }
  }

  // exponent of zeta_n in chi_a(d): sum over factors of a_s * d_s * (n / f_s)
  auto exponent = [&](const GroupElement& a, const std::uint64_t* dc) {
    std::uint64_t e = 0;
    for (std::size_t s = 0; s < t; ++s) {
      std::uint64_t x = static_cast<std::uint64_t>(
          static_cast<unsigned __int128>(a.coords[s]) * dc[s] % g.factors[s]);
      e = (e + x * weight[s]) % n;
    }
    return e;
  };

  std::vector<std::int64_t> hist;
  for (std::uint64_t a_rank = 1; a_rank < v; ++a_rank) {
    GroupElement a = unrank(g, a_rank);
    bool ok = false;
    if (method == CharacterMethod::Exact) {
      hist.assign(n, 0);
      for (std::size_t i = 0; i < members.size(); ++i)
        ++hist[exponent(a, coords.data() + i * t)];
      ok = cyclotomic_sum_equals(hist, n, t_plus) || cyclotomic_sum_equals(hist, n, t_minus);
    } else {
      std::complex<double> sum{0.0, 0.0};
      for (std::size_t i = 0; i < members.size(); ++i)
        sum += roots[exponent(a, coords.data() + i * t)];
      constexpr double kTol = 1e-6;
      ok = std::abs(sum - std::complex<double>(static_cast<double>(t_plus), 0.0)) <= kTol ||
           std::abs(sum - std::complex<double>(static_cast<double>(t_minus), 0.0)) <= kTol;
    }
    if (!ok) {
      out.status = CharacterStatus::Fail;
      out.failing_character = a_rank;
      out.note = "character sum outside {(beta+delta)/2, (beta-delta)/2}";
      return out;
    }
  }
  out.status = CharacterStatus::Pass;
  return out;
}

}  // namespace pdskit

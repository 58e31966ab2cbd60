#include <doctest.h>

#include <random>
#include <set>

#include "pdskit/field.hpp"
#include "pdskit/numeric.hpp"

using namespace pdskit;

namespace {

// Independent irreducibility oracle: no roots in GF(p) settles degree <= 3;
// beyond that, trial division by every monic polynomial of degree <= m/2.
bool oracle_irreducible(std::uint64_t p, const std::vector<std::uint64_t>& poly) {
  std::size_t m = poly.size() - 1;
  auto eval = [&](std::uint64_t x) {
    std::uint64_t acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = (acc * x + poly[i]) % p;
    return acc;
  };
  for (std::uint64_t x = 0; x < p; ++x)
    if (eval(x) == 0) return false;
  if (m <= 3) return true;
  // long division by a monic divisor, remainder-only
  auto divides = [&](const std::vector<std::uint64_t>& div) {
    std::vector<std::uint64_t> rem = poly;
    while (rem.size() >= div.size()) {
      std::uint64_t c = rem.back();
      if (c != 0) {
        std::size_t shift = rem.size() - div.size();
        for (std::size_t i = 0; i < div.size(); ++i)
          rem[shift + i] = (rem[shift + i] + p * c - c * div[i] % p) % p;
      }
      rem.pop_back();
      while (!rem.empty() && rem.back() == 0) rem.pop_back();
      if (rem.empty()) return true;
    }
    return false;
  };
  for (std::size_t d = 2; d <= m / 2; ++d) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= p;
    for (std::uint64_t enc = 0; enc < total; ++enc) {
      std::vector<std::uint64_t> div(d + 1, 0);
      std::uint64_t rest = enc;
      for (std::size_t i = 0; i < d; ++i) {
        div[i] = rest % p;
        rest /= p;
      }
      div[d] = 1;
      if (divides(div)) return false;
    }
  }
  return true;
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> odd_prime_powers_up_to(std::uint64_t bound) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint64_t p = 3; p <= bound; p += 2) {
    if (!is_prime_u64(p)) continue;
    std::uint64_t q = p;
    std::uint32_t m = 1;
    while (q <= bound) {
      out.emplace_back(p, m);
      if (q > bound / p) break;
      q *= p;
      ++m;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("deterministic moduli") {
  CHECK(make_field(3, 2).modulus == std::vector<std::uint64_t>{1, 0, 1});   // x^2 + 1
  CHECK(make_field(5, 2).modulus == std::vector<std::uint64_t>{2, 0, 1});   // x^2 + 2
  CHECK(make_field(13, 1).modulus == std::vector<std::uint64_t>{0, 1});     // plain residues
  CHECK_THROWS_AS(make_field(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_field(9, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_field(7, 0), std::invalid_argument);
}

TEST_CASE("moduli are irreducible by the independent oracle") {
  for (auto [p, m] : odd_prime_powers_up_to(3000)) {
    FiniteField f = make_field(p, m);
    CAPTURE(p);
    CAPTURE(m);
    if (m >= 2) CHECK(oracle_irreducible(p, f.modulus));
    // and the lexicographic minimality: no smaller encoding is irreducible
    if (m >= 2 && f.q <= 400) {
      std::uint64_t enc = 0;
      for (std::size_t i = 0; i < m; ++i) enc += f.modulus[i] * pow_u64(p, i);
      for (std::uint64_t smaller = 0; smaller < enc; ++smaller) {
        std::vector<std::uint64_t> cand(m + 1, 0);
        std::uint64_t rest = smaller;
        for (std::size_t i = 0; i < m; ++i) {
          cand[i] = rest % p;
          rest /= p;
        }
        cand[m] = 1;
        CHECK_FALSE(oracle_irreducible(p, cand));
      }
    }
  }
}

TEST_CASE("arithmetic examples") {
  FiniteField f9 = make_field(3, 2);
  FieldElement x = field_from_encoding(f9, 3);  // the element x
  CHECK(field_encoding(f9, mul(f9, x, x)) == 2);  // x^2 = -1 = 2

  FiniteField f5 = make_field(5, 1);
  FieldElement two = field_from_encoding(f5, 2);
  CHECK(field_encoding(f5, inv(f5, two)) == 3);
  CHECK_THROWS_AS(inv(f5, field_zero(f5)), std::domain_error);

  for (std::uint64_t code = 1; code < f9.q; ++code) {
    FieldElement g = field_from_encoding(f9, code);
    CHECK(pow(f9, g, f9.q - 1) == field_one(f9));
    CHECK(mul(f9, g, inv(f9, g)) == field_one(f9));
  }
}

TEST_CASE("nonzero squares") {
  FiniteField f5 = make_field(5, 1);
  std::vector<std::uint64_t> got;
  for (const FieldElement& s : nonzero_squares(f5)) got.push_back(field_encoding(f5, s));
  CHECK(got == std::vector<std::uint64_t>{1, 4});

  FiniteField f13 = make_field(13, 1);
  got.clear();
  for (const FieldElement& s : nonzero_squares(f13)) got.push_back(field_encoding(f13, s));
  CHECK(got == std::vector<std::uint64_t>{1, 3, 4, 9, 10, 12});

  // -1 is a square in GF(9) since q ≡ 1 (mod 4), so the set is negation-closed
  FiniteField f9 = make_field(3, 2);
  auto squares9 = nonzero_squares(f9);
  CHECK(squares9.size() == 4);
  std::set<std::uint64_t> codes;
  for (const FieldElement& s : squares9) codes.insert(field_encoding(f9, s));
  for (const FieldElement& s : squares9)
    CHECK(codes.count(field_encoding(f9, sub(f9, field_zero(f9), s))) == 1);
}

TEST_CASE("squares form a multiplicative subgroup of index two") {
  for (auto [p, m] : odd_prime_powers_up_to(3000)) {
    FiniteField f = make_field(p, m);
    auto squares = nonzero_squares(f);
    CAPTURE(f.q);
    CHECK(squares.size() == (f.q - 1) / 2);
    if (f.q <= 200) {
      std::set<std::uint64_t> codes;
      for (const FieldElement& s : squares) codes.insert(field_encoding(f, s));
      for (const FieldElement& a : squares)
        for (const FieldElement& b : squares)
          CHECK(codes.count(field_encoding(f, mul(f, a, b))) == 1);
    }
  }
}

TEST_CASE("multiplicative order of a random element divides q - 1") {
  std::mt19937_64 rng(99);
  for (auto [p, m] : odd_prime_powers_up_to(3000)) {
    FiniteField f = make_field(p, m);
    std::uniform_int_distribution<std::uint64_t> pick(1, f.q - 1);
    FieldElement g = field_from_encoding(f, pick(rng));
    std::uint64_t order = 1;
    FieldElement acc = g;
    while (!(acc == field_one(f))) {
      acc = mul(f, acc, g);
      ++order;
    }
    CAPTURE(f.q);
    CHECK((f.q - 1) % order == 0);
  }
}

TEST_CASE("additive embedding") {
  FiniteField f5 = make_field(5, 1);
  AdditiveEmbedding e5 = additive_embedding(f5);
  CHECK(e5.map(field_from_encoding(f5, 3)).coords == std::vector<std::uint64_t>{3});
  CHECK(e5.map(field_zero(f5)) == identity(e5.group));

  // 2x + 1 has coefficients (1, 2); coefficient i maps to coordinate i
  FiniteField f9 = make_field(3, 2);
  AdditiveEmbedding e9 = additive_embedding(f9);
  FieldElement two_x_plus_one;
  two_x_plus_one.coeffs = {1, 2};
  CHECK(e9.map(two_x_plus_one).coords == std::vector<std::uint64_t>{1, 2});
}

TEST_CASE("additive embedding is a bijective homomorphism") {
  for (auto [p, m] : odd_prime_powers_up_to(169)) {
    FiniteField f = make_field(p, m);
    AdditiveEmbedding emb = additive_embedding(f);
    std::set<std::uint64_t> image;
    for (std::uint64_t code = 0; code < f.q; ++code)
      image.insert(rank(emb.group, emb.map(field_from_encoding(f, code))));
    CHECK(image.size() == f.q);
    for (std::uint64_t a = 0; a < f.q; ++a) {
      FieldElement fa = field_from_encoding(f, a);
      for (std::uint64_t b = 0; b < f.q; ++b) {
        FieldElement fb = field_from_encoding(f, b);
        CHECK(emb.map(add(f, fa, fb)) == add(emb.group, emb.map(fa), emb.map(fb)));
      }
    }
  }
}

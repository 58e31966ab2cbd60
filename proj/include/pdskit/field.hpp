#pragma once

#include <cstdint>
#include <vector>

#include "pdskit/group.hpp"

namespace pdskit {

// GF(p^m) for odd prime p, as GF(p)[x] modulo a monic irreducible polynomial.
// The modulus is deterministic: the irreducible monic degree-m polynomial
// whose non-leading coefficient vector (c_0..c_{m-1}) has the smallest
// encoding sum(c_i * p^i). For m = 1 this yields the polynomial x, and
// elements are plain residues mod p.
struct FiniteField {
  std::uint64_t p = 0;
  std::uint32_t m = 0;
  std::uint64_t q = 0;                  // p^m
  std::vector<std::uint64_t> modulus;   // m+1 coefficients, ascending degree, monic
};

// Coefficient vector of length m, ascending degree, entries in [0, p).
struct FieldElement {
  std::vector<std::uint64_t> coeffs;
  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

FiniteField make_field(std::uint64_t p, std::uint32_t m);

// Integer encoding sum(coeffs[i] * p^i); a bijection onto [0, q).
std::uint64_t field_encoding(const FiniteField& f, const FieldElement& x);
FieldElement field_from_encoding(const FiniteField& f, std::uint64_t code);

FieldElement field_zero(const FiniteField& f);
FieldElement field_one(const FiniteField& f);
bool is_zero(const FieldElement& x);

FieldElement add(const FiniteField& f, const FieldElement& a, const FieldElement& b);
FieldElement sub(const FiniteField& f, const FieldElement& a, const FieldElement& b);
FieldElement mul(const FiniteField& f, const FieldElement& a, const FieldElement& b);
FieldElement pow(const FiniteField& f, const FieldElement& a, std::uint64_t e);
FieldElement inv(const FiniteField& f, const FieldElement& a);  // a != 0

// { x^2 : x in F, x != 0 }, sorted by encoding; (q-1)/2 elements for odd q.
std::vector<FieldElement> nonzero_squares(const FiniteField& f);

// The additive group (F, +) as Z_p^m. Coefficient i maps to coordinate i;
// this convention is frozen along with the group rank order.
struct AdditiveEmbedding {
  AbelianGroup group;
  GroupElement map(const FieldElement& x) const;
};
AdditiveEmbedding additive_embedding(const FiniteField& f);

// Rabin's irreducibility test for a monic polynomial over GF(p).
bool is_irreducible_mod_p(std::uint64_t p, const std::vector<std::uint64_t>& poly);

}  // namespace pdskit

#include "pdskit/field.hpp"

#include <stdexcept>

#include "pdskit/numeric.hpp"

namespace pdskit {

namespace {

constexpr std::uint64_t kMaxOrder = 1ull << 32;

using Poly = std::vector<std::uint64_t>;  // coefficients ascending, reduced mod p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::size_t degree(const Poly& a) { return a.empty() ? 0 : a.size() - 1; }

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) {
  // Fermat; p is prime and a != 0 mod p
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return out;
}

// Remainder of a modulo monic-leading f (any nonzero leading coefficient).
Poly poly_rem(Poly a, const Poly& f, std::uint64_t p) {
  trim(a);
  std::uint64_t lead_inv = inv_mod_p(f.back(), p);
  while (a.size() >= f.size() && !a.empty()) {
    std::uint64_t c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - f.size();
    for (std::size_t i = 0; i < f.size(); ++i) {
      std::uint64_t t = c * f[i] % p;
      a[shift + i] = (a[shift + i] + p - t) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly out = {1};
  base = poly_rem(std::move(base), f, p);
  while (e) {
    if (e & 1) out = poly_rem(poly_mul(out, base, p), f, p);
    base = poly_rem(poly_mul(base, base, p), f, p);
    e >>= 1;
  }
  return out;
}

void check_element(const FiniteField& f, const FieldElement& x) {
  if (x.coeffs.size() != f.m) throw std::invalid_argument("field element has wrong length");
  for (std::uint64_t c : x.coeffs)
    if (c >= f.p) throw std::invalid_argument("field element coefficient out of range");
}

}  // namespace

bool is_irreducible_mod_p(std::uint64_t p, const std::vector<std::uint64_t>& poly) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;  // constants are not irreducible here
  std::size_t m = degree(f);
  if (m == 1) return true;
  // Rabin: x^(p^m) == x mod f, and gcd(x^(p^(m/t)) - x, f) = 1 for prime t | m.
  Poly x = {0, 1};
  Poly frob = x;  // x^(p^j) after j steps
  std::vector<Poly> frob_at(m + 1);
  for (std::size_t j = 1; j <= m; ++j) {
    frob = poly_powmod(frob, p, f, p);
    frob_at[j] = frob;
  }
  {
    Poly diff = frob_at[m];
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (!diff.empty()) return false;
  }
  for (auto [t, e] : factor_u64(m)) {
    (void)e;
    Poly diff = frob_at[m / t];
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    Poly g = poly_gcd(f, diff, p);
    if (degree(g) != 0) return false;
  }
  return true;
}

FiniteField make_field(std::uint64_t p, std::uint32_t m) {
  if (p < 3 || !is_prime_u64(p)) throw std::invalid_argument("p must be an odd prime");
  if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    if (q > kMaxOrder / p) throw std::invalid_argument("field order exceeds the 2^32 limit");
    q *= p;
  }
  FiniteField f;
  f.p = p;
  f.m = m;
  f.q = q;
  // smallest encoding of the non-leading coefficients that gives an
  // irreducible monic polynomial; for m = 1 this is the polynomial x
  for (std::uint64_t enc = 0; enc < q; ++enc) {
    std::vector<std::uint64_t> poly(m + 1, 0);
    std::uint64_t rest = enc;
    for (std::uint32_t i = 0; i < m; ++i) {
      poly[i] = rest % p;
      rest /= p;
    }
    poly[m] = 1;
    if (m == 1 || is_irreducible_mod_p(p, poly)) {
      f.modulus = std::move(poly);
      return f;
    }
  }
  throw std::logic_error("no irreducible modulus found");  // unreachable
}

std::uint64_t field_encoding(const FiniteField& f, const FieldElement& x) {
  check_element(f, x);
  std::uint64_t code = 0;
  for (std::size_t i = f.m; i-- > 0;) code = code * f.p + x.coeffs[i];
  return code;
}

FieldElement field_from_encoding(const FiniteField& f, std::uint64_t code) {
  if (code >= f.q) throw std::invalid_argument("field encoding out of range");
  FieldElement out;
  out.coeffs.assign(f.m, 0);
  for (std::uint32_t i = 0; i < f.m; ++i) {
    out.coeffs[i] = code % f.p;
    code /= f.p;
  }
  return out;
}

FieldElement field_zero(const FiniteField& f) {
  FieldElement out;
  out.coeffs.assign(f.m, 0);
  return out;
}

FieldElement field_one(const FiniteField& f) {
  FieldElement out = field_zero(f);
  out.coeffs[0] = 1;
  return out;
}

bool is_zero(const FieldElement& x) {
  for (std::uint64_t c : x.coeffs)
    if (c) return false;
  return true;
}

FieldElement add(const FiniteField& f, const FieldElement& a, const FieldElement& b) {
  check_element(f, a);
  check_element(f, b);
  FieldElement out;
  out.coeffs.resize(f.m);
  for (std::size_t i = 0; i < f.m; ++i) out.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % f.p;
  return out;
}

FieldElement sub(const FiniteField& f, const FieldElement& a, const FieldElement& b) {
  check_element(f, a);
  check_element(f, b);
  FieldElement out;
  out.coeffs.resize(f.m);
  for (std::size_t i = 0; i < f.m; ++i) out.coeffs[i] = (a.coeffs[i] + f.p - b.coeffs[i]) % f.p;
  return out;
}

FieldElement mul(const FiniteField& f, const FieldElement& a, const FieldElement& b) {
  check_element(f, a);
  check_element(f, b);
  Poly prod = poly_mul(a.coeffs, b.coeffs, f.p);
  Poly red = poly_rem(std::move(prod), f.modulus, f.p);
  FieldElement out;
  out.coeffs.assign(f.m, 0);
  for (std::size_t i = 0; i < red.size(); ++i) out.coeffs[i] = red[i];
  return out;
}

FieldElement pow(const FiniteField& f, const FieldElement& a, std::uint64_t e) {
  check_element(f, a);
  FieldElement out = field_one(f);
  FieldElement base = a;
  while (e) {
    if (e & 1) out = mul(f, out, base);
    base = mul(f, base, base);
    e >>= 1;
  }
  return out;
}

FieldElement inv(const FiniteField& f, const FieldElement& a) {
  if (is_zero(a)) throw std::domain_error("zero has no multiplicative inverse");
  return pow(f, a, f.q - 2);
}

std::vector<FieldElement> nonzero_squares(const FiniteField& f) {
  std::vector<bool> seen(f.q, false);
  for (std::uint64_t code = 1; code < f.q; ++code) {
    FieldElement x = field_from_encoding(f, code);
    seen[field_encoding(f, mul(f, x, x))] = true;
  }
  std::vector<FieldElement> out;
  for (std::uint64_t code = 1; code < f.q; ++code)
    if (seen[code]) out.push_back(field_from_encoding(f, code));
  return out;
}

GroupElement AdditiveEmbedding::map(const FieldElement& x) const {
  GroupElement e;
  e.coords = x.coeffs;
  if (e.coords.size() != group.factors.size())
    throw std::invalid_argument("field element does not belong to this embedding");
  return e;
}

AdditiveEmbedding additive_embedding(const FiniteField& f) {
  AdditiveEmbedding out;
  out.group = make_group(std::vector<std::uint64_t>(f.m, f.p));
  return out;
}

}  // namespace pdskit

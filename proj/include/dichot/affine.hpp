#pragma once

// Modular and affine arithmetic on Z_n.  An affine map x -> v*x + u with
// gcd(v, n) = 1 is written e^u.v.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dichot {

using Residue = std::int64_t;

inline Residue mod(Residue a, Residue n) {
  Residue r = a % n;
  return r < 0 ? r + n : r;
}

/// Ascending list of units of Z_n; units_of(1) = {0} (the zero ring).
inline std::vector<Residue> units_of(Residue n) {
  if (n < 1) throw std::invalid_argument("units_of: modulus must be positive");
  if (n == 1) return {0};
  std::vector<Residue> out;
  for (Residue v = 1; v < n; ++v)
    if (std::gcd(v, n) == 1) out.push_back(v);
  return out;
}

inline Residue euler_phi(Residue n) { return static_cast<Residue>(units_of(n).size()); }

inline Residue inverse_unit(Residue v, Residue n) {
  // extended Euclid
  Residue r0 = n, r1 = mod(v, n), s0 = 0, s1 = 1;
  while (r1 != 0) {
    Residue q = r0 / r1;
    Residue t = r0 - q * r1; r0 = r1; r1 = t;
    t = s0 - q * s1; s0 = s1; s1 = t;
  }
  if (r0 != 1 && n != 1) throw std::invalid_argument("inverse_unit: not a unit");
  return mod(s0, n);
}

struct AffineElement {
  Residue shift = 0;  // u
  Residue unit = 1;   // v
  Residue modulus = 1;

  AffineElement() = default;
  AffineElement(Residue u, Residue v, Residue n) : shift(mod(u, n)), unit(mod(v, n)), modulus(n) {
    if (n < 1) throw std::invalid_argument("AffineElement: modulus must be positive");
    if (std::gcd(unit, n) != 1 && n != 1)
      throw std::invalid_argument("AffineElement: multiplier is not a unit mod " + std::to_string(n));
  }

  static AffineElement identity(Residue n) { return {0, 1, n}; }

  bool operator==(const AffineElement&) const = default;
  auto operator<=>(const AffineElement&) const = default;
};

inline Residue aff_apply(const AffineElement& a, Residue x) {
  return mod(a.unit * mod(x, a.modulus) + a.shift, a.modulus);
}

/// (a o b)(x) = a(b(x)).
inline AffineElement aff_compose(const AffineElement& a, const AffineElement& b) {
  if (a.modulus != b.modulus) throw std::invalid_argument("aff_compose: modulus mismatch");
  const Residue n = a.modulus;
  return {a.shift + a.unit * b.shift, a.unit * b.unit, n};
}

inline AffineElement aff_inverse(const AffineElement& a) {
  const Residue n = a.modulus;
  const Residue vinv = n == 1 ? 0 : inverse_unit(a.unit, n);
  return {-vinv * a.shift, vinv, n};
}

/// Canonical label "e^u.v".
inline std::string aff_label(const AffineElement& a) {
  return "e^" + std::to_string(a.shift) + "." + std::to_string(a.unit);
}

/// Label with v = n-1 shown as "-1", e.g. "e^5.-1" in Z_8.
inline std::string aff_signed_label(const AffineElement& a) {
  if (a.modulus > 2 && a.unit == a.modulus - 1) return "e^" + std::to_string(a.shift) + ".-1";
  return aff_label(a);
}

/// Parses "e^u.v" (u, v may be negative) and normalizes mod n.
inline AffineElement parse_aff_label(std::string_view text, Residue n) {
  auto fail = [&] { throw std::invalid_argument("bad affine label '" + std::string(text) + "'"); };
  if (text.size() < 5 || text.substr(0, 2) != "e^") fail();
  const auto body = text.substr(2);
  const auto dot = body.find('.');
  if (dot == std::string_view::npos) fail();
  try {
    std::size_t used = 0;
    const std::string us(body.substr(0, dot)), vs(body.substr(dot + 1));
    const Residue u = std::stoll(us, &used);
    if (used != us.size()) fail();
    const Residue v = std::stoll(vs, &used);
    if (used != vs.size()) fail();
    return {u, v, n};
  } catch (const std::logic_error&) {
    fail();
  }
  return {};
}

/// Dichotomy-level operations need an even modulus n >= 2.
inline void require_even(Residue n, const char* what) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument(std::string(what) + ": n must be even and >= 2");
}

/// All elements of Aff(Z_n), ordered by unit then shift.
inline std::vector<AffineElement> affine_elements(Residue n) {
  std::vector<AffineElement> out;
  for (Residue v : units_of(n))
    for (Residue u = 0; u < n; ++u) out.emplace_back(u, v, n);
  return out;
}

/// Smallest (u, v) in the conjugacy class of a within Aff(Z_n).
inline AffineElement affine_class_representative(const AffineElement& a) {
  AffineElement best = a;
  for (const auto& t : affine_elements(a.modulus)) {
    const auto c = aff_compose(aff_compose(t, a), aff_inverse(t));
    if (std::pair(c.shift, c.unit) < std::pair(best.shift, best.unit)) best = c;
  }
  return best;
}

}  // namespace dichot

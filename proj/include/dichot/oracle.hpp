#pragma once

// Brute-force ground truth: every subset of the domain is visited, orbits are
// found by applying every group element, and stabilizers, complements and
// polarities are read off the explicit image lists.  Nothing here uses the
// subgroup lattice or the table of marks except stabilizer_census, which only
// needs class lookup to bucket its results.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "dichot/affine.hpp"
#include "dichot/errors.hpp"
#include "dichot/group.hpp"
#include "dichot/lattice.hpp"
#include "dichot/polarity.hpp"

namespace dichot {

using Mask = std::uint32_t;

inline constexpr std::size_t kOracleMaxAll = 24;
inline constexpr std::size_t kOracleMaxHalf = 28;

struct PatternClassRecord {
  Mask canonical = 0;  // smallest mask in the orbit
  std::size_t size = 0;
  std::size_t orbit_size = 0;
  std::size_t stabilizer_order = 0;
  bool self_complementary = false;
  bool rigid = false;
  std::optional<PolarityClass> polarity;   // affine groups, self-complementary records
  std::size_t complementing_elements = 0;  // #g with g(A) = complement(A)
  std::vector<ElementIndex> stabilizer;    // of the canonical mask
};

/// All sizes, or exactly one subset size.
struct SizeFilter {
  std::optional<std::size_t> exactly;
  static SizeFilter all() { return {}; }
  static SizeFilter size(std::size_t k) { return {k}; }
};

namespace detail {

/// Applies domain permutations to bitmasks through per-byte lookup tables.
class MaskAction {
 public:
  explicit MaskAction(const FiniteGroup& G) : m_(G.domain_size()), chunks_((m_ + 7) / 8) {
    tables_.resize(G.order() * chunks_ * 256);
    for (ElementIndex g = 0; g < G.order(); ++g) {
      const auto perm = G.domain_action(g);
      for (std::size_t c = 0; c < chunks_; ++c)
        for (unsigned byte = 0; byte < 256; ++byte) {
          Mask img = 0;
          for (unsigned b = 0; b < 8; ++b) {
            const std::size_t x = c * 8 + b;
            if (x < m_ && (byte >> b) & 1U) img |= Mask{1} << perm[x];
          }
          tables_[(g * chunks_ + c) * 256 + byte] = img;
        }
    }
  }

  Mask apply(ElementIndex g, Mask a) const {
    Mask img = 0;
    const Mask* t = tables_.data() + static_cast<std::size_t>(g) * chunks_ * 256;
    for (std::size_t c = 0; c < chunks_; ++c, t += 256) img |= t[(a >> (8 * c)) & 0xFFU];
    return img;
  }

 private:
  std::size_t m_;
  std::size_t chunks_;
  std::vector<Mask> tables_;
};

inline Mask next_same_popcount(Mask v) {
  const Mask t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

}  // namespace detail

/// One record per orbit of the filtered family, sorted by (size, canonical).
inline std::vector<PatternClassRecord> classify_orbits(const FiniteGroup& G, SizeFilter filter) {
  const std::size_t m = G.domain_size();
  if (m > (filter.exactly ? kOracleMaxHalf : kOracleMaxAll))
    throw ResourceError("oracle: domain size " + std::to_string(m) + " out of range");
  if (filter.exactly && *filter.exactly > m)
    throw std::invalid_argument("oracle: subset size exceeds domain size");
  const detail::MaskAction act(G);
  const Mask full = m == 32 ? ~Mask{0} : (Mask{1} << m) - 1;
  std::vector<bool> visited(std::size_t{1} << m, false);
  std::vector<PatternClassRecord> out;
  std::vector<Mask> images(G.order());

  auto visit = [&](Mask a) {
    if (visited[a]) return;
    // ascending enumeration: the first unvisited mask is its orbit's minimum
    PatternClassRecord rec;
    rec.canonical = a;
    rec.size = static_cast<std::size_t>(std::popcount(a));
    const Mask comp = full & ~a;
    std::optional<ElementIndex> first_complementing;
    for (ElementIndex g = 0; g < G.order(); ++g) {
      const Mask img = act.apply(g, a);
      images[g] = img;
      if (img == a) rec.stabilizer.push_back(g);
      if (img == comp) {
        ++rec.complementing_elements;
        if (!first_complementing) first_complementing = g;
      }
    }
    std::size_t orbit_size = 0;
    for (auto img : images)
      if (!visited[img]) {
        visited[img] = true;
        ++orbit_size;
      }
    rec.orbit_size = orbit_size;
    rec.stabilizer_order = rec.stabilizer.size();
    rec.rigid = rec.stabilizer_order == 1;
    rec.self_complementary = rec.complementing_elements > 0;
    if (first_complementing && G.affine(*first_complementing))
      rec.polarity = polarity_class(*G.affine(*first_complementing));
    ensure(rec.orbit_size * rec.stabilizer_order == G.order(), "oracle: orbit-stabilizer failed");
    out.push_back(std::move(rec));
  };

  if (filter.exactly) {
    const std::size_t k = *filter.exactly;
    if (k == 0) {
      visit(0);
    } else {
      for (Mask a = (Mask{1} << k) - 1;; a = detail::next_same_popcount(a)) {
        visit(a);
        if (a == (full & ~((Mask{1} << (m - k)) - 1))) break;
      }
    }
  } else {
    for (std::uint64_t a = 0; a <= full; ++a) visit(static_cast<Mask>(a));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::pair(x.size, x.canonical) < std::pair(y.size, y.canonical);
  });
  return out;
}

inline std::vector<PatternClassRecord> classify_orbits(Residue n, SizeFilter filter) {
  return classify_orbits(build_group(GroupSpec::affine(n)), filter);
}

struct StrongBruteforce {
  StrongCountReport report;
  std::vector<PatternClassRecord> strong;  // the strong records themselves
};

/// Rigid self-complementary dichotomies of Z_n, grouped by polarity class.
inline StrongBruteforce strong_bruteforce(Residue n) {
  require_even(n, "strong_bruteforce");
  if (static_cast<std::size_t>(n) > kOracleMaxHalf)
    throw ResourceError("oracle: n = " + std::to_string(n) + " out of range");
  StrongBruteforce out;
  out.report.n = n;
  std::map<AffineElement, PolarityCount> by_polarity;
  for (auto& rec : classify_orbits(n, SizeFilter::size(static_cast<std::size_t>(n / 2)))) {
    if (!(rec.rigid && rec.self_complementary)) continue;
    ensure(rec.complementing_elements == 1, "oracle: strong pattern with several polarities");
    auto& entry = by_polarity[rec.polarity->representative];
    entry.polarity = *rec.polarity;
    entry.count += 1;
    out.report.total += 1;
    out.strong.push_back(std::move(rec));
  }
  for (auto& [rep, entry] : by_polarity) out.report.entries.push_back(entry);
  return out;
}

/// census[i][s] = number of orbits of s-subsets whose stabilizer lies in class i.
using StabilizerCensus = std::vector<std::vector<std::int64_t>>;

inline StabilizerCensus stabilizer_census(const FiniteGroup& G, const SubgroupClassTraversal& T,
                                          SizeFilter filter = SizeFilter::all()) {
  StabilizerCensus census(T.size(), std::vector<std::int64_t>(G.domain_size() + 1, 0));
  for (const auto& rec : classify_orbits(G, filter)) {
    Bitset stab(G.order());
    for (auto g : rec.stabilizer) stab.set(g);
    const std::size_t cls = T.class_of(stab);
    ensure(cls < T.size(), "oracle: stabilizer is not a known subgroup");
    ++census[cls][rec.size];
  }
  return census;
}

}  // namespace dichot

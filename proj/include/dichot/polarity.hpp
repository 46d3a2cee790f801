#pragma once

// Polarities of strong dichotomies: the affine map sending a pattern to its
// complement, identified up to conjugacy in Aff(Z_n).

#include <algorithm>
#include <string>
#include <vector>

#include "dichot/affine.hpp"
#include "dichot/polynomial.hpp"

namespace dichot {

struct PolarityClass {
  AffineElement representative;  // smallest (u, v) in the conjugacy class
  std::string label;             // "e^u.v"
  std::string signed_label;      // v = n-1 shown as -1

  bool contains(const AffineElement& s) const {
    return affine_class_representative(s) == representative;
  }
};

inline PolarityClass polarity_class(const AffineElement& s) {
  const auto rep = affine_class_representative(s);
  return {rep, aff_label(rep), aff_signed_label(rep)};
}

struct PolarityCount {
  PolarityClass polarity;
  Integer count = 0;
  std::size_t class_index = 0;  // into the extended traversal, when known
};

struct StrongCountReport {
  Residue n = 0;
  std::vector<PolarityCount> entries;  // nonzero counts only, ordered by representative
  Integer total = 0;

  std::vector<Integer> sorted_counts() const {
    std::vector<Integer> c;
    for (const auto& e : entries) c.push_back(e.count);
    std::sort(c.begin(), c.end());
    return c;
  }
};

}  // namespace dichot

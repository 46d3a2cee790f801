#pragma once

// Explicit-group JSON input and the on-disk cache of traversals and marks.
//
// Explicit group:  {"domain_size": m, "generators": [{"perm": [...], "swap": false}, ...]}
// Cache entry:     {"descriptor", "version", "group_order", "classes": [[element, ...], ...],
//                   "marks": [[...], ...], "inverse": [["p/q", ...], ...]}
// Rows of "marks" and "inverse" hold the lower triangle only.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dichot/errors.hpp"
#include "dichot/group.hpp"
#include "dichot/lattice.hpp"
#include "dichot/marks.hpp"

#ifndef DICHOT_VERSION
#define DICHOT_VERSION "0.1.0"
#endif

namespace dichot {

using Json = nlohmann::json;

inline GroupSpec group_spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("domain_size") || !j.contains("generators"))
    throw std::invalid_argument("explicit group JSON needs 'domain_size' and 'generators'");
  const auto m = j.at("domain_size").get<std::int64_t>();
  if (m < 1) throw std::invalid_argument("explicit group: domain_size must be positive");
  std::vector<Generator> gens;
  for (const auto& g : j.at("generators")) {
    Generator gen;
    for (const auto& x : g.at("perm")) {
      const auto v = x.get<std::int64_t>();
      if (v < 0) throw std::invalid_argument("explicit group: negative image in perm");
      gen.perm.push_back(static_cast<std::uint32_t>(v));
    }
    gen.swap = g.value("swap", false);
    gens.push_back(std::move(gen));
  }
  auto spec = GroupSpec::explicit_group(static_cast<std::size_t>(m), std::move(gens));
  for (const auto& g : spec.generators)
    if (g.perm.size() != spec.domain_size || !is_permutation(g.perm))
      throw std::invalid_argument("explicit group: generator is not a permutation of the domain");
  return spec;
}

inline Json group_spec_to_json(const GroupSpec& spec) {
  Json gens = Json::array();
  for (const auto& g : spec.generators) gens.push_back({{"perm", g.perm}, {"swap", g.swap}});
  return {{"domain_size", spec.domain_size}, {"generators", gens}};
}

inline GroupSpec load_group_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open group spec " + path.string());
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("malformed group spec " + path.string() + ": " + e.what());
  }
  return group_spec_from_json(j);
}

/// 64-bit FNV-1a of the compact canonical JSON, as 16 hex digits.
inline std::string content_hash(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

/// "aff-6", "affx2-8" or "explicit-<hash>".
inline std::string group_descriptor(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupKind::Affine: return "aff-" + std::to_string(spec.n);
    case GroupKind::AffineSwap: return "affx2-" + std::to_string(spec.n);
    case GroupKind::Explicit: return "explicit-" + content_hash(group_spec_to_json(spec).dump());
  }
  return "unknown";
}

inline std::filesystem::path cache_dir() {
  if (const char* env = std::getenv("DICHOT_CACHE_DIR"); env && *env) return env;
  return ".dichot-cache";
}

inline std::filesystem::path cache_path(const GroupSpec& spec) {
  return cache_dir() / (group_descriptor(spec) + ".marks.json");
}

struct CacheEntry {
  std::string descriptor;
  std::string version = DICHOT_VERSION;
  std::size_t group_order = 0;
  std::vector<std::vector<std::uint32_t>> classes;  // sorted members of each representative
  MarksMatrix marks;
  InverseMarks inverse;
};

inline std::string rational_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

inline Json to_json(const CacheEntry& e) {
  Json marks = Json::array(), inverse = Json::array();
  for (std::size_t i = 0; i < e.marks.size(); ++i) marks.push_back(e.marks.row(i));
  for (std::size_t i = 0; i < e.inverse.size(); ++i) {
    Json row = Json::array();
    for (const auto& q : e.inverse.row(i)) row.push_back(rational_string(q));
    inverse.push_back(std::move(row));
  }
  return {{"descriptor", e.descriptor}, {"version", e.version}, {"group_order", e.group_order},
          {"classes", e.classes},       {"marks", marks},       {"inverse", inverse}};
}

inline CacheEntry cache_entry_from_json(const Json& j) {
  CacheEntry e;
  e.descriptor = j.at("descriptor").get<std::string>();
  e.version = j.at("version").get<std::string>();
  e.group_order = j.at("group_order").get<std::size_t>();
  e.classes = j.at("classes").get<std::vector<std::vector<std::uint32_t>>>();
  const auto& marks = j.at("marks");
  const auto& inverse = j.at("inverse");
  const std::size_t N = e.classes.size();
  if (marks.size() != N || inverse.size() != N)
    throw std::invalid_argument("cache entry: matrix size does not match class count");
  e.marks = MarksMatrix(N);
  e.inverse = InverseMarks(N);
  for (std::size_t i = 0; i < N; ++i) {
    if (marks[i].size() != i + 1 || inverse[i].size() != i + 1)
      throw std::invalid_argument("cache entry: row " + std::to_string(i) + " has wrong length");
    for (std::size_t j2 = 0; j2 <= i; ++j2) {
      e.marks.ref(i, j2) = marks[i][j2].get<std::int64_t>();
      e.inverse.ref(i, j2) = parse_rational(inverse[i][j2].get<std::string>());
    }
  }
  if (!is_inverse(e.marks, e.inverse))
    throw InvariantError("cache entry " + e.descriptor + ": M * B != I after load");
  return e;
}

inline CacheEntry make_cache_entry(const GroupSpec& spec, const FiniteGroup& G,
                                   const SubgroupClassTraversal& T, const MarksMatrix& M,
                                   const InverseMarks& B) {
  CacheEntry e;
  e.descriptor = group_descriptor(spec);
  e.group_order = G.order();
  for (const auto& c : T.classes) e.classes.push_back(c.representative.members.elements());
  e.marks = M;
  e.inverse = B;
  return e;
}

/// Rebuilds the traversal from cached representatives; the order is kept.
inline SubgroupClassTraversal traversal_from_cache(const FiniteGroup& G, const CacheEntry& e) {
  if (e.group_order != G.order()) throw std::invalid_argument("cache entry: group order mismatch");
  std::vector<SubgroupClass> classes;
  for (const auto& members : e.classes) {
    for (auto x : members)
      if (x >= G.order()) throw std::invalid_argument("cache entry: element index out of range");
    Subgroup h = closure(G, members);
    ensure(h.order == members.size(), "cache entry: representative is not a subgroup");
    auto cls = detail::make_class(G, h);
    ensure(cls.representative.members == h.members, "cache entry: representative not canonical");
    classes.push_back(std::move(cls));
  }
  return SubgroupClassTraversal(std::move(classes));
}

inline void write_cache(const std::filesystem::path& path, const CacheEntry& e) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write cache file " + path.string());
  out << to_json(e).dump(1) << '\n';
}

inline CacheEntry read_cache(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read cache file " + path.string());
  Json j;
  in >> j;
  return cache_entry_from_json(j);
}

}  // namespace dichot

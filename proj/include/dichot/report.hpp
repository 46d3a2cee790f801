#pragma once

// Table rows, reference-value comparison and output formatting for the CLI.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dichot/io.hpp"
#include "dichot/oracle.hpp"
#include "dichot/polya.hpp"
#include "dichot/swap.hpp"

#ifndef DICHOT_DATA_DIR
#define DICHOT_DATA_DIR "data"
#endif

namespace dichot {

/// Machine-readable copy of the reference tables (data/reference_tables.json).
struct ReferenceTables {
  struct Table1Row {
    Residue n = 0;
    Integer D, S, R, PIE_bound, Q1_sieve;
  };
  std::map<Residue, Table1Row> table1;
  std::map<Residue, std::vector<Integer>> table2;  // polarity counts as listed
  std::map<Residue, std::map<std::string, std::string>> table1_notes;
  std::map<Residue, std::size_t> extended_class_count;

  static std::filesystem::path default_path() {
    if (const char* env = std::getenv("DICHOT_DATA_DIR"); env && *env)
      return std::filesystem::path(env) / "reference_tables.json";
    return std::filesystem::path(DICHOT_DATA_DIR) / "reference_tables.json";
  }

  static ReferenceTables load(const std::filesystem::path& path = default_path()) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open reference tables " + path.string());
    Json j;
    in >> j;
    ReferenceTables t;
    auto big = [](const Json& v) { return Integer(std::to_string(v.get<std::int64_t>())); };
    for (const auto& r : j.at("table1")) {
      Table1Row row{r.at("n").get<Residue>(), big(r.at("D")),         big(r.at("S")),
                    big(r.at("R")),           big(r.at("PIE_bound")), big(r.at("Q1_sieve"))};
      t.table1[row.n] = row;
    }
    for (const auto& r : j.at("table2")) {
      std::vector<Integer> counts;
      for (const auto& c : r.at("polarity_counts")) counts.push_back(big(c));
      t.table2[r.at("n").get<Residue>()] = counts;
    }
    if (j.contains("notes")) {
      const auto& notes = j.at("notes");
      if (notes.contains("table1"))
        for (const auto& [n, cols] : notes.at("table1").items())
          for (const auto& [col, text] : cols.items())
            t.table1_notes[std::stoll(n)][col] = text.get<std::string>();
      if (notes.contains("extended_class_count"))
        for (const auto& [n, v] : notes.at("extended_class_count").items())
          t.extended_class_count[std::stoll(n)] = v.at("value").get<std::size_t>();
    }
    return t;
  }
};

struct TableRow {
  Residue n = 0;
  Integer D, S;
  std::optional<Integer> R_total, R_dich, PIE_bound, Q1_sieve, strong_total;
  std::optional<Integer> oracle_rigid_total, oracle_rigid_dich, oracle_strong;
  /// Columns whose value differs from the reference table (or the oracle).
  std::vector<std::string> mismatches;
  std::vector<std::string> notes;
};

struct Table1Options {
  Residue max_n = 50;
  bool with_oracle = false;
  bool allow_slow = false;
  Residue max_lattice_n = 50;      // R / sieve columns
  Residue max_strong_n = 28;       // strong_total without allow_slow
};

inline TableRow table1_row(Residue n, const Table1Options& opt, const ReferenceTables& ref) {
  TableRow row;
  row.n = n;
  if (n <= opt.max_lattice_n || opt.allow_slow) {
    const auto pie = pie_report(n);
    row.D = pie.D;
    row.S = pie.S;
    row.R_total = pie.R_total;
    row.R_dich = pie.R_dich;
    row.PIE_bound = pie.bound;
    row.Q1_sieve = pie.sieve;
  } else {
    row.D = dichotomy_count(n);
    row.S = self_complementary_count(n);
  }
  if (n <= opt.max_strong_n || opt.allow_slow) row.strong_total = strong_counts(n).total;

  if (auto it = ref.table1.find(n); it != ref.table1.end()) {
    const auto& r = it->second;
    auto check = [&](const char* col, const std::optional<Integer>& v, const Integer& want) {
      if (v && *v != want) row.mismatches.push_back(col);
    };
    check("D", row.D, r.D);
    check("S", row.S, r.S);
    // the reference R column counts rigid dichotomies
    check("R", row.R_dich, r.R);
    check("PIE_bound", row.PIE_bound, r.PIE_bound);
    check("Q1_sieve", row.Q1_sieve, r.Q1_sieve);
  }
  if (auto it = ref.table2.find(n); it != ref.table2.end() && row.strong_total) {
    Integer want = 0;
    for (const auto& c : it->second) want += c;
    if (*row.strong_total != want) row.mismatches.push_back("strong_total");
  }
  if (auto it = ref.table1_notes.find(n); it != ref.table1_notes.end())
    for (const auto& [col, text] : it->second)
      if (std::find(row.mismatches.begin(), row.mismatches.end(), col) != row.mismatches.end())
        row.notes.push_back(col + ": " + text);

  if (opt.with_oracle) {
    if (static_cast<std::size_t>(n) <= kOracleMaxAll) {
      Integer total = 0, dich = 0;
      for (const auto& rec : classify_orbits(n, SizeFilter::all()))
        if (rec.rigid) {
          total += 1;
          if (rec.size == static_cast<std::size_t>(n / 2)) dich += 1;
        }
      row.oracle_rigid_total = total;
      row.oracle_rigid_dich = dich;
      if (row.R_total && *row.R_total != total) row.mismatches.push_back("oracle:R_total");
      if (row.R_dich && *row.R_dich != dich) row.mismatches.push_back("oracle:R_dich");
    }
    if (static_cast<std::size_t>(n) <= kOracleMaxHalf) {
      row.oracle_strong = strong_bruteforce(n).report.total;
      if (row.strong_total && *row.strong_total != *row.oracle_strong)
        row.mismatches.push_back("oracle:strong_total");
    }
  }
  return row;
}

inline std::string opt_str(const std::optional<Integer>& v) { return v ? v->get_str() : ""; }

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

inline const char* kTable1CsvHeader = "n,D,S,R_total,R_dich,PIE_bound,Q1_sieve,strong_total";

/// Fixed columns, then the mismatching columns (';'-separated) when any.
inline std::string table1_csv_line(const TableRow& r) {
  std::string line = std::to_string(r.n) + "," + r.D.get_str() + "," + r.S.get_str() + "," +
                     opt_str(r.R_total) + "," + opt_str(r.R_dich) + "," + opt_str(r.PIE_bound) +
                     "," + opt_str(r.Q1_sieve) + "," + opt_str(r.strong_total);
  if (!r.mismatches.empty()) line += ",MISMATCH:" + join(r.mismatches, ";");
  return line;
}

inline Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

inline Json opt_json(const std::optional<Integer>& v) { return v ? integer_json(*v) : Json(nullptr); }

inline Json table1_json(const TableRow& r) {
  Json j = {{"n", r.n},
            {"D", integer_json(r.D)},
            {"S", integer_json(r.S)},
            {"R_total", opt_json(r.R_total)},
            {"R_dich", opt_json(r.R_dich)},
            {"PIE_bound", opt_json(r.PIE_bound)},
            {"Q1_sieve", opt_json(r.Q1_sieve)},
            {"strong_total", opt_json(r.strong_total)},
            {"S_upper_bound", integer_json(r.S)},
            {"mismatches", r.mismatches},
            {"notes", r.notes}};
  if (r.oracle_rigid_total) j["oracle_R_total"] = integer_json(*r.oracle_rigid_total);
  if (r.oracle_rigid_dich) j["oracle_R_dich"] = integer_json(*r.oracle_rigid_dich);
  if (r.oracle_strong) j["oracle_strong"] = integer_json(*r.oracle_strong);
  return j;
}

/// "match", "mismatch" or "" (no reference row) for a strong-count breakdown.
inline std::string compare_table2(const StrongCountReport& r, const ReferenceTables& ref) {
  auto it = ref.table2.find(r.n);
  if (it == ref.table2.end()) return "";
  auto want = it->second;
  std::sort(want.begin(), want.end());
  return r.sorted_counts() == want ? "MATCH" : "MISMATCH";
}

/// k = n/2 is 1, 2 or a power of an odd prime.
inline bool in_conjecture_scope(Residue n) {
  Residue k = n / 2;
  if (k == 1 || k == 2) return true;
  if (k % 2 == 0) return false;
  Residue p = 3;
  while (k % p != 0) p += 2;
  while (k % p == 0) k /= p;
  return k == 1;
}

struct ConjectureClassRow {
  std::size_t class_index = 0;
  std::size_t order = 0;
  Integer sieve;              // |Q_i(-1)|
  Integer oracle_self_comp;   // self-complementary dichotomies with stabilizer in class i
};

struct ConjectureReport {
  Residue n = 0;
  std::vector<ConjectureClassRow> classes;
  Integer trivial_sieve, oracle_strong;
  bool in_scope = false;
  bool trivial_agrees() const { return trivial_sieve == oracle_strong; }
};

inline ConjectureReport conjecture_report(Residue n) {
  require_even(n, "conjecture");
  const auto G = build_group(GroupSpec::affine(n));
  const auto T = subgroup_traversal(G);
  const auto Q = inventory_by_substitution(G, T, table_of_marks(G, T));
  std::vector<Integer> oracle(T.size(), 0);
  for (const auto& rec : classify_orbits(G, SizeFilter::size(static_cast<std::size_t>(n / 2)))) {
    if (!rec.self_complementary) continue;
    Bitset stab(G.order());
    for (auto g : rec.stabilizer) stab.set(g);
    oracle[T.class_of(stab)] += 1;
  }
  ConjectureReport r;
  r.n = n;
  r.in_scope = in_conjecture_scope(n);
  for (std::size_t i = 0; i < T.size(); ++i)
    r.classes.push_back({i, T[i].representative.order, sieve_value(Q[i]), oracle[i]});
  r.trivial_sieve = r.classes.back().sieve;
  r.oracle_strong = r.classes.back().oracle_self_comp;
  return r;
}

}  // namespace dichot

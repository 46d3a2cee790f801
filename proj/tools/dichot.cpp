// dichot: table of marks, pattern inventories and strong dichotomy counts.
//
// Exit codes: 0 success, 1 internal invariant failure, 2 usage or tier error.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dichot/io.hpp"
#include "dichot/report.hpp"

#ifndef DICHOT_FIXTURE_DIR
#define DICHOT_FIXTURE_DIR "fixtures"
#endif

namespace {

using namespace dichot;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroupOptions {
  std::string group = "aff";
  Residue n = 0;
  std::string spec_file;

  GroupSpec resolve() const {
    if (group == "klein") return load_group_spec(std::filesystem::path(DICHOT_FIXTURE_DIR) / "klein.json");
    if (group == "explicit") {
      if (spec_file.empty()) throw UsageError("--group explicit needs --spec-file");
      return load_group_spec(spec_file);
    }
    if (n < 1) throw UsageError("--group " + group + " needs --n >= 1");
    if (group == "aff") return GroupSpec::affine(n);
    if (group == "affx2") return GroupSpec::affine_swap(n);
    throw UsageError("unknown group '" + group + "'");
  }
};

void add_group_options(CLI::App* cmd, GroupOptions& g) {
  cmd->add_option("--group", g.group, "klein | aff | affx2 | explicit")
      ->check(CLI::IsMember({"klein", "aff", "affx2", "explicit"}));
  cmd->add_option("--n", g.n, "modulus for aff / affx2");
  cmd->add_option("--spec-file", g.spec_file, "explicit group JSON");
}

void require_tier(Residue n, bool allow_slow) {
  if (n >= 32 && !allow_slow)
    throw UsageError("n = " + std::to_string(n) +
                     " is in the long-running tier of the extended pipeline; pass --allow-slow");
}

struct Lattice {
  GroupSpec spec;
  FiniteGroup group;
  SubgroupClassTraversal traversal;
  MarksMatrix marks;
  InverseMarks inverse;
  bool from_cache = false;
};

/// Loads (traversal, M, B) from the cache when present, else computes and stores it.
Lattice load_or_build(const GroupSpec& spec, bool use_cache, const std::filesystem::path& out) {
  Lattice L{spec, build_group(spec), {}, {}, {}, false};
  const auto path = out.empty() ? cache_path(spec) : out;
  if (use_cache && std::filesystem::exists(path)) {
    auto entry = read_cache(path);
    if (entry.descriptor == group_descriptor(spec)) {
      L.traversal = traversal_from_cache(L.group, entry);
      L.marks = std::move(entry.marks);
      L.inverse = std::move(entry.inverse);
      L.from_cache = true;
      return L;
    }
  }
  L.traversal = subgroup_traversal(L.group);
  L.marks = table_of_marks(L.group, L.traversal);
  L.inverse = checked_inverse(L.marks);
  if (use_cache) write_cache(path, make_cache_entry(spec, L.group, L.traversal, L.marks, L.inverse));
  return L;
}

std::string generator_labels(const FiniteGroup& G, const Subgroup& H) {
  std::string out;
  for (auto g : H.generators) out += (out.empty() ? "" : " ") + G.label(g);
  return "<" + out + ">";
}

int cmd_table1(Residue max_n, bool with_oracle, bool allow_slow, const std::string& format) {
  if (max_n < 2) throw UsageError("--max-n must be >= 2");
  if (max_n > 50 && !allow_slow) throw UsageError("--max-n above 50 needs --allow-slow");
  const auto ref = ReferenceTables::load();
  Table1Options opt;
  opt.max_n = max_n;
  opt.with_oracle = with_oracle;
  opt.allow_slow = allow_slow;
  if (format == "csv") std::cout << kTable1CsvHeader << "\n";
  for (Residue n = 2; n <= max_n; n += 2) {
    const auto row = table1_row(n, opt, ref);
    if (format == "csv") {
      std::cout << table1_csv_line(row) << "\n";
      for (const auto& note : row.notes) std::cerr << "# n=" << n << " " << note << "\n";
    } else {
      std::cout << table1_json(row).dump() << "\n";
    }
  }
  return 0;
}

int cmd_table2(Residue n, bool allow_slow, const std::string& format) {
  require_even(n, "table2");
  require_tier(n, allow_slow);
  const auto ref = ReferenceTables::load();
  const auto report = strong_counts(n);
  const auto check = compare_table2(report, ref);
  if (format == "csv") {
    std::cout << "n,polarity,polarity_signed,count,reference\n";
    for (const auto& e : report.entries)
      std::cout << n << "," << e.polarity.label << "," << e.polarity.signed_label << ","
                << e.count.get_str() << ",\n";
    std::cout << n << ",total,," << report.total.get_str() << "," << check << "\n";
  } else {
    Json rows = Json::array();
    for (const auto& e : report.entries)
      rows.push_back({{"polarity", e.polarity.label},
                      {"polarity_signed", e.polarity.signed_label},
                      {"count", integer_json(e.count)}});
    std::cout << Json{{"n", n}, {"polarities", rows}, {"total", integer_json(report.total)},
                      {"reference", check}}
                     .dump()
              << "\n";
  }
  return 0;
}

int cmd_marks(const GroupOptions& g, const std::string& out, bool use_cache, bool allow_slow) {
  const auto spec = g.resolve();
  if (spec.kind == GroupKind::AffineSwap) require_tier(spec.n, allow_slow);
  const auto t0 = std::chrono::steady_clock::now();
  const auto L = load_or_build(spec, use_cache, out);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << "group " << group_descriptor(spec) << " |G| = " << L.group.order() << "\n";
  std::cout << "N = " << L.traversal.size() << "\n";
  if (L.traversal.size() <= 16) {
    std::cout << "M =\n";
    for (std::size_t i = 0; i < L.marks.size(); ++i) {
      std::cout << " ";
      for (std::size_t j = 0; j < L.marks.size(); ++j) std::cout << " " << L.marks.at(i, j);
      std::cout << "\n";
    }
  }
  if (use_cache) std::cout << (L.from_cache ? "loaded " : "wrote ") << (out.empty() ? cache_path(spec).string() : out) << "\n";
  std::cout << "time " << secs << " s\n";
  return 0;
}

int cmd_inventory(const GroupOptions& g, const std::string& format, bool allow_slow) {
  const auto spec = g.resolve();
  Json rows = Json::array();
  if (spec.kind == GroupKind::AffineSwap) {
    require_even(spec.n, "inventory --group affx2");
    require_tier(spec.n, allow_slow);
    const auto ext = extended_inventory(spec.n);
    for (std::size_t i = 0; i < ext.traversal.size(); ++i) {
      const auto& c = ext.traversal[i];
      rows.push_back({{"class", i},
                      {"order", c.representative.order},
                      {"class_size", c.size()},
                      {"generators", generator_labels(ext.group, c.representative)},
                      {"kind", ext.info[i].kind == SwapKind::Mixed ? "mixed" : "swap-free"},
                      {"fixed", ext.fixed[i].to_string()},
                      {"Q", ext.inventory[i].to_string()}});
    }
  } else {
    const auto G = build_group(spec);
    const auto T = subgroup_traversal(G);
    const auto M = table_of_marks(G, T);
    const auto Q = inventory_by_substitution(G, T, M);
    for (std::size_t i = 0; i < T.size(); ++i) {
      const auto& c = T[i];
      rows.push_back({{"class", i},
                      {"order", c.representative.order},
                      {"class_size", c.size()},
                      {"generators", generator_labels(G, c.representative)},
                      {"P", orbit_index_monomial(c.representative, G).to_string()},
                      {"Q", Q[i].to_string()},
                      {"Q_at_minus_1", sieve_value(Q[i]).get_str()}});
    }
  }
  if (format == "json") {
    for (const auto& r : rows) std::cout << r.dump() << "\n";
  } else {
    const bool ext = spec.kind == GroupKind::AffineSwap;
    std::cout << (ext ? "class,order,class_size,generators,kind,fixed,Q\n"
                      : "class,order,class_size,generators,P,Q,Q_at_minus_1\n");
    for (const auto& r : rows) {
      std::cout << r["class"] << "," << r["order"] << "," << r["class_size"] << ",\""
                << r["generators"].get<std::string>() << "\",";
      if (ext)
        std::cout << r["kind"].get<std::string>() << ",\"" << r["fixed"].get<std::string>() << "\",\""
                  << r["Q"].get<std::string>() << "\"\n";
      else
        std::cout << r["P"].get<std::string>() << ",\"" << r["Q"].get<std::string>() << "\","
                  << r["Q_at_minus_1"].get<std::string>() << "\n";
    }
  }
  return 0;
}

int cmd_conjecture(Residue n) {
  if (static_cast<std::size_t>(n) > kOracleMaxHalf)
    throw UsageError("conjecture: the oracle handles n <= " + std::to_string(kOracleMaxHalf));
  const auto r = conjecture_report(n);
  std::cout << "class,order,abs_Q_at_minus_1,oracle_self_complementary,status\n";
  for (const auto& c : r.classes)
    std::cout << c.class_index << "," << c.order << "," << c.sieve.get_str() << ","
              << c.oracle_self_comp.get_str() << "," << (c.sieve == c.oracle_self_comp ? "equal" : "UNEQUAL")
              << "\n";
  std::cout << "trivial class: " << r.trivial_sieve.get_str() << (r.trivial_agrees() ? " = " : " != ")
            << r.oracle_strong.get_str() << " strong dichotomies";
  if (!r.in_scope) std::cout << " (NOT-IN-CONJECTURE-SCOPE: k = " << n / 2 << " is not 1, 2 or an odd prime power)";
  std::cout << "\n";
  return r.trivial_agrees() || !r.in_scope ? 0 : 1;
}

int cmd_oracle(Residue n, std::optional<std::size_t> size, bool strong, const std::string& format) {
  if (strong) {
    const auto s = strong_bruteforce(n);
    if (format == "json") {
      Json rows = Json::array();
      for (const auto& e : s.report.entries)
        rows.push_back({{"polarity", e.polarity.label}, {"count", integer_json(e.count)}});
      std::cout << Json{{"n", n}, {"polarities", rows}, {"total", integer_json(s.report.total)}}.dump() << "\n";
    } else {
      std::cout << "n,polarity,polarity_signed,count\n";
      for (const auto& e : s.report.entries)
        std::cout << n << "," << e.polarity.label << "," << e.polarity.signed_label << "," << e.count.get_str() << "\n";
      std::cout << n << ",total,," << s.report.total.get_str() << "\n";
    }
    return 0;
  }
  const auto recs = classify_orbits(n, size ? SizeFilter::size(*size) : SizeFilter::all());
  if (format == "csv")
    std::cout << "canonical,size,orbit_size,stabilizer_order,self_complementary,rigid,polarity\n";
  for (const auto& r : recs) {
    std::string cells;
    for (std::size_t x = 0; x < static_cast<std::size_t>(n); ++x)
      if ((r.canonical >> x) & 1U) cells += (cells.empty() ? "" : " ") + std::to_string(x);
    const std::string pol = r.polarity ? r.polarity->label : "";
    if (format == "json") {
      std::cout << Json{{"canonical", cells}, {"size", r.size}, {"orbit_size", r.orbit_size},
                        {"stabilizer_order", r.stabilizer_order}, {"self_complementary", r.self_complementary},
                        {"rigid", r.rigid}, {"polarity", pol}}
                       .dump()
                << "\n";
    } else {
      std::cout << "\"" << cells << "\"," << r.size << "," << r.orbit_size << "," << r.stabilizer_order << ","
                << r.self_complementary << "," << r.rigid << "," << pol << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Table of marks and strong dichotomy enumeration"};
  app.require_subcommand(1);
  std::string format = "csv";
  bool allow_slow = false;
  app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--allow-slow", allow_slow, "permit long-running sizes");

  auto* t1 = app.add_subcommand("table1", "D, S, R, PIE bound, |Q_1(-1)| per even n");
  Residue max_n = 50;
  bool with_oracle = false;
  t1->add_option("--max-n", max_n, "largest even n");
  t1->add_flag("--with-oracle", with_oracle, "cross-check against exhaustive enumeration");

  auto* t2 = app.add_subcommand("table2", "strong dichotomies per polarity");
  Residue n2 = 0;
  t2->add_option("--n", n2, "even n")->required();

  auto* mk = app.add_subcommand("marks", "table of marks and its inverse, cached on disk");
  GroupOptions mk_group;
  std::string out;
  bool no_cache = false;
  add_group_options(mk, mk_group);
  mk->add_option("--out", out, "cache file (default: $DICHOT_CACHE_DIR/<descriptor>.marks.json)");
  mk->add_flag("--no-cache", no_cache, "neither read nor write the cache");

  auto* inv = app.add_subcommand("inventory", "per-class exact-stabilizer inventories");
  GroupOptions inv_group;
  add_group_options(inv, inv_group);

  auto* cj = app.add_subcommand("conjecture", "|Q_i(-1)| against self-complementary counts");
  Residue nc = 0;
  cj->add_option("--n", nc, "even n")->required();

  auto* orc = app.add_subcommand("oracle", "exhaustive orbit classification of subsets of Z_n");
  Residue no = 0;
  std::optional<std::size_t> size;
  bool strong = false;
  orc->add_option("--n", no, "n")->required();
  orc->add_option("--size", size, "only subsets of this size");
  orc->add_flag("--strong", strong, "strong dichotomies grouped by polarity");

  for (auto* sub : {t1, t2, mk, inv, cj, orc}) {
    sub->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_flag("--allow-slow", allow_slow, "permit long-running sizes");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*t1) return cmd_table1(max_n, with_oracle, allow_slow, format);
    if (*t2) return cmd_table2(n2, allow_slow, format);
    if (*mk) return cmd_marks(mk_group, out, !no_cache, allow_slow);
    if (*inv) return cmd_inventory(inv_group, format, allow_slow);
    if (*cj) return cmd_conjecture(nc);
    if (*orc) return cmd_oracle(no, size, strong, format);
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

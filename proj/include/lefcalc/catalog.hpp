#pragma once

#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "lefcalc/error.hpp"
#include "lefcalc/hpd.hpp"
#include "lefcalc/identity.hpp"
#include "lefcalc/join.hpp"
#include "lefcalc/ladder.hpp"

namespace lefcalc {

/// A fact the engine must reproduce on a catalog ladder. `operation` is one of
/// total_rank, length, moderate, hpd_length, hpd_rank, hpd_shape; for hpd_shape
/// `expected` names the catalog entry whose shape the dual must have.
struct ExpectedFact {
  std::string operation;
  std::string expected;
};

struct CatalogEntry {
  std::string name;
  LefschetzLadder ladder;
  std::string provenance;
  std::vector<ExpectedFact> expected_facts;
  std::string dual;  // catalog name of the HPD, decorated where known
};

namespace detail {

inline std::vector<Block> blocks(std::initializer_list<std::pair<const char*, Rank>> list) {
  std::vector<Block> out;
  for (const auto& [label, rank] : list) out.push_back({label, rank});
  return out;
}

inline CatalogEntry proj_space_entry(int m, Rank n) {
  CatalogEntry e;
  e.ladder = proj_space(m, n);
  e.name = e.ladder.name;
  e.provenance = "standard Lefschetz structure of P(W) in P(V), rank W = m, rank V = N";
  e.expected_facts = {{"total_rank", std::to_string(m)}, {"length", std::to_string(m)},
                      {"moderate", m < n ? "true" : "false"}};
  if (m < n) {
    e.dual = "proj_space(" + std::to_string(n - m) + "," + std::to_string(n) + ")";
    e.expected_facts.push_back({"hpd_length", std::to_string(n - m)});
    e.expected_facts.push_back({"hpd_rank", std::to_string(n - m)});
    e.expected_facts.push_back({"hpd_shape", e.dual});
  }
  return e;
}

}  // namespace detail

/// Names accepted by catalog_get; proj_space takes parameters, e.g. proj_space(2,5).
inline std::vector<std::string> catalog_names() {
  return {"proj_space(m,N)", "gr25", "ogr510", "veronese_p2", "clifford_p5"};
}

inline CatalogEntry catalog_get(const std::string& name) {
  static const std::regex proj_re(R"(proj_space\(\s*(\d+)\s*,\s*(\d+)\s*\))");
  std::smatch m;
  if (std::regex_match(name, m, proj_re)) {
    const int dim = std::stoi(m[1]);
    const Rank n = std::stoll(m[2]);
    if (dim < 1 || dim > n) throw InvalidInput("catalog: proj_space(m,N) needs 1 <= m <= N");
    return detail::proj_space_entry(dim, n);
  }
  CatalogEntry e;
  e.name = name;
  if (name == "gr25") {
    e.ladder = make_symmetric_ladder("gr25", 10, {0, 0, 0, 0, 2});
    e.ladder.right_blocks[4] = detail::blocks({{"O", 1}, {"U^v", 1}});
    e.ladder.left_blocks[4] = detail::blocks({{"O", 1}, {"U^v", 1}});
    e.provenance = "Gr(2,5) in P^9, rectangular Lefschetz structure A_i = <O, U^v>, |i| <= 4";
    e.expected_facts = {{"total_rank", "10"}, {"length", "5"}, {"moderate", "true"},
                        {"hpd_length", "5"},  {"hpd_rank", "10"}, {"hpd_shape", "gr25"}};
    e.dual = "gr25";
  } else if (name == "ogr510") {
    e.ladder = make_symmetric_ladder("ogr510", 16, {0, 0, 0, 0, 0, 0, 0, 2});
    e.provenance = "OGr+(5,10) in P^15 (spinor embedding); profile is the unique rectangular HPD fixed point of rank 16";
    e.expected_facts = {{"total_rank", "16"}, {"length", "8"}, {"moderate", "true"},
                        {"hpd_length", "8"},  {"hpd_rank", "16"}, {"hpd_shape", "ogr510"}};
    e.dual = "ogr510";
  } else if (name == "veronese_p2") {
    e.ladder = make_symmetric_ladder("veronese_p2", 6, {1, 1});
    e.ladder.right_blocks[0] = detail::blocks({{"O(1)", 1}});
    e.ladder.right_blocks[1] = detail::blocks({{"O", 1}});
    e.provenance = "P^2 in P^5 by the double Veronese embedding, A_0 = <O, O(1)>, A_1 = <O>";
    e.expected_facts = {{"total_rank", "3"}, {"length", "2"}, {"moderate", "true"},
                        {"hpd_length", "5"}, {"hpd_rank", "9"}, {"hpd_shape", "clifford_p5"}};
    e.dual = "clifford_p5";
  } else if (name == "clifford_p5") {
    e.ladder = make_left_ladder("clifford_p5", 6, {1, 1, 0, 0, 0});
    e.ladder.left_blocks[4] = detail::blocks({{"Cl0", 4}});
    e.ladder.left_blocks[3] = detail::blocks({{"Cl-1", 4}});
    e.provenance = "Perf(P^5, Cl0): B_-4 = <Cl0>, B_i = <Cl-1, Cl0> for -3 <= i <= 0; Cl0 = O + (wedge^2 W)(-1) has rank 4";
    e.expected_facts = {{"total_rank", "9"}, {"length", "5"}, {"moderate", "true"},
                        {"hpd_length", "2"}, {"hpd_rank", "3"}, {"hpd_shape", "veronese_p2"}};
    e.dual = "veronese_p2";
  } else {
    throw InvalidInput("unknown catalog entry '" + name + "'");
  }
  return e;
}

/// The catalog's own ladder for the HPD of `l`, when `l` is a catalog entry.
inline std::optional<LefschetzLadder> catalog_dual(const LefschetzLadder& l) {
  try {
    auto e = catalog_get(l.name);
    if (e.dual.empty() || !e.ladder.same_shape(l)) return std::nullopt;
    return catalog_get(e.dual).ladder;
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
}

/// Entries checked by a default catalog run.
inline std::vector<CatalogEntry> default_catalog() {
  std::vector<CatalogEntry> out;
  for (const char* n : {"proj_space(2,5)", "gr25", "ogr510", "veronese_p2", "clifford_p5"}) out.push_back(catalog_get(n));
  return out;
}

inline IdentityRecord evaluate_fact(const CatalogEntry& e, const ExpectedFact& f) {
  const auto& l = e.ladder;
  const std::string name = e.name + ": " + f.operation;
  try {
    if (f.operation == "total_rank") return {name, show(total_rank(l)), f.expected, show(total_rank(l)) == f.expected};
    if (f.operation == "length") return {name, show(l.length()), f.expected, show(l.length()) == f.expected};
    if (f.operation == "moderate") return {name, show(is_moderate(l)), f.expected, show(is_moderate(l)) == f.expected};
    if (f.operation == "hpd_length") return {name, show(hpd_length(l)), f.expected, show(hpd_length(l)) == f.expected};
    if (f.operation == "hpd_rank") return {name, show(hpd_rank(l)), f.expected, show(hpd_rank(l)) == f.expected};
    if (f.operation == "hpd_shape") {
      const auto got = hpd_shape(l).ladder;
      const auto want = catalog_get(f.expected).ladder;
      return {name + " = " + f.expected, show_shape(got), show_shape(want), got.same_shape(want)};
    }
  } catch (const Error& ex) {
    return {name, std::string("error: ") + ex.what(), f.expected, false};
  }
  return {name, "unknown operation", f.expected, false};
}

struct CatalogReport {
  std::vector<IdentityRecord> records;
  std::size_t failures = 0;
  bool ok() const noexcept { return failures == 0; }
};

/// Every expected fact, the HPD identities of each entry, and the join and
/// commute identities of every ordered pair of moderate entries.
inline CatalogReport catalog_verify(const std::vector<CatalogEntry>& entries) {
  CatalogReport rep;
  auto add = [&](IdentityRecord r) {
    if (!r.pass) ++rep.failures;
    rep.records.push_back(std::move(r));
  };
  auto guarded = [&](const std::string& what, auto&& fn) {
    try {
      fn();
    } catch (const Error& ex) {
      add({what, std::string("error: ") + ex.what(), "", false});
    }
  };
  for (const auto& e : entries) {
    for (const auto& f : e.expected_facts) add(evaluate_fact(e, f));
    if (is_moderate(e.ladder))
      guarded(e.name + ": hpd identities", [&] {
        for (auto& r : hpd_identities(e.ladder, hpd_shape(e.ladder))) add(std::move(r));
      });
  }
  for (const auto& a : entries)
    for (const auto& b : entries) {
      guarded("J(" + a.name + "," + b.name + ")", [&] {
        for (auto& r : categorical_join(a.ladder, b.ladder).diagnostics)
          if (!r.pass) add(std::move(r));
        add(check_equal("J(" + a.name + "," + b.name + ") = J(" + b.name + "," + a.name + ") as shapes",
                        show_shape(join_ladder(a.ladder, b.ladder)), show_shape(join_ladder(b.ladder, a.ladder))));
        if (is_moderate(a.ladder) && is_moderate(b.ladder)) add(check_hpd_join_commute(a.ladder, b.ladder).record);
      });
    }
  return rep;
}

}  // namespace lefcalc

#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lefcalc/catalog.hpp"
#include "lefcalc/error.hpp"
#include "lefcalc/hpd.hpp"
#include "lefcalc/io.hpp"
#include "lefcalc/join.hpp"
#include "lefcalc/projection.hpp"
#include "lefcalc/random.hpp"
#include "lefcalc/render.hpp"
#include "lefcalc/sections.hpp"

namespace lefcalc::cli {

using io::json;

enum class Exit : int { ok = 0, identity_failed = 1, usage = 2 };

/// A ladder argument after loading; catalog refs carry their decorated dual.
struct LoadedLadder {
  LefschetzLadder ladder;
  std::optional<LefschetzLadder> dual;
};

namespace detail {

inline std::string slurp(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline LoadedLadder load(const std::string& ref, std::istream& in, bool validate = true) {
  LoadedLadder out;
  if (ref.size() > 1 && ref.front() == '@') {
    out.ladder = catalog_get(ref.substr(1)).ladder;
    out.dual = catalog_dual(out.ladder);
    return out;
  }
  std::string bytes;
  if (ref == "-") {
    bytes = slurp(in);
  } else {
    std::ifstream f(ref, std::ios::binary);
    if (!f) throw InvalidInput("cannot read ladder file '" + ref + "'");
    bytes = slurp(f);
  }
  out.ladder = io::parse_ladder(bytes, validate);
  return out;
}

inline json sections_json(const SectionPair& sp) {
  json out;
  out["lhs"] = io::to_json(sp.lhs, sp.ladders);
  out["rhs"] = io::to_json(sp.rhs, sp.ladders);
  out["equation"] = sp.lhs_unknown + " ~ " + sp.rhs_unknown;
  out["parameters"] = {{"s", sp.params.s}, {"r", sp.params.r}, {"m", sp.params.m}, {"n", sp.params.n}};
  out["lhs_tail_size"] = sp.lhs_tail_size();
  out["rhs_tail_size"] = sp.rhs_tail_size();
  out["summary"] = sp.is_pure_equivalence()
                       ? std::string("pure equivalence: no tail components on either side")
                       : "lhs tail " + std::to_string(sp.lhs_tail_size()) + " components, rhs tail " +
                             std::to_string(sp.rhs_tail_size()) + " components";
  return out;
}

inline json projected_json(const ProjectedLadder& p) {
  std::vector<std::string> right, left;
  for (const auto& e : p.right) right.push_back(e.str());
  for (const auto& e : p.left) left.push_back(e.str());
  return {{"name", p.name},
          {"source", p.source.name},
          {"source_rank", p.source_rank},
          {"target_rank", p.target_rank},
          {"unknown", p.unknown},
          {"length", p.length()},
          {"right_component_ranks", right},
          {"left_component_ranks", left},
          {"total_rank", p.total_rank().str()}};
}

// Human-readable projection of a report: scalars, then identities, then art.
inline void write_text(const json& rep, std::ostream& out) {
  for (const auto& [key, v] : rep.items()) {
    if (key == "identities" || key == "render") continue;
    out << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
  if (rep.contains("identities"))
    for (const auto& r : rep["identities"])
      out << (r["pass"].get<bool>() ? "[PASS] " : "[FAIL] ") << r["name"].get<std::string>() << ": "
          << r["lhs"].get<std::string>() << " vs " << r["rhs"].get<std::string>() << "\n";
  if (rep.contains("render"))
    for (const auto& line : rep["render"]) out << line.get<std::string>() << "\n";
}

inline std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace detail

/// Runs one lefcalc invocation. `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"lefcalc: Lefschetz ladder calculator (joins, HPD shapes, sections)", "lefcalc"};
  app.require_subcommand(1);

  std::vector<std::string> refs;
  Rank corank = 0, w_rank = 0, target_rank = 0, ambient = 0;
  std::string side_name = "right";
  std::uint64_t seed = 1;
  int random_count = 0;
  bool as_text = false, as_json = false, render = false;

  auto common = [&](CLI::App* sub, bool positional_required) {
    auto* opt = sub->add_option("ladders", refs, "ladder files, '@catalog_name' or '-' for stdin");
    if (positional_required) opt->required();
    sub->add_flag("--json", as_json, "JSON report (default)");
    sub->add_flag("--text", as_text, "human-readable report");
    sub->add_flag("--render", render, "include ASCII grid art");
    sub->add_option("--ambient", ambient, "override the ambient rank of the first ladder");
    return sub;
  };
  auto* validate = common(app.add_subcommand("validate", "check ladder invariants"), true);
  auto* join = common(app.add_subcommand("join", "categorical join of two ladders"), true);
  auto* hpd = common(app.add_subcommand("hpd", "HPD shape of a moderate ladder"), true);
  auto* commute = common(app.add_subcommand("check-commute", "hpd(J(A,B)) = J(hpd A, hpd B)"), false);
  commute->add_option("--random", random_count, "check K random pairs instead of the given ladders");
  commute->add_option("--seed", seed, "seed for --random");
  auto* involution = common(app.add_subcommand("check-involution", "hpd(hpd A) = A on shapes"), true);
  auto* section = common(app.add_subcommand("section", "linear section, or HPD section pair with -r"), true);
  section->add_option("-s,--corank", corank, "corank of L");
  section->add_option("-r,--w-rank", w_rank, "rank of L for the HPD pair");
  section->add_option("--side", side_name, "right|left")->check(CLI::IsMember({"right", "left"}));
  auto* nonlinear = common(app.add_subcommand("nonlinear", "nonlinear HPD of two ladders"), true);
  nonlinear->add_option("-r,--w-rank", w_rank, "rank of W")->required();
  auto* iterated = common(app.add_subcommand("iterated", "iterated nonlinear HPD"), true);
  iterated->add_option("-r,--w-rank", w_rank, "rank of W")->required();
  auto* project = common(app.add_subcommand("project", "Lefschetz structure of a linear projection"), true);
  project->add_option("--target-rank", target_rank, "rank of V")->required();
  auto* catalog = common(app.add_subcommand("catalog", "export and verify catalog entries"), false);
  auto* render_cmd = common(app.add_subcommand("render", "ASCII primitive grid of a join"), true);
  render_cmd->add_option("--side", side_name, "right|left|both")->check(CLI::IsMember({"right", "left", "both"}));

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::Success&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "lefcalc: " << e.what() << "\n";
    return static_cast<int>(Exit::usage);
  }
  if (as_json && as_text) {
    err << "lefcalc: --json and --text are exclusive\n";
    return static_cast<int>(Exit::usage);
  }

  auto need = [&](std::size_t lo, std::size_t hi) {
    if (refs.size() < lo || refs.size() > hi)
      throw InvalidInput("expected " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi)) +
                         " ladder arguments, got " + std::to_string(refs.size()));
  };
  auto load_all = [&](bool validate_first = true) {
    std::vector<LoadedLadder> ls;
    for (std::size_t k = 0; k < refs.size(); ++k) {
      auto l = detail::load(refs[k], in, validate_first || k > 0);
      if (k == 0 && ambient != 0) {
        l.ladder.ambient_rank = ambient;
        l.dual.reset();
        if (validate_first) require_valid(l.ladder);
      }
      ls.push_back(std::move(l));
    }
    return ls;
  };

  json rep;
  std::vector<IdentityRecord> ids;
  std::string art;
  try {
    if (*validate) {
      need(1, 1);
      auto l = load_all(false).front().ladder;
      const auto v = validate_ladder(l);
      rep["command"] = "validate";
      rep["ladder"] = io::ladder_to_json(l);
      rep["valid"] = v.valid();
      rep["violations"] = v.violations;
      if (v.valid()) rep["ladder"] = io::ladder_summary(l);
      ids.push_back(check_equal("ladder invariants hold", v.valid(), true));
    } else if (*join) {
      need(2, 2);
      auto ls = load_all();
      const auto j = categorical_join(ls[0].ladder, ls[1].ladder);
      rep["command"] = "join";
      rep["ladder"] = io::ladder_summary(j.ladder);
      rep["right_grid"] = io::to_json(j.grid);
      rep["left_grid"] = io::to_json(j.left_grid);
      rep["resolved_join"] = io::to_json(j.resolved_presentation);
      ids = j.diagnostics;
      if (render) art = render_join(j);
    } else if (*hpd) {
      need(1, 1);
      auto l = load_all().front();
      const auto h = hpd_shape(l.ladder);
      rep["command"] = "hpd";
      rep["input"] = io::ladder_summary(l.ladder);
      rep["hpd"] = io::ladder_summary(h.ladder);
      rep["hpd_length"] = h.length;
      rep["hpd_rank"] = h.rank;
      rep["shape_source"] = h.shape_source;
      rep["notes"] = h.notes;
      ids = hpd_identities(l.ladder, h);
      if (l.dual)
        ids.push_back({"hpd shape = catalog dual " + l.dual->name, show_shape(h.ladder), show_shape(*l.dual),
                       h.ladder.same_shape(*l.dual)});
    } else if (*commute) {
      rep["command"] = "check-commute";
      if (random_count > 0) {
        if (!refs.empty()) throw InvalidInput("--random takes no ladder arguments");
        std::mt19937_64 rng(seed);
        for (int k = 0; k < random_count; ++k) {
          auto a = random_moderate_ladder(rng, {}, "A" + std::to_string(k));
          auto b = random_moderate_ladder(rng, {}, "B" + std::to_string(k));
          auto rec = check_hpd_join_commute(a, b).record;
          rec.name = "#" + std::to_string(k) + " " + show_shape(a) + " ; " + show_shape(b) + ": " + rec.name;
          ids.push_back(std::move(rec));
        }
        rep["random"] = random_count;
        rep["seed"] = seed;
      } else {
        need(2, 2);
        auto ls = load_all();
        const auto c = check_hpd_join_commute(ls[0].ladder, ls[1].ladder);
        rep["hpd_of_join"] = io::ladder_summary(c.hpd_of_join);
        rep["join_of_hpds"] = io::ladder_summary(c.join_of_hpds);
        ids.push_back(c.record);
      }
    } else if (*involution) {
      need(1, 1);
      auto l = load_all().front().ladder;
      rep["command"] = "check-involution";
      rep["ladder"] = io::ladder_summary(l);
      rep["hpd"] = io::ladder_summary(hpd_shape(l).ladder);
      ids.push_back(check_hpd_involution(l));
    } else if (*section) {
      need(1, 2);
      auto ls = load_all();
      rep["command"] = "section";
      if (w_rank != 0 && corank != 0) throw InvalidInput("give either --corank or --w-rank, not both");
      if (ls.size() == 2) {
        if (w_rank == 0) throw InvalidInput("a join section needs --w-rank");
        const auto sp = join_section_pair(ls[0].ladder, ls[1].ladder, w_rank, ls[0].dual, ls[1].dual);
        rep["sections"] = detail::sections_json(sp);
        ids = sp.identities;
      } else if (w_rank != 0) {
        const auto sp = hpd_section_pair(ls[0].ladder, w_rank, ls[0].dual);
        rep["sections"] = detail::sections_json(sp);
        ids = sp.identities;
      } else {
        if (corank == 0) throw InvalidInput("section needs --corank or --w-rank");
        const auto& l = ls[0].ladder;
        const auto p = linear_section(l, corank, side_name == "left" ? Side::left : Side::right);
        rep["section"] = io::to_json(p, {{l.name, l}});
        const Rank tail = std::max<Rank>(0, l.length() - corank);
        ids.push_back(check_equal("tail count = max(0, m - s)", static_cast<Rank>(p.size() - 1), tail));
      }
    } else if (*nonlinear || *iterated) {
      need(2, *nonlinear ? 2 : 64);
      auto ls = load_all();
      std::vector<LefschetzLadder> ladders;
      std::vector<std::optional<LefschetzLadder>> duals;
      for (const auto& l : ls) {
        ladders.push_back(l.ladder);
        duals.push_back(l.dual);
      }
      const bool pair = *nonlinear && ladders[0].ambient_rank == ladders[1].ambient_rank &&
                        w_rank == ladders[0].ambient_rank;
      const auto sp = pair ? nonlinear_pair(ladders[0], ladders[1], duals[0], duals[1])
                           : iterated_nonlinear(ladders, w_rank, duals);
      rep["command"] = *nonlinear ? "nonlinear" : "iterated";
      rep["sections"] = detail::sections_json(sp);
      ids = sp.identities;
    } else if (*project) {
      need(1, 2);
      auto ls = load_all();
      rep["command"] = "project";
      if (ls.size() == 1) {
        const auto& l = ls[0].ladder;
        const auto p = blowup_lefschetz(l, l.ambient_rank, target_rank);
        rep["projected"] = detail::projected_json(p);
        ids = projection_identities(p);
      } else {
        const auto p = projected_join(ls[0].ladder, ls[1].ladder, target_rank);
        rep["projected"] = detail::projected_json(p);
        if (is_moderate(ls[0].ladder) && is_moderate(ls[1].ladder) && ls[0].ladder.strong.right &&
            ls[1].ladder.strong.right) {
          const auto st = projected_join_hpd(ls[0].ladder, ls[1].ladder, target_rank);
          rep["hpd_statement"] = {{"lhs", st.lhs},
                                  {"rhs", st.rhs},
                                  {"same_ambient", st.same_ambient},
                                  {"lhs_hpd_length", st.lhs_hpd_length},
                                  {"factor_hpd_lengths", st.factor_hpd_lengths},
                                  {"dual_join_length", st.dual_join_length},
                                  {"base_change_corank", st.base_change_corank}};
          ids = st.identities;
        } else {
          ids = projection_identities(p);
        }
      }
    } else if (*catalog) {
      std::vector<CatalogEntry> entries;
      if (refs.empty()) {
        entries = default_catalog();
      } else {
        for (const auto& r : refs) entries.push_back(catalog_get(r.size() > 1 && r.front() == '@' ? r.substr(1) : r));
      }
      rep["command"] = "catalog";
      json list = json::array();
      for (const auto& e : entries) {
        json facts = json::array();
        for (const auto& f : e.expected_facts) facts.push_back({{"operation", f.operation}, {"expected", f.expected}});
        list.push_back({{"name", e.name},
                        {"ladder", io::ladder_to_json(e.ladder)},
                        {"provenance", e.provenance},
                        {"dual", e.dual},
                        {"expected_facts", facts}});
      }
      rep["entries"] = list;
      auto report = catalog_verify(entries);
      rep["failures"] = report.failures;
      ids = std::move(report.records);
    } else if (*render_cmd) {
      need(2, 2);
      auto ls = load_all();
      const auto j = categorical_join(ls[0].ladder, ls[1].ladder);
      if (side_name == "right")
        out << render_grid(j.grid);
      else if (side_name == "left")
        out << render_grid(j.left_grid);
      else
        out << render_join(j);
      return static_cast<int>(Exit::ok);
    }
  } catch (const Error& e) {
    err << "lefcalc: " << e.what() << "\n";
    return static_cast<int>(Exit::usage);
  } catch (const std::exception& e) {
    err << "lefcalc: " << e.what() << "\n";
    return static_cast<int>(Exit::usage);
  }

  rep["identities"] = io::to_json(ids);
  rep["pass"] = all_pass(ids);
  if (!art.empty()) rep["render"] = detail::lines(art);
  if (as_text)
    detail::write_text(rep, out);
  else
    out << rep.dump(2) << "\n";
  return all_pass(ids) ? static_cast<int>(Exit::ok) : static_cast<int>(Exit::identity_failed);
}

inline int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cin, std::cout, std::cerr);
}

}  // namespace lefcalc::cli

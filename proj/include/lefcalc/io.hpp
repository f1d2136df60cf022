#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lefcalc/category.hpp"
#include "lefcalc/error.hpp"
#include "lefcalc/identity.hpp"
#include "lefcalc/join.hpp"
#include "lefcalc/ladder.hpp"

namespace lefcalc::io {

using nlohmann::json;

namespace detail {

inline Rank require_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ParseError(path, "expected an integer");
  return v.get<Rank>();
}

inline std::vector<Rank> read_primitives(const json& v, const std::string& path) {
  if (!v.is_array()) throw ParseError(path, "expected an array of nonnegative integers");
  std::vector<Rank> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string p = path + "/" + std::to_string(i);
    Rank x = require_int(v[i], p);
    if (x < 0) throw ParseError(p, "primitive ranks must be >= 0");
    out.push_back(x);
  }
  if (out.empty()) throw ParseError(path, "at least one primitive is required");
  return out;
}

inline BlockMap read_block_side(const json& v, const std::string& path) {
  if (!v.is_object()) throw ParseError(path, "expected an object mapping positions to block lists");
  BlockMap out;
  for (const auto& [key, list] : v.items()) {
    const std::string p = path + "/" + key;
    int pos = 0;
    try {
      std::size_t used = 0;
      pos = std::stoi(key, &used);
      if (used != key.size() || pos < 0) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ParseError(p, "block position must be a nonnegative integer");
    }
    if (!list.is_array()) throw ParseError(p, "expected an array of blocks");
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string bp = p + "/" + std::to_string(i);
      const auto& b = list[i];
      if (!b.is_object() || !b.contains("label") || !b["label"].is_string())
        throw ParseError(bp, "block needs a string 'label'");
      Block blk{b["label"].get<std::string>(), 1};
      if (b.contains("rank")) blk.rank = require_int(b["rank"], bp + "/rank");
      if (blk.label.empty()) throw ParseError(bp + "/label", "label must be nonempty");
      if (blk.rank < 0) throw ParseError(bp + "/rank", "rank must be >= 0");
      blocks.push_back(std::move(blk));
    }
    out[pos] = std::move(blocks);
  }
  return out;
}

inline json write_block_side(const BlockMap& m) {
  json out = json::object();
  for (const auto& [pos, blocks] : m) {
    json list = json::array();
    for (const auto& b : blocks) list.push_back({{"label", b.label}, {"rank", b.rank}});
    out[std::to_string(pos)] = std::move(list);
  }
  return out;
}

}  // namespace detail

/// Reads a ladder document; `validate` = false skips the invariant checks.
/// Left primitives are listed q_{1-m}, ..., q_0 and
/// default to the mirror of the right ones.
inline LefschetzLadder ladder_from_json(const json& doc, bool validate = true) {
  if (!doc.is_object()) throw ParseError("", "ladder document must be a JSON object");
  static const std::set<std::string> known = {"name",   "ambient_rank", "right_primitives", "left_primitives",
                                              "strong", "blocks"};
  for (const auto& [key, _] : doc.items())
    if (!known.contains(key)) throw ParseError("/" + key, "unknown field");

  LefschetzLadder l;
  l.name = "ladder";
  if (doc.contains("name")) {
    if (!doc["name"].is_string() || doc["name"].get<std::string>().empty())
      throw ParseError("/name", "expected a nonempty string");
    l.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("ambient_rank")) throw ParseError("/ambient_rank", "missing required field");
  l.ambient_rank = detail::require_int(doc["ambient_rank"], "/ambient_rank");
  if (l.ambient_rank < 1) throw ParseError("/ambient_rank", "ambient_rank must be >= 1");
  if (!doc.contains("right_primitives")) throw ParseError("/right_primitives", "missing required field");
  l.right = detail::read_primitives(doc["right_primitives"], "/right_primitives");
  if (doc.contains("left_primitives")) {
    auto by_index = detail::read_primitives(doc["left_primitives"], "/left_primitives");
    l.left.assign(by_index.rbegin(), by_index.rend());
  }
  if (doc.contains("strong")) {
    const auto& s = doc["strong"];
    if (!s.is_object()) throw ParseError("/strong", "expected an object {right, left}");
    for (const auto& [key, v] : s.items()) {
      if (key != "right" && key != "left") throw ParseError("/strong/" + key, "unknown field");
      if (!v.is_boolean()) throw ParseError("/strong/" + key, "expected a boolean");
      (key == "right" ? l.strong.right : l.strong.left) = v.get<bool>();
    }
  }
  if (doc.contains("blocks")) {
    const auto& b = doc["blocks"];
    if (!b.is_object()) throw ParseError("/blocks", "expected an object {right, left}");
    for (const auto& [key, v] : b.items()) {
      if (key == "right")
        l.right_blocks = detail::read_block_side(v, "/blocks/right");
      else if (key == "left")
        l.left_blocks = detail::read_block_side(v, "/blocks/left");
      else
        throw ParseError("/blocks/" + key, "unknown field");
    }
  }
  l = symmetric_completion(std::move(l));
  if (validate) require_valid(l);
  return l;
}

inline LefschetzLadder parse_ladder(std::string_view bytes, bool validate = true) {
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("malformed JSON: ") + e.what());
  }
  return ladder_from_json(doc, validate);
}

/// Canonical document: every field present, left side always explicit.
inline json ladder_to_json(const LefschetzLadder& l) {
  json doc;
  doc["name"] = l.name;
  doc["ambient_rank"] = l.ambient_rank;
  doc["right_primitives"] = l.right;
  doc["left_primitives"] = std::vector<Rank>(l.left.rbegin(), l.left.rend());
  doc["strong"] = {{"right", l.strong.right}, {"left", l.strong.left}};
  if (!l.right_blocks.empty() || !l.left_blocks.empty())
    doc["blocks"] = {{"right", detail::write_block_side(l.right_blocks)},
                     {"left", detail::write_block_side(l.left_blocks)}};
  return doc;
}

inline std::string serialize_ladder(const LefschetzLadder& l) { return ladder_to_json(l).dump(2); }

/// Ladder plus derived component ranks, for reports.
inline json ladder_summary(const LefschetzLadder& l) {
  json doc = ladder_to_json(l);
  doc["length"] = l.length();
  doc["moderate"] = is_moderate(l);
  doc["right_component_ranks"] = suffix_sums(l.right);
  // outward from the center: A_0, A_-1, ...
  doc["left_component_ranks"] = suffix_sums(l.left);
  doc["left_component_ranks_by_index"] = left_heights_by_index(l);
  doc["total_rank"] = total_rank(l);
  return doc;
}

inline json to_json(const IdentityRecord& r) {
  return {{"name", r.name}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"pass", r.pass}};
}

inline json to_json(const std::vector<IdentityRecord>& rs) {
  json out = json::array();
  for (const auto& r : rs) out.push_back(to_json(r));
  return out;
}

inline json to_json(const SodPresentation& p, const LadderRegistry& reg = {}) {
  json comps = json::array();
  for (const auto& c : p.components)
    comps.push_back({{"expr", c.expr.str()},
                     {"rank", rank_of(c.expr, reg).str()},
                     {"twist", to_string(c.twist)},
                     {"origin", c.origin}});
  return {{"ambient", p.ambient}, {"components", comps}, {"rank", rank_of(p, reg).str()}};
}

inline json to_json(const PrimitiveGrid& g) {
  json cells = json::array();
  for (const auto& [pos, c] : g.cells)
    cells.push_back({{"row", pos.first}, {"col", pos.second}, {"j", g.diagonal(pos.first, pos.second)},
                     {"rank", c.rank.str()}, {"label", c.label}});
  return {{"side", to_string(g.side)}, {"rows", g.rows}, {"cols", g.cols}, {"cells", cells}};
}

}  // namespace lefcalc::io

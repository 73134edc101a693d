// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Informledge Contributors

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ils/error.hpp"
#include "ils/model.hpp"

namespace ils {

/// Performance-strand settings attached to a relation name.
struct RelationRule {
  Inclusivity inclusivity = Inclusivity::Inclusive;
  Additivity additivity = Additivity::Additive;
  friend bool operator==(const RelationRule&, const RelationRule&) = default;
};

/// Rulebook of relation names that may join two nodes. A relation missing
/// from the table cannot be used to link anything.
class RelationTable {
 public:
  void add(const std::string& name, RelationRule rule) {
    if (!is_relation_name(name)) {
      throw Error(ErrorCode::BadValue, "relation name '" + name +
                                           "' is not an uppercase identifier");
    }
    if (!rules_.emplace(name, rule).second) {
      throw Error(ErrorCode::DuplicateRelation, name);
    }
  }

  std::optional<RelationRule> find(std::string_view name) const {
    auto it = rules_.find(std::string(name));
    if (it == rules_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(std::string_view name) const { return find(name).has_value(); }

  const RelationRule& at(std::string_view name) const {
    auto it = rules_.find(std::string(name));
    if (it == rules_.end()) {
      throw Error(ErrorCode::UnknownRelation, std::string(name));
    }
    return it->second;
  }

  std::size_t size() const noexcept { return rules_.size(); }
  bool empty() const noexcept { return rules_.empty(); }
  const std::map<std::string, RelationRule, std::less<>>& rules() const noexcept {
    return rules_;
  }

  friend bool operator==(const RelationTable&, const RelationTable&) = default;

 private:
  std::map<std::string, RelationRule, std::less<>> rules_;
};

namespace detail {

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

inline std::vector<std::string_view> lines(std::string_view text) {
  auto out = split(text, '\n');
  if (!out.empty() && out.back().empty()) out.pop_back();
  for (auto& l : out) {
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
  }
  return out;
}

}  // namespace detail

/// Parses `NAME<TAB>inclusive|exclusive<TAB>additive|subtractive` lines.
/// Blank lines and lines starting with '#' are skipped.
inline RelationTable load_relation_table(std::string_view text) {
  RelationTable table;
  std::size_t lineno = 0;
  for (std::string_view raw : detail::lines(text)) {
    ++lineno;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    const auto where = "line " + std::to_string(lineno);
    const auto fields = detail::split(line, '\t');
    if (fields.size() != 3) {
      throw Error(ErrorCode::BadValue,
                  where + ": expected 3 tab-separated fields, got " +
                      std::to_string(fields.size()));
    }
    const auto inc = parse_inclusivity(trim(fields[1]));
    const auto add = parse_additivity(trim(fields[2]));
    if (!inc) {
      throw Error(ErrorCode::BadValue,
                  where + ": '" + std::string(fields[1]) +
                      "' is not inclusive|exclusive");
    }
    if (!add) {
      throw Error(ErrorCode::BadValue,
                  where + ": '" + std::string(fields[2]) +
                      "' is not additive|subtractive");
    }
    const std::string name(trim(fields[0]));
    if (table.contains(name)) {
      throw Error(ErrorCode::DuplicateRelation, where + ": " + name);
    }
    try {
      table.add(name, {*inc, *add});
    } catch (const Error& e) {
      throw Error(e.code(), where + ": " + e.detail());
    }
  }
  return table;
}

/// Relation table used when no file is supplied. HAS_PROPERTY is
/// subtractive, so a thread that reaches a property ends there.
inline constexpr std::string_view kDefaultRelationTable =
    "# name\tinclusivity\tadditivity\n"
    "IS_A\tinclusive\tadditive\n"
    "CONTAINS\tinclusive\tadditive\n"
    "PART_OF\tinclusive\tadditive\n"
    "LIVES_IN\tinclusive\tadditive\n"
    "EATS\tinclusive\tadditive\n"
    "MADE_BY\tinclusive\tadditive\n"
    "SYNONYM_OF\tinclusive\tadditive\n"
    "HAS_PROPERTY\tinclusive\tsubtractive\n"
    "OPPOSITE_OF\texclusive\tadditive\n"
    "DIFFERS_FROM\texclusive\tsubtractive\n";

inline RelationTable default_relation_table() {
  return load_relation_table(kDefaultRelationTable);
}

inline std::string serialize(const RelationTable& table) {
  std::string out;
  for (const auto& [name, rule] : table.rules()) {
    out += name;
    out += '\t';
    out += to_string(rule.inclusivity);
    out += '\t';
    out += to_string(rule.additivity);
    out += '\n';
  }
  return out;
}

}  // namespace ils

// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Informledge Contributors

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ils/error.hpp"
#include "ils/lifecycle.hpp"
#include "ils/model.hpp"
#include "ils/parser.hpp"
#include "ils/relations.hpp"
#include "ils/store.hpp"

namespace ils {

/// Raw counts collected while embedding one statement.
struct EmbedReport {
  std::size_t nodes_in_statement = 0;  // distinct units
  std::size_t nodes_added = 0;
  std::size_t links_traversed = 0;
  std::size_t links_added = 0;

  friend bool operator==(const EmbedReport&, const EmbedReport&) = default;
};

/// Added-node and added-link shares of a statement, held exactly in
/// hundredths of a percent.
struct ScenarioStats {
  std::int64_t nodes_added_centi = 0;
  std::int64_t links_added_centi = 0;

  double nodes_added_pct() const noexcept { return nodes_added_centi / 100.0; }
  double links_added_pct() const noexcept { return links_added_centi / 100.0; }

  friend bool operator==(const ScenarioStats&, const ScenarioStats&) = default;
};

/// `part / whole` as a percentage rounded half-up to hundredths.
constexpr std::int64_t percent_centi(std::size_t part, std::size_t whole) noexcept {
  const auto p = static_cast<std::int64_t>(part);
  const auto w = static_cast<std::int64_t>(whole);
  return (20000 * p + w) / (2 * w);
}

/// "66.67" style rendering of a hundredths value.
inline std::string format_centi(std::int64_t centi) {
  std::string frac = std::to_string(centi % 100);
  if (frac.size() < 2) frac.insert(0, "0");
  return std::to_string(centi / 100) + "." + frac;
}

inline ScenarioStats classify_scenario(const EmbedReport& r) {
  if (r.nodes_in_statement == 0 || r.links_traversed == 0) {
    throw Error(ErrorCode::EmptyReport, "report has a zero node or link count");
  }
  return {percent_centi(r.nodes_added, r.nodes_in_statement),
          percent_centi(r.links_added, r.links_traversed)};
}

struct NodeResolution {
  KnnId id;
  bool created = false;
};

/// Finds the node for `label` in `domain`, creating the domain apex and the
/// node as needed. A new node sits one level below `parent` (level 1 under
/// the apex) in the first free slot.
inline NodeResolution resolve_or_create_node(Store& store, const std::string& label,
                                             const std::string& domain,
                                             std::optional<KnnId> parent = std::nullopt) {
  if (!is_valid_label(label)) {
    throw Error(ErrorCode::InvalidArgument, "bad unit label '" + label + "'");
  }
  const Domain* d = store.find_domain(domain);
  const KnnId apex = d != nullptr ? d->apex : store.add_domain(domain);
  const std::uint32_t l = store.node(apex).coord.l;

  if (auto id = store.find_node(label, l)) return {*id, false};

  std::uint32_t m = 1;
  if (parent) m = store.node(*parent).coord.m + 1;
  const Coordinate coord{l, m, store.next_free_slot(l, m)};
  return {store.add_node(label, coord), true};
}

struct LinkResolution {
  LinkId id;
  bool added = false;
};

/// Link-manager step: joins `src` to `dst` under `relation` unless an
/// active link for that triple already exists. A faded link for the triple
/// is recreated rather than duplicated.
inline LinkResolution build_link(Store& store, KnnId src, KnnId dst,
                                 const std::string& relation,
                                 const RelationTable& table) {
  const Knn& from = store.node(src);
  const Knn& to = store.node(dst);
  if (src == dst) {
    throw Error(ErrorCode::SelfLink, "'" + from.label + "' cannot link to itself");
  }
  const RelationRule& rule = table.at(relation);

  if (auto id = store.find_active_link(src, dst, relation)) return {*id, false};
  if (auto id = store.find_any_link(src, dst, relation)) {
    recreate_link(store, *id);
    store.link_mut(*id).last_used = store.tick();
    return {*id, true};
  }

  auto descriptor = compose_link({Strand{Directional{src, dst}}, Strand{rule.inclusivity},
                                  Strand{rule.additivity},
                                  Strand{integrativity_of(from.coord, to.coord)}},
                                 relation);
  return {store.add_link(std::move(descriptor), 0, store.tick(), LinkState::Active), true};
}

/// Walks the statement as a cursor handing control from unit to unit:
/// resolve unit i, resolve unit i+1 beneath it, then link them. Each hop
/// inspects exactly one link, either the existing one it finds or the one
/// it creates, so `links_traversed` equals the number of hops.
inline EmbedReport embed_statement(Store& store, const Statement& stmt,
                                   const RelationTable& table) {
  validate_statement(stmt, table);
  if (stmt.units.size() < 2 || stmt.relations.size() + 1 != stmt.units.size()) {
    throw Error(ErrorCode::SyntaxError, "statement is not unit (REL unit)+");
  }
  if (!is_valid_label(stmt.domain)) {
    throw Error(ErrorCode::InvalidArgument, "bad domain name '" + stmt.domain + "'");
  }
  for (std::size_t i = 0; i < stmt.units.size(); ++i) {
    if (!is_valid_label(stmt.units[i])) {
      throw Error(ErrorCode::InvalidArgument, "bad unit label '" + stmt.units[i] + "'");
    }
    if (i + 1 < stmt.units.size() && stmt.units[i] == stmt.units[i + 1]) {
      throw Error(ErrorCode::SelfLink,
                  "'" + stmt.units[i] + " " + stmt.relations[i] + " " + stmt.units[i] + "'");
    }
  }

  EmbedReport report;
  report.nodes_in_statement =
      std::set<std::string>(stmt.units.begin(), stmt.units.end()).size();

  auto current = resolve_or_create_node(store, stmt.units[0], stmt.domain);
  report.nodes_added += current.created ? 1 : 0;
  for (std::size_t i = 0; i < stmt.relations.size(); ++i) {
    const auto next = resolve_or_create_node(store, stmt.units[i + 1], stmt.domain, current.id);
    report.nodes_added += next.created ? 1 : 0;
    const auto link = build_link(store, current.id, next.id, stmt.relations[i], table);
    report.links_traversed += 1;
    report.links_added += link.added ? 1 : 0;
    current = next;
  }
  return report;
}

struct EmbedResult {
  EmbedReport report;
  ScenarioStats stats;
};

/// Embeds statements in order. The first failure aborts the run and is
/// reported with the statement's source line.
inline std::vector<EmbedResult> embed_corpus(Store& store,
                                             const std::vector<Statement>& statements,
                                             const RelationTable& table) {
  std::vector<EmbedResult> out;
  out.reserve(statements.size());
  for (const Statement& stmt : statements) {
    try {
      const auto report = embed_statement(store, stmt, table);
      out.push_back({report, classify_scenario(report)});
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(stmt.line) + ": " + e.detail());
    }
  }
  return out;
}

}  // namespace ils

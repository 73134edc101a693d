// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Informledge Contributors

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ils/embedder.hpp"
#include "ils/retriever.hpp"
#include "ils/store.hpp"

namespace ils {

inline constexpr std::string_view kTable2Header =
    "scenario,nodes_in_knowledge,nodes_added_pct,links_traversed,links_added_pct";
inline constexpr std::string_view kConeHeader = "apex,height,levels";

/// Embedding scenarios as CSV, one row per statement (Sc1, Sc2, ...).
inline std::string report_table2(std::span<const EmbedResult> results) {
  std::string out(kTable2Header);
  out += '\n';
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& [r, s] = results[i];
    out += "Sc" + std::to_string(i + 1) + ',' + std::to_string(r.nodes_in_statement) + ',' +
           format_centi(s.nodes_added_centi) + ',' + std::to_string(r.links_traversed) + ',' +
           format_centi(s.links_added_centi) + '\n';
  }
  return out;
}

/// "1:1;2:1;3:1" (level:width, ascending level).
inline std::string format_levels(const Cone& cone) {
  std::string out;
  for (const auto& [level, width] : cone.level_widths) {
    if (!out.empty()) out += ';';
    out += std::to_string(level) + ':' + std::to_string(width);
  }
  return out;
}

inline std::string format_cones_csv(const Store& store, std::span<const Cone> cones) {
  std::string out(kConeHeader);
  out += '\n';
  for (const Cone& c : cones) {
    out += store.node(c.apex).label + ',' + std::to_string(c.height) + ',' + format_levels(c) +
           '\n';
  }
  return out;
}

/// First node carrying `label` (inside `domain` when given).
inline KnnId resolve_apex(const Store& store, std::string_view label,
                          const std::optional<std::string>& domain) {
  const auto ids = resolve_label(store, label, domain);
  if (ids.empty()) {
    throw Error(ErrorCode::UnknownNode,
                "'" + std::string(label) + "'" + (domain ? " in domain " + *domain : ""));
  }
  return ids.front();
}

/// Cone heights for the given apexes, rows in input order. Does not touch
/// usage counters.
inline std::string report_cones(const Store& store, std::span<const std::string> labels,
                                std::size_t max_depth = kDefaultMaxDepth,
                                const std::optional<std::string>& domain = std::nullopt) {
  std::vector<Cone> cones;
  for (const auto& label : labels) {
    cones.push_back(assemble_cone(store, resolve_apex(store, label, domain), max_depth));
  }
  return format_cones_csv(store, cones);
}

}  // namespace ils

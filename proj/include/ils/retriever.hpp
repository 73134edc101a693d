// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Informledge Contributors

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ils/error.hpp"
#include "ils/lifecycle.hpp"
#include "ils/model.hpp"
#include "ils/store.hpp"

namespace ils {

inline constexpr std::size_t kDefaultMaxDepth = 32;

/// A path of nodes joined by links, starting at the query node.
struct Thread {
  std::vector<KnnId> nodes;
  std::vector<LinkId> links;

  friend auto operator<=>(const Thread&, const Thread&) = default;
  friend bool operator==(const Thread&, const Thread&) = default;
};

/// Which links a thread may cross. By default only active inclusive links
/// are followed. Naming a relation restricts expansion to that relation and
/// admits its exclusive links as well.
struct ExpansionFilter {
  std::optional<std::string> relation;

  bool admits(const Link& link) const {
    if (!link.active()) return false;
    if (relation) return link.descriptor.relation == *relation;
    return link.descriptor.inclusivity == Inclusivity::Inclusive;
  }
};

namespace detail {

class ThreadExpander {
 public:
  ThreadExpander(const Store& store, std::size_t max_depth, const ExpansionFilter& filter)
      : store_(store), max_depth_(max_depth), filter_(filter) {}

  std::vector<Thread> run(KnnId start) {
    path_ = Thread{{start}, {}};
    on_path_ = {start};
    descend();
    return std::move(out_);
  }

 private:
  void descend() {
    if (path_.links.size() >= max_depth_) {
      out_.push_back(path_);
      return;
    }
    const auto children = eligible(path_.nodes.back());
    if (children.empty()) {
      out_.push_back(path_);
      return;
    }
    for (const Link* link : children) {
      const KnnId dst = link->descriptor.destination();
      path_.nodes.push_back(dst);
      path_.links.push_back(link->id);
      on_path_.insert(dst);
      if (link->descriptor.additivity == Additivity::Subtractive) {
        out_.push_back(path_);  // the thread stops at a subtractive link
      } else {
        descend();
      }
      on_path_.erase(dst);
      path_.nodes.pop_back();
      path_.links.pop_back();
    }
  }

  // Admissible links to nodes not yet on the path, ordered by destination
  // coordinate, then link id.
  std::vector<const Link*> eligible(KnnId at) const {
    std::vector<const Link*> out;
    for (LinkId id : store_.outgoing(at)) {
      const Link& l = store_.link(id);
      if (filter_.admits(l) && !on_path_.contains(l.descriptor.destination())) {
        out.push_back(&l);
      }
    }
    std::sort(out.begin(), out.end(), [this](const Link* a, const Link* b) {
      const auto& ca = store_.node(a->descriptor.destination()).coord;
      const auto& cb = store_.node(b->descriptor.destination()).coord;
      if (ca != cb) return ca < cb;
      return a->id < b->id;
    });
    return out;
  }

  const Store& store_;
  std::size_t max_depth_;
  const ExpansionFilter& filter_;
  Thread path_;
  std::set<KnnId> on_path_;
  std::vector<Thread> out_;
};

}  // namespace detail

/// Every maximal thread from `start`, in depth-first order. Read-only; see
/// `expand_threads` for the variant that records usage.
inline std::vector<Thread> enumerate_threads(const Store& store, KnnId start,
                                             std::size_t max_depth = kDefaultMaxDepth,
                                             const ExpansionFilter& filter = {}) {
  store.node(start);
  if (max_depth < 1) throw Error(ErrorCode::InvalidArgument, "max_depth must be >= 1");
  return detail::ThreadExpander(store, max_depth, filter).run(start);
}

/// Applies one retrieval batch to the usage counters: the tick advances
/// once, then every node and link on any of the threads is counted once.
inline void record_usage(Store& store, std::span<const Thread> threads) {
  const auto now = store.advance_tick();
  std::set<KnnId> nodes;
  std::set<LinkId> links;
  for (const Thread& t : threads) {
    nodes.insert(t.nodes.begin(), t.nodes.end());
    links.insert(t.links.begin(), t.links.end());
  }
  for (KnnId id : nodes) store.node_usage(id) += 1;
  for (LinkId id : links) touch_link(store, id, now);
}

inline std::vector<Thread> expand_threads(Store& store, KnnId start,
                                          std::size_t max_depth = kDefaultMaxDepth,
                                          const ExpansionFilter& filter = {}) {
  auto threads = enumerate_threads(store, start, max_depth, filter);
  record_usage(store, threads);
  return threads;
}

// ---------------------------------------------------------------------------
// Cones
// ---------------------------------------------------------------------------

/// All threads rooted at one apex. The lone-apex thread of an unlinked node
/// is not a thread of the cone, so such a cone has height 0.
struct Cone {
  KnnId apex;
  std::vector<Thread> threads;
  std::size_t height = 0;
  std::map<std::uint32_t, std::size_t> level_widths;  // level m -> distinct nodes
};

inline Cone cone_from_threads(const Store& store, KnnId apex, std::vector<Thread> threads) {
  Cone cone;
  cone.apex = apex;
  std::erase_if(threads, [](const Thread& t) { return t.links.empty(); });
  cone.threads = std::move(threads);
  cone.height = cone.threads.size();

  std::set<KnnId> members{apex};
  for (const Thread& t : cone.threads) members.insert(t.nodes.begin(), t.nodes.end());
  for (KnnId id : members) cone.level_widths[store.node(id).coord.m] += 1;
  return cone;
}

/// Read-only cone assembly.
inline Cone assemble_cone(const Store& store, KnnId apex,
                          std::size_t max_depth = kDefaultMaxDepth) {
  return cone_from_threads(store, apex, enumerate_threads(store, apex, max_depth));
}

inline Cone build_cone(Store& store, KnnId apex, std::size_t max_depth = kDefaultMaxDepth) {
  return cone_from_threads(store, apex, expand_threads(store, apex, max_depth));
}

struct ConeRow {
  std::string apex_label;
  std::size_t height = 0;
  std::uint32_t level = 0;
  std::size_t width = 0;
  friend bool operator==(const ConeRow&, const ConeRow&) = default;
};

/// One row per populated level of the cone, ascending by level.
inline std::vector<ConeRow> cone_metrics(const Store& store, const Cone& cone) {
  std::vector<ConeRow> rows;
  const auto& label = store.node(cone.apex).label;
  for (const auto& [level, width] : cone.level_widths) {
    rows.push_back({label, cone.height, level, width});
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Queries
// ---------------------------------------------------------------------------

struct DatasetPoint {
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  friend constexpr auto operator<=>(DatasetPoint, DatasetPoint) = default;
};

/// The (m, n) view of a coordinate inside its own domain.
constexpr DatasetPoint dataset_projection(const Coordinate& c) noexcept {
  return {c.m, c.n};
}

/// Nodes labelled `label`, restricted to `domain` when given.
inline std::vector<KnnId> resolve_label(const Store& store, std::string_view label,
                                        const std::optional<std::string>& domain) {
  if (!domain) return store.find_nodes(label);
  const Domain* d = store.find_domain(*domain);
  if (d == nullptr) return {};
  if (auto id = store.find_node(label, d->l)) return {*id};
  return {};
}

/// Looks for a thread that starts at `from_label` and reaches a node
/// labelled `to_label`. Candidate start nodes are tried domain by domain;
/// the first matching thread in expansion order wins, cut at the target.
inline std::optional<Thread> find_thread(Store& store, std::string_view from_label,
                                         std::string_view to_label,
                                         const std::optional<std::string>& domain = std::nullopt,
                                         std::size_t max_depth = kDefaultMaxDepth,
                                         const ExpansionFilter& filter = {}) {
  const auto starts = resolve_label(store, from_label, domain);
  if (starts.empty()) {
    throw Error(ErrorCode::UnknownNode,
                "'" + std::string(from_label) + "'" + (domain ? " in domain " + *domain : ""));
  }
  for (KnnId start : starts) {
    for (const Thread& t : enumerate_threads(store, start, max_depth, filter)) {
      for (std::size_t i = 1; i < t.nodes.size(); ++i) {
        if (store.node(t.nodes[i]).label != to_label) continue;
        Thread hit;
        hit.nodes.assign(t.nodes.begin(), t.nodes.begin() + static_cast<std::ptrdiff_t>(i + 1));
        hit.links.assign(t.links.begin(), t.links.begin() + static_cast<std::ptrdiff_t>(i));
        record_usage(store, std::span<const Thread>(&hit, 1));
        return hit;
      }
    }
  }
  return std::nullopt;
}

/// "Africa -> lion -> strong"
inline std::string format_thread(const Store& store, const Thread& t) {
  std::string out;
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    if (i > 0) out += " -> ";
    out += store.node(t.nodes[i]).label;
  }
  return out;
}

}  // namespace ils

// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Informledge Contributors

#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "ils/error.hpp"
#include "ils/model.hpp"
#include "ils/relations.hpp"

namespace ils {

struct Domain {
  std::string name;
  KnnId apex;
  std::uint32_t l = 0;
  friend bool operator==(const Domain&, const Domain&) = default;
};

/// Node and link tables of one knowledge network.
///
/// Ids are dense and assigned in creation order, so `nodes()[id.index()]`
/// is the node with that id. Every node belongs to exactly one domain (its
/// coordinate `l`), and each source node keeps its outgoing links (its link
/// database) in creation order.
///
/// Mutation is single-writer. Counters and link state may be changed through
/// `node_usage()` and `link_mut()`; structural changes go through
/// `add_domain()`, `add_node()` and `add_link()`, which enforce the store
/// invariants.
class Store {
 public:
  // -- reading --------------------------------------------------------------

  const std::vector<Knn>& nodes() const noexcept { return nodes_; }
  const std::vector<Link>& links() const noexcept { return links_; }
  /// Domains ordered by `l`.
  const std::map<std::uint32_t, Domain>& domains() const noexcept {
    return domains_;
  }
  std::uint64_t tick() const noexcept { return tick_; }

  bool has_node(KnnId id) const noexcept { return id.index() < nodes_.size(); }
  bool has_link(LinkId id) const noexcept { return id.index() < links_.size(); }

  const Knn& node(KnnId id) const {
    if (!has_node(id)) {
      throw Error(ErrorCode::UnknownNode, "no node with id " + std::to_string(id.value));
    }
    return nodes_[id.index()];
  }
  const Link& link(LinkId id) const {
    if (!has_link(id)) {
      throw Error(ErrorCode::UnknownLink, "no link with id " + std::to_string(id.value));
    }
    return links_[id.index()];
  }

  /// Links whose source is `id`, in creation order (active and faded).
  std::span<const LinkId> outgoing(KnnId id) const {
    node(id);
    return outgoing_[id.index()];
  }

  std::optional<KnnId> find_node(std::string_view label, std::uint32_t l) const {
    auto it = by_label_.find(std::pair<std::uint32_t, std::string>(l, std::string(label)));
    if (it == by_label_.end()) return std::nullopt;
    return it->second;
  }

  /// Every node carrying `label`, one per domain, ordered by domain.
  std::vector<KnnId> find_nodes(std::string_view label) const {
    std::vector<KnnId> out;
    for (const auto& [l, d] : domains_) {
      if (auto id = find_node(label, l)) out.push_back(*id);
    }
    return out;
  }

  const Domain* find_domain(std::string_view name) const {
    for (const auto& [l, d] : domains_) {
      if (d.name == name) return &d;
    }
    return nullptr;
  }
  const Domain* domain_of(std::uint32_t l) const {
    auto it = domains_.find(l);
    return it == domains_.end() ? nullptr : &it->second;
  }

  std::optional<KnnId> node_at(const Coordinate& c) const {
    auto it = by_coord_.find(c);
    if (it == by_coord_.end()) return std::nullopt;
    return it->second;
  }

  /// Smallest `n` not taken at level `m` of domain `l`.
  std::uint32_t next_free_slot(std::uint32_t l, std::uint32_t m) const {
    std::uint32_t n = 0;
    for (auto it = by_coord_.lower_bound(Coordinate{l, m, 0});
         it != by_coord_.end() && it->first.l == l && it->first.m == m; ++it) {
      if (it->first.n != n) break;
      ++n;
    }
    return n;
  }

  std::uint32_t next_domain_index() const noexcept {
    return domains_.empty() ? 1 : domains_.rbegin()->first + 1;
  }

  /// The active link for (source, destination, relation), if any.
  std::optional<LinkId> find_active_link(KnnId src, KnnId dst,
                                         std::string_view relation) const {
    return find_link_where(src, dst, relation,
                           [](const Link& l) { return l.active(); });
  }
  /// Any link (active or faded) for the triple; active wins.
  std::optional<LinkId> find_any_link(KnnId src, KnnId dst,
                                      std::string_view relation) const {
    if (auto id = find_active_link(src, dst, relation)) return id;
    return find_link_where(src, dst, relation, [](const Link&) { return true; });
  }

  std::size_t active_link_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(
        links_.begin(), links_.end(), [](const Link& l) { return l.active(); }));
  }

  // -- writing --------------------------------------------------------------

  /// Creates the apex node of a new domain at (next l, 0, 0). The apex is
  /// labelled with the domain name.
  KnnId add_domain(const std::string& name) {
    if (!is_valid_label(name)) {
      throw Error(ErrorCode::InvalidArgument, "bad domain name '" + name + "'");
    }
    if (find_domain(name) != nullptr) {
      throw Error(ErrorCode::InvariantViolation, "domain '" + name + "' exists");
    }
    const auto l = next_domain_index();
    register_domain(name, l);
    return add_node(name, Coordinate{l, 0, 0});
  }

  KnnId add_node(const std::string& label, Coordinate coord, std::uint64_t usage = 0) {
    if (!is_valid_label(label)) {
      throw Error(ErrorCode::InvariantViolation, "bad node label '" + label + "'");
    }
    const Domain* d = domain_of(coord.l);
    if (d == nullptr) {
      throw Error(ErrorCode::InvariantViolation,
                  "node '" + label + "' has l=" + std::to_string(coord.l) +
                      " which belongs to no domain");
    }
    const KnnId id{nodes_.size()};
    if (coord.m == 0 && (coord.n != 0 || d->apex != id)) {
      throw Error(ErrorCode::InvariantViolation,
                  "node '" + label + "' at level 0 is not its domain apex");
    }
    if (by_coord_.contains(coord)) {
      throw Error(ErrorCode::InvariantViolation,
                  "coordinate (" + std::to_string(coord.l) + "," +
                      std::to_string(coord.m) + "," + std::to_string(coord.n) +
                      ") already taken");
    }
    if (find_node(label, coord.l)) {
      throw Error(ErrorCode::InvariantViolation,
                  "label '" + label + "' already used in domain " + d->name);
    }
    nodes_.push_back(Knn{id, label, coord, usage});
    outgoing_.emplace_back();
    by_coord_.emplace(coord, id);
    by_label_.emplace(std::pair<std::uint32_t, std::string>(coord.l, label), id);
    return id;
  }

  /// Persists a link in its source's link database.
  LinkId add_link(LinkDescriptor descriptor, std::uint64_t usage,
                  std::uint64_t last_used, LinkState state) {
    const auto src = descriptor.source();
    const auto dst = descriptor.destination();
    if (!has_node(src) || !has_node(dst)) {
      throw Error(ErrorCode::InvariantViolation,
                  "link endpoint " +
                      std::to_string(has_node(src) ? dst.value : src.value) +
                      " is not a node");
    }
    if (src == dst) {
      throw Error(ErrorCode::SelfLink, "node " + std::to_string(src.value));
    }
    if (!is_relation_name(descriptor.relation)) {
      throw Error(ErrorCode::InvariantViolation,
                  "bad relation name '" + descriptor.relation + "'");
    }
    if (descriptor.integrativity !=
        integrativity_of(nodes_[src.index()].coord, nodes_[dst.index()].coord)) {
      throw Error(ErrorCode::InvariantViolation,
                  "integrativity of link " + std::to_string(src.value) + "->" +
                      std::to_string(dst.value) +
                      " disagrees with its endpoint domains");
    }
    if (state == LinkState::Active &&
        find_active_link(src, dst, descriptor.relation)) {
      throw Error(ErrorCode::InvariantViolation,
                  "second active link " + std::to_string(src.value) + "->" +
                      std::to_string(dst.value) + " " + descriptor.relation);
    }
    const LinkId id{links_.size()};
    links_.push_back(Link{id, std::move(descriptor), usage, last_used, state});
    outgoing_[src.index()].push_back(id);
    return id;
  }

  std::uint64_t& node_usage(KnnId id) {
    node(id);
    return nodes_[id.index()].usage;
  }

  /// Mutable access for lifecycle and usage bookkeeping. Callers must not
  /// change the descriptor.
  Link& link_mut(LinkId id) {
    link(id);
    return links_[id.index()];
  }

  std::uint64_t advance_tick() noexcept { return ++tick_; }
  void set_tick(std::uint64_t t) noexcept { tick_ = t; }

 private:
  friend Store restore(std::string_view text);

  // The next node added becomes the apex of domain `l`.
  void register_domain(const std::string& name, std::uint32_t l) {
    if (l == 0 || domains_.contains(l)) {
      throw Error(ErrorCode::InvariantViolation,
                  "domain index " + std::to_string(l) + " unusable for '" + name + "'");
    }
    domains_.emplace(l, Domain{name, KnnId{nodes_.size()}, l});
  }

  template <typename Pred>
  std::optional<LinkId> find_link_where(KnnId src, KnnId dst,
                                        std::string_view relation,
                                        Pred pred) const {
    if (!has_node(src)) return std::nullopt;
    for (LinkId id : outgoing_[src.index()]) {
      const Link& l = links_[id.index()];
      if (l.descriptor.destination() == dst && l.descriptor.relation == relation &&
          pred(l)) {
        return id;
      }
    }
    return std::nullopt;
  }

  std::vector<Knn> nodes_;
  std::vector<Link> links_;
  std::vector<std::vector<LinkId>> outgoing_;
  std::map<std::uint32_t, Domain> domains_;
  std::map<Coordinate, KnnId> by_coord_;
  std::map<std::pair<std::uint32_t, std::string>, KnnId> by_label_;
  std::uint64_t tick_ = 0;
};

// ---------------------------------------------------------------------------
// System statistics
// ---------------------------------------------------------------------------

struct DomainStats {
  std::string name;
  std::uint32_t l = 0;
  std::size_t nodes = 0;  // knowledge nodes, apex excluded
  friend bool operator==(const DomainStats&, const DomainStats&) = default;
};

/// Whole-system knowledge as the collection of per-domain knowledge.
struct SystemStats {
  std::size_t domain_count = 0;
  std::size_t total_nodes = 0;  // sum of per-domain counts
  std::size_t active_links = 0;
  std::size_t faded_links = 0;
  std::vector<DomainStats> domains;  // ordered by l
};

inline SystemStats system_stats(const Store& store) {
  SystemStats s;
  s.domain_count = store.domains().size();
  std::map<std::uint32_t, std::size_t> per_l;
  for (const Knn& n : store.nodes()) {
    if (!n.coord.is_apex()) ++per_l[n.coord.l];
  }
  for (const auto& [l, d] : store.domains()) {
    s.domains.push_back({d.name, l, per_l[l]});
    s.total_nodes += per_l[l];
  }
  for (const Link& link : store.links()) {
    (link.active() ? s.active_links : s.faded_links) += 1;
  }
  return s;
}

// ---------------------------------------------------------------------------
// ILSSNAP text format
// ---------------------------------------------------------------------------

inline constexpr std::string_view kSnapshotHeader = "ILSSNAP 1";

inline std::string snapshot(const Store& store) {
  std::string out;
  out += kSnapshotHeader;
  out += "\n[nodes]\n";
  for (const Knn& n : store.nodes()) {
    out += std::to_string(n.id.value) + '\t' + n.label + '\t' +
           std::to_string(n.coord.l) + '\t' + std::to_string(n.coord.m) + '\t' +
           std::to_string(n.coord.n) + '\t' + std::to_string(n.usage) + '\n';
  }
  out += "[links]\n";
  for (const Link& l : store.links()) {
    const auto& d = l.descriptor;
    out += std::to_string(l.id.value) + '\t' + std::to_string(d.source().value) +
           '\t' + std::to_string(d.destination().value) + '\t' + d.relation +
           '\t' + std::string(to_string(d.inclusivity)) + '\t' +
           std::string(to_string(d.additivity)) + '\t' +
           std::string(to_string(d.integrativity)) + '\t' +
           std::to_string(l.usage) + '\t' + std::to_string(l.last_used) + '\t' +
           std::string(to_string(l.state)) + '\n';
  }
  out += "[domains]\n";
  std::vector<const Domain*> by_apex;
  for (const auto& [l, d] : store.domains()) by_apex.push_back(&d);
  std::sort(by_apex.begin(), by_apex.end(),
            [](const Domain* a, const Domain* b) { return a->apex < b->apex; });
  for (const Domain* d : by_apex) {
    out += d->name + '\t' + std::to_string(d->apex.value) + '\n';
  }
  return out;
}

namespace detail {

template <typename Int>
Int parse_uint(std::string_view field, std::size_t lineno, const char* what) {
  Int v{};
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, v);
  if (field.empty() || ec != std::errc{} || ptr != end) {
    throw Error(ErrorCode::CorruptRecord,
                "line " + std::to_string(lineno) + ": bad " + what + " '" +
                    std::string(field) + "'");
  }
  return v;
}

}  // namespace detail

/// Rebuilds a store from ILSSNAP text, rejecting (never repairing) input
/// that breaks a store invariant. The lifecycle tick, which the format does
/// not carry, resumes at the latest `last_used`.
inline Store restore(std::string_view text) {
  const auto rows = detail::lines(text);
  if (rows.empty() || rows[0] != kSnapshotHeader) {
    throw Error(ErrorCode::BadHeader,
                "expected '" + std::string(kSnapshotHeader) + "' on line 1");
  }

  struct NodeRow {
    std::size_t line;
    std::string label;
    Coordinate coord;
    std::uint64_t usage;
  };
  struct LinkRow {
    std::size_t line;
    LinkDescriptor descriptor;
    std::uint64_t usage, last_used;
    LinkState state;
  };
  struct DomainRow {
    std::size_t line;
    std::string name;
    std::uint64_t apex;
  };
  std::vector<NodeRow> node_rows;
  std::vector<LinkRow> link_rows;
  std::vector<DomainRow> domain_rows;

  constexpr std::array<std::string_view, 3> kSections = {"[nodes]", "[links]",
                                                         "[domains]"};
  int section = -1;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const std::size_t lineno = i + 1;
    const std::string_view row = rows[i];
    const auto where = "line " + std::to_string(lineno);
    if (section + 1 < static_cast<int>(kSections.size()) &&
        row == kSections[static_cast<std::size_t>(section + 1)]) {
      ++section;
      continue;
    }
    if (section < 0) {
      throw Error(ErrorCode::CorruptRecord, where + ": expected [nodes]");
    }
    const auto f = detail::split(row, '\t');
    if (section == 0) {
      if (f.size() != 6) {
        throw Error(ErrorCode::CorruptRecord, where + ": node row needs 6 fields");
      }
      const auto id = detail::parse_uint<std::uint64_t>(f[0], lineno, "node id");
      if (id != node_rows.size()) {
        throw Error(ErrorCode::CorruptRecord,
                    where + ": node id " + std::to_string(id) + " out of sequence");
      }
      node_rows.push_back(
          {lineno, std::string(f[1]),
           Coordinate{detail::parse_uint<std::uint32_t>(f[2], lineno, "l"),
                      detail::parse_uint<std::uint32_t>(f[3], lineno, "m"),
                      detail::parse_uint<std::uint32_t>(f[4], lineno, "n")},
           detail::parse_uint<std::uint64_t>(f[5], lineno, "usage")});
    } else if (section == 1) {
      if (f.size() != 10) {
        throw Error(ErrorCode::CorruptRecord, where + ": link row needs 10 fields");
      }
      const auto id = detail::parse_uint<std::uint64_t>(f[0], lineno, "link id");
      if (id != link_rows.size()) {
        throw Error(ErrorCode::CorruptRecord,
                    where + ": link id " + std::to_string(id) + " out of sequence");
      }
      const auto inc = parse_inclusivity(f[4]);
      const auto add = parse_additivity(f[5]);
      const auto integ = parse_integrativity(f[6]);
      const auto state = parse_link_state(f[9]);
      if (!inc || !add || !integ || !state) {
        throw Error(ErrorCode::CorruptRecord, where + ": bad strand or state value");
      }
      LinkDescriptor d;
      d.directional = {KnnId{detail::parse_uint<std::uint64_t>(f[1], lineno, "source")},
                       KnnId{detail::parse_uint<std::uint64_t>(f[2], lineno, "destination")}};
      d.relation = std::string(f[3]);
      d.inclusivity = *inc;
      d.additivity = *add;
      d.integrativity = *integ;
      link_rows.push_back({lineno, std::move(d),
                           detail::parse_uint<std::uint64_t>(f[7], lineno, "usage"),
                           detail::parse_uint<std::uint64_t>(f[8], lineno, "last_used"),
                           *state});
    } else {
      if (f.size() != 2) {
        throw Error(ErrorCode::CorruptRecord, where + ": domain row needs 2 fields");
      }
      domain_rows.push_back({lineno, std::string(f[0]),
                             detail::parse_uint<std::uint64_t>(f[1], lineno, "apex id")});
    }
  }
  if (section != 2) {
    throw Error(ErrorCode::CorruptRecord, "missing section " +
                    std::string(kSections[static_cast<std::size_t>(section + 1)]));
  }

  std::map<std::uint64_t, const DomainRow*> apex_rows;
  std::set<std::uint32_t> seen_l;
  for (const auto& d : domain_rows) {
    const auto where = "line " + std::to_string(d.line);
    if (d.apex >= node_rows.size()) {
      throw Error(ErrorCode::InvariantViolation,
                  where + ": domain '" + d.name + "' apex " +
                      std::to_string(d.apex) + " is not a node");
    }
    const auto& apex = node_rows[d.apex];
    if (!apex.coord.is_apex() || apex.label != d.name) {
      throw Error(ErrorCode::InvariantViolation,
                  where + ": domain '" + d.name +
                      "' apex is not a level-0 node carrying the domain name");
    }
    if (!apex_rows.emplace(d.apex, &d).second || !seen_l.insert(apex.coord.l).second) {
      throw Error(ErrorCode::InvariantViolation,
                  where + ": domain '" + d.name + "' duplicates another domain");
    }
  }

  // Replay nodes in id order; a domain is registered when its apex row
  // comes up, so a node listed before its apex is rejected.
  Store store;
  for (std::size_t id = 0; id < node_rows.size(); ++id) {
    const auto& row = node_rows[id];
    try {
      if (auto it = apex_rows.find(id); it != apex_rows.end()) {
        store.register_domain(it->second->name, row.coord.l);
      }
      store.add_node(row.label, row.coord, row.usage);
    } catch (const Error& e) {
      throw Error(ErrorCode::InvariantViolation,
                  "line " + std::to_string(row.line) + ": " + e.detail());
    }
  }
  std::uint64_t tick = 0;
  for (auto& row : link_rows) {
    try {
      store.add_link(row.descriptor, row.usage, row.last_used, row.state);
    } catch (const Error& e) {
      throw Error(ErrorCode::InvariantViolation,
                  "line " + std::to_string(row.line) + ": " + e.detail());
    }
    tick = std::max(tick, row.last_used);
  }
  store.set_tick(tick);
  return store;
}

}  // namespace ils

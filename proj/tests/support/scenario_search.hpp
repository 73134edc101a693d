// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Informledge Contributors

#pragma once

// Brute-force construction of embedding-scenario fixtures: given a store
// and the raw counts of a scenario row, search statements over the store's
// existing units plus fresh ones until one produces exactly those counts.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ils/embedder.hpp"
#include "ils/parser.hpp"
#include "ils/store.hpp"

namespace ils::testing {

struct ScenarioTarget {
  std::size_t nodes_in = 0;
  std::size_t nodes_added = 0;
  std::size_t links_traversed = 0;
  std::size_t links_added = 0;
};

class ScenarioSearch {
 public:
  ScenarioSearch(const Store& store, std::string domain, std::vector<std::string> relations,
                 std::vector<std::string> fresh_labels, ScenarioTarget target)
      : domain_(std::move(domain)),
        relations_(std::move(relations)),
        target_(target) {
    const Domain* d = store.find_domain(domain_);
    if (d != nullptr) {
      for (const Knn& n : store.nodes()) {
        if (n.coord.l == d->l && !n.coord.is_apex()) existing_.push_back(n.label);
      }
      for (const Link& l : store.links()) {
        if (!l.active()) continue;
        const Knn& s = store.node(l.descriptor.source());
        const Knn& t = store.node(l.descriptor.destination());
        if (s.coord.l == d->l && t.coord.l == d->l) {
          links_.insert({s.label, t.label, l.descriptor.relation});
        }
      }
    }
    for (auto& f : fresh_labels) {
      if (std::find(existing_.begin(), existing_.end(), f) == existing_.end()) {
        fresh_.push_back(std::move(f));
      }
    }
  }

  std::optional<Statement> run() {
    if (target_.links_traversed == 0 || target_.nodes_added > fresh_.size()) return std::nullopt;
    for (const auto& first : candidates()) {
      if (place(first, std::nullopt)) {
        if (descend()) return Statement{domain_, units_, rels_, 0};
        unplace();
      }
    }
    return std::nullopt;
  }

 private:
  using Triple = std::tuple<std::string, std::string, std::string>;

  std::vector<std::string> candidates() const {
    std::vector<std::string> out = existing_;
    for (std::size_t i = 0; i < fresh_used_ && i < fresh_.size(); ++i) out.push_back(fresh_[i]);
    if (fresh_used_ < target_.nodes_added) out.push_back(fresh_[fresh_used_]);
    return out;
  }

  bool is_fresh_next(const std::string& u) const {
    return fresh_used_ < fresh_.size() && u == fresh_[fresh_used_];
  }

  struct Step {
    bool has_hop = false;
    bool hit = false;
    bool new_distinct = false;
    bool fresh = false;
  };

  // Appends a unit and, when it is not the first, the hop that reaches it.
  bool place(const std::string& unit, const std::optional<std::string>& rel) {
    Step step;
    step.new_distinct = !distinct_.contains(unit);
    if (step.new_distinct && distinct_.size() + 1 > target_.nodes_in) return false;
    step.fresh = is_fresh_next(unit);
    if (rel) {
      // Each hop appears once per statement, so every hit is a link the
      // store already held.
      if (hops_.contains({units_.back(), unit, *rel})) return false;
      step.has_hop = true;
      step.hit = links_.contains({units_.back(), unit, *rel});
      const std::size_t hits_allowed = target_.links_traversed - target_.links_added;
      if (step.hit ? hits_ + 1 > hits_allowed : created_ + 1 > target_.links_added) {
        return false;
      }
      if (step.hit) {
        ++hits_;
      } else {
        ++created_;
        links_.insert({units_.back(), unit, *rel});
      }
      hops_.insert({units_.back(), unit, *rel});
      rels_.push_back(*rel);
    }
    units_.push_back(unit);
    if (step.new_distinct) distinct_.insert(unit);
    if (step.fresh) ++fresh_used_;
    steps_.push_back(step);
    return true;
  }

  void unplace() {
    const Step step = steps_.back();
    steps_.pop_back();
    const std::string unit = units_.back();
    units_.pop_back();
    if (step.fresh) --fresh_used_;
    if (step.new_distinct) distinct_.erase(unit);
    if (step.has_hop) {
      if (step.hit) {
        --hits_;
      } else {
        --created_;
        links_.erase({units_.back(), unit, rels_.back()});
      }
      hops_.erase({units_.back(), unit, rels_.back()});
      rels_.pop_back();
    }
  }

  bool descend() {
    const std::size_t hops = units_.size() - 1;
    if (hops == target_.links_traversed) {
      return distinct_.size() == target_.nodes_in && fresh_used_ == target_.nodes_added &&
             created_ == target_.links_added;
    }
    const std::size_t remaining_after = target_.links_traversed - hops - 1;
    for (const auto& next : candidates()) {
      if (next == units_.back()) continue;
      const std::size_t distinct_after = distinct_.size() + (distinct_.contains(next) ? 0 : 1);
      const std::size_t fresh_after = fresh_used_ + (is_fresh_next(next) ? 1 : 0);
      if (distinct_after + remaining_after < target_.nodes_in) continue;
      if (fresh_after + remaining_after < target_.nodes_added) continue;
      for (const auto& rel : relations_) {
        if (!place(next, rel)) continue;
        if (descend()) return true;
        unplace();
      }
    }
    return false;
  }

  std::string domain_;
  std::vector<std::string> relations_;
  ScenarioTarget target_;
  std::vector<std::string> existing_;
  std::vector<std::string> fresh_;
  std::set<Triple> links_;
  std::set<Triple> hops_;

  std::vector<std::string> units_;
  std::vector<std::string> rels_;
  std::set<std::string> distinct_;
  std::vector<Step> steps_;
  std::size_t fresh_used_ = 0;
  std::size_t created_ = 0;
  std::size_t hits_ = 0;
};

/// The five scenario rows of the embedding table, as raw counts.
inline const std::vector<ScenarioTarget>& table2_targets() {
  static const std::vector<ScenarioTarget> rows = {
      {3, 0, 3, 2}, {4, 1, 9, 5}, {3, 1, 4, 3}, {3, 2, 4, 4}, {4, 4, 6, 6}};
  return rows;
}

inline const std::vector<std::string>& scenario_relations() {
  static const std::vector<std::string> rels = {"CONTAINS", "LIVES_IN", "EATS"};
  return rels;
}

inline const std::vector<std::string>& scenario_fresh_labels() {
  static const std::vector<std::string> labels = {
      "zebra", "savanna", "grass", "Asia", "tiger", "jungle", "deer", "river", "Europe", "wolf"};
  return labels;
}

/// Runs the search row by row, embedding each found statement before
/// searching for the next. Returns the statements in order, or fewer if a
/// row is unreachable.
inline std::vector<Statement> search_table2_corpus(Store store, const std::string& domain,
                                                   const RelationTable& table) {
  std::vector<Statement> found;
  for (const auto& target : table2_targets()) {
    ScenarioSearch search(store, domain, scenario_relations(), scenario_fresh_labels(), target);
    auto stmt = search.run();
    if (!stmt) break;
    embed_statement(store, *stmt, table);
    found.push_back(std::move(*stmt));
  }
  return found;
}

}  // namespace ils::testing

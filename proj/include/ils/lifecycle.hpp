// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Informledge Contributors

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ils/error.hpp"
#include "ils/model.hpp"
#include "ils/store.hpp"

namespace ils {

/// A link fades once it has been idle for at least `window` ticks while
/// used fewer than `min_usage` times.
struct FadePolicy {
  std::uint64_t window = 1;
  std::uint64_t min_usage = 1;

  void validate() const {
    if (window < 1 || min_usage < 1) {
      throw Error(ErrorCode::InvalidArgument,
                  "fade policy needs window >= 1 and min_usage >= 1");
    }
  }
};

struct FadeReport {
  std::vector<LinkId> faded;
};

inline void touch_link(Store& store, LinkId id, std::uint64_t now) {
  Link& link = store.link_mut(id);
  if (!link.active()) {
    throw Error(ErrorCode::FadedLink, "link " + std::to_string(id.value) + " is faded");
  }
  link.usage += 1;
  link.last_used = now;
}

inline FadeReport fade_tick(Store& store, const FadePolicy& policy, std::uint64_t now) {
  policy.validate();
  FadeReport report;
  for (const Link& l : store.links()) {
    if (!l.active() || l.usage >= policy.min_usage) continue;
    if (l.last_used > now || now - l.last_used < policy.window) continue;
    report.faded.push_back(l.id);
  }
  for (LinkId id : report.faded) store.link_mut(id).state = LinkState::Faded;
  return report;
}

/// Brings a faded link back into traversal with its original descriptor
/// and a fresh usage count.
inline const Link& recreate_link(Store& store, LinkId id) {
  const Link& current = store.link(id);
  if (current.active()) {
    throw Error(ErrorCode::NotFaded, "link " + std::to_string(id.value) + " is active");
  }
  const auto& d = current.descriptor;
  if (store.find_active_link(d.source(), d.destination(), d.relation)) {
    throw Error(ErrorCode::InvariantViolation,
                "another active link already joins " + std::to_string(d.source().value) +
                    "->" + std::to_string(d.destination().value) + " " + d.relation);
  }
  Link& link = store.link_mut(id);
  link.state = LinkState::Active;
  link.usage = 0;
  return link;
}

}  // namespace ils

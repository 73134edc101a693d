// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Informledge Contributors

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "ils/error.hpp"

namespace ils {

// ---------------------------------------------------------------------------
// Identifiers
// ---------------------------------------------------------------------------

template <typename Tag>
struct StrongId {
  std::uint64_t value = 0;

  friend constexpr auto operator<=>(StrongId, StrongId) = default;
  constexpr std::size_t index() const noexcept {
    return static_cast<std::size_t>(value);
  }
};

using KnnId = StrongId<struct KnnIdTag>;
using LinkId = StrongId<struct LinkIdTag>;

/// Position of a node in the knowledge space: domain `l`, level `m` within
/// the domain, slot `n` within the level. A domain apex sits at (l, 0, 0).
struct Coordinate {
  std::uint32_t l = 1;
  std::uint32_t m = 0;
  std::uint32_t n = 0;

  friend constexpr auto operator<=>(const Coordinate&,
                                    const Coordinate&) = default;
  constexpr bool is_apex() const noexcept { return m == 0 && n == 0; }
};

/// Knowledge Network Node.
struct Knn {
  KnnId id;
  std::string label;
  Coordinate coord;
  std::uint64_t usage = 0;

  friend bool operator==(const Knn&, const Knn&) = default;
};

// ---------------------------------------------------------------------------
// Strands
// ---------------------------------------------------------------------------

enum class Axis : std::uint8_t {
  Directional = 0,
  Inclusivity = 1,
  Additivity = 2,
  Integrativity = 3,
};
inline constexpr std::size_t kAxisCount = 4;

enum class Inclusivity : std::uint8_t { Inclusive, Exclusive };
enum class Additivity : std::uint8_t { Additive, Subtractive };
enum class Integrativity : std::uint8_t { Integrative, Differentiative };

struct Directional {
  KnnId source;
  KnnId destination;
  friend constexpr bool operator==(Directional, Directional) = default;
};

/// One property channel of a link. The variant index is the axis.
struct Strand {
  std::variant<Directional, Inclusivity, Additivity, Integrativity> value;

  Axis axis() const noexcept { return static_cast<Axis>(value.index()); }
  friend bool operator==(const Strand&, const Strand&) = default;
};

constexpr std::string_view to_string(Axis axis) noexcept {
  switch (axis) {
    case Axis::Directional: return "directional";
    case Axis::Inclusivity: return "inclusivity";
    case Axis::Additivity: return "additivity";
    case Axis::Integrativity: return "integrativity";
  }
  return "?";
}
constexpr std::string_view to_string(Inclusivity v) noexcept {
  return v == Inclusivity::Inclusive ? "inclusive" : "exclusive";
}
constexpr std::string_view to_string(Additivity v) noexcept {
  return v == Additivity::Additive ? "additive" : "subtractive";
}
constexpr std::string_view to_string(Integrativity v) noexcept {
  return v == Integrativity::Integrative ? "integrative" : "differentiative";
}

inline std::optional<Inclusivity> parse_inclusivity(std::string_view s) {
  if (s == "inclusive") return Inclusivity::Inclusive;
  if (s == "exclusive") return Inclusivity::Exclusive;
  return std::nullopt;
}
inline std::optional<Additivity> parse_additivity(std::string_view s) {
  if (s == "additive") return Additivity::Additive;
  if (s == "subtractive") return Additivity::Subtractive;
  return std::nullopt;
}
inline std::optional<Integrativity> parse_integrativity(std::string_view s) {
  if (s == "integrative") return Integrativity::Integrative;
  if (s == "differentiative") return Integrativity::Differentiative;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Links
// ---------------------------------------------------------------------------

/// The composed strand bundle of a link, one value per axis, in canonical
/// axis order.
struct LinkDescriptor {
  Directional directional;
  Inclusivity inclusivity = Inclusivity::Inclusive;
  Additivity additivity = Additivity::Additive;
  Integrativity integrativity = Integrativity::Differentiative;
  std::string relation;

  KnnId source() const noexcept { return directional.source; }
  KnnId destination() const noexcept { return directional.destination; }
  std::array<Strand, kAxisCount> strands() const {
    return {Strand{directional}, Strand{inclusivity}, Strand{additivity},
            Strand{integrativity}};
  }

  friend bool operator==(const LinkDescriptor&,
                         const LinkDescriptor&) = default;
};

enum class LinkState : std::uint8_t { Active, Faded };

constexpr std::string_view to_string(LinkState s) noexcept {
  return s == LinkState::Active ? "active" : "faded";
}
inline std::optional<LinkState> parse_link_state(std::string_view s) {
  if (s == "active") return LinkState::Active;
  if (s == "faded") return LinkState::Faded;
  return std::nullopt;
}

struct Link {
  LinkId id;
  LinkDescriptor descriptor;
  std::uint64_t usage = 0;
  std::uint64_t last_used = 0;
  LinkState state = LinkState::Active;

  bool active() const noexcept { return state == LinkState::Active; }
  friend bool operator==(const Link&, const Link&) = default;
};

/// Cross-domain links are integrative; links inside one domain are
/// differentiative.
constexpr Integrativity integrativity_of(const Coordinate& src,
                                         const Coordinate& dst) noexcept {
  return src.l != dst.l ? Integrativity::Integrative
                        : Integrativity::Differentiative;
}

/// Assembles a descriptor from exactly one strand per axis. The result does
/// not depend on the order of `strands`.
inline LinkDescriptor compose_link(std::span<const Strand> strands,
                                   std::string relation) {
  std::array<const Strand*, kAxisCount> slot{};
  for (const Strand& s : strands) {
    auto& dst = slot[static_cast<std::size_t>(s.axis())];
    if (dst != nullptr) {
      throw Error(ErrorCode::DuplicateAxis,
                  "strand axis '" + std::string(to_string(s.axis())) +
                      "' supplied twice");
    }
    dst = &s;
  }
  for (std::size_t i = 0; i < kAxisCount; ++i) {
    if (slot[i] == nullptr) {
      throw Error(ErrorCode::MissingAxis,
                  "strand axis '" +
                      std::string(to_string(static_cast<Axis>(i))) +
                      "' missing");
    }
  }

  LinkDescriptor d;
  d.directional = std::get<Directional>(slot[0]->value);
  if (d.directional.source == d.directional.destination) {
    throw Error(ErrorCode::SelfLink,
                "link endpoints are both node " +
                    std::to_string(d.directional.source.value));
  }
  d.inclusivity = std::get<Inclusivity>(slot[1]->value);
  d.additivity = std::get<Additivity>(slot[2]->value);
  d.integrativity = std::get<Integrativity>(slot[3]->value);
  d.relation = std::move(relation);
  return d;
}

inline LinkDescriptor compose_link(std::initializer_list<Strand> strands,
                                   std::string relation) {
  return compose_link(std::span<const Strand>(strands.begin(), strands.size()),
                      std::move(relation));
}

// ---------------------------------------------------------------------------
// Text helpers shared by the parser and the snapshot format.
// ---------------------------------------------------------------------------

inline std::string_view trim(std::string_view s) noexcept {
  constexpr std::string_view ws = " \t\r\n\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

/// Labels must be non-empty after trimming and may not hold tabs or line
/// breaks (they are stored in a tab-separated format).
inline bool is_valid_label(std::string_view s) noexcept {
  if (trim(s).empty() || trim(s).size() != s.size()) return false;
  return s.find_first_of("\t\r\n") == std::string_view::npos;
}

/// `[A-Z][A-Z0-9_]*`
inline bool is_relation_name(std::string_view s) noexcept {
  if (s.empty() || s.front() < 'A' || s.front() > 'Z') return false;
  for (char c : s) {
    const bool ok = (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

}  // namespace ils

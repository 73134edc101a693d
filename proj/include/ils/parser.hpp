// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Informledge Contributors

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ils/error.hpp"
#include "ils/model.hpp"
#include "ils/relations.hpp"

namespace ils {

/// A parsed assertion: units joined left to right by relations.
///
///     statement := unit (REL unit)+
///     unit      := bare token | "quoted text"
///     REL       := [A-Z][A-Z0-9_]*
///
/// Tokens alternate strictly by position, so an uppercase word in a unit
/// position is still a unit.
struct Statement {
  std::string domain;
  std::vector<std::string> units;
  std::vector<std::string> relations;
  std::size_t line = 0;  // source line in a corpus, 0 when parsed standalone

  friend bool operator==(const Statement& a, const Statement& b) {
    return a.domain == b.domain && a.units == b.units &&
           a.relations == b.relations;
  }
};

namespace detail {

struct Token {
  std::string text;
  bool quoted = false;
};

inline std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
  };
  while (i < line.size()) {
    if (is_space(line[i])) {
      ++i;
      continue;
    }
    if (line[i] == '"') {
      const auto close = line.find('"', i + 1);
      if (close == std::string_view::npos) {
        throw Error(ErrorCode::SyntaxError,
                    "unterminated quote at column " + std::to_string(i + 1));
      }
      out.push_back({std::string(line.substr(i + 1, close - i - 1)), true});
      i = close + 1;
      if (i < line.size() && !is_space(line[i])) {
        throw Error(ErrorCode::SyntaxError,
                    "text directly after closing quote at column " +
                        std::to_string(i + 1));
      }
      continue;
    }
    const auto start = i;
    while (i < line.size() && !is_space(line[i])) {
      if (line[i] == '"') {
        throw Error(ErrorCode::SyntaxError,
                    "stray quote at column " + std::to_string(i + 1));
      }
      ++i;
    }
    out.push_back({std::string(line.substr(start, i - start)), false});
  }
  return out;
}

}  // namespace detail

inline Statement parse_statement(std::string_view line,
                                 std::string_view current_domain) {
  if (trim(current_domain).empty()) {
    throw Error(ErrorCode::InvalidArgument, "statement has no domain");
  }
  if (line.find('\n') != std::string_view::npos) {
    throw Error(ErrorCode::SyntaxError, "statement spans multiple lines");
  }
  const auto tokens = detail::tokenize(line);
  if (tokens.empty()) throw Error(ErrorCode::EmptyStatement, "no tokens");

  Statement stmt;
  stmt.domain = std::string(trim(current_domain));
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto& tok = tokens[i];
    const auto pos = "token " + std::to_string(i + 1);
    if (i % 2 == 0) {
      const std::string unit(trim(tok.text));
      if (unit.empty()) throw Error(ErrorCode::SyntaxError, pos + ": empty unit");
      if (!is_valid_label(unit)) {
        throw Error(ErrorCode::SyntaxError,
                    pos + ": unit '" + unit + "' contains a control character");
      }
      stmt.units.push_back(unit);
    } else {
      if (tok.quoted || !is_relation_name(tok.text)) {
        throw Error(ErrorCode::SyntaxError,
                    pos + ": expected a relation name, got '" + tok.text + "'");
      }
      stmt.relations.push_back(tok.text);
    }
  }
  if (tokens.size() % 2 == 0) {
    throw Error(ErrorCode::SyntaxError,
                "statement ends with relation '" + stmt.relations.back() + "'");
  }
  if (stmt.units.size() < 2) {
    throw Error(ErrorCode::SyntaxError,
                "statement needs at least two units joined by a relation");
  }
  return stmt;
}

/// Writes the statement back in DSL form, quoting units that contain
/// whitespace.
inline std::string serialize(const Statement& stmt) {
  std::string out;
  for (std::size_t i = 0; i < stmt.units.size(); ++i) {
    if (i > 0) {
      out += ' ';
      out += stmt.relations[i - 1];
      out += ' ';
    }
    const auto& u = stmt.units[i];
    // A leading '#' or '@' would read back as a comment or directive.
    const bool quote = u.find_first_of(" \t\f\v") != std::string::npos ||
                       u.front() == '#' || u.front() == '@';
    if (quote) {
      out += '"';
      out += u;
      out += '"';
    } else {
      out += u;
    }
  }
  return out;
}

inline void validate_statement(const Statement& stmt,
                               const RelationTable& table) {
  for (const auto& rel : stmt.relations) {
    if (!table.contains(rel)) throw Error(ErrorCode::UnknownRelation, rel);
  }
}

/// Parses a corpus file. `#` lines are comments, `@domain NAME` switches
/// the domain for the statements that follow, everything else non-blank is
/// a statement. Errors are rethrown with the offending line number.
inline std::vector<Statement> parse_corpus(std::string_view text,
                                           std::string_view initial_domain,
                                           const RelationTable& table) {
  std::vector<Statement> out;
  std::string domain(trim(initial_domain));
  std::size_t lineno = 0;
  for (std::string_view raw : detail::lines(text)) {
    ++lineno;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    try {
      if (line.front() == '@') {
        constexpr std::string_view directive = "@domain";
        if (line.substr(0, directive.size()) != directive ||
            (line.size() > directive.size() && line[directive.size()] != ' ' &&
             line[directive.size()] != '\t')) {
          throw Error(ErrorCode::SyntaxError,
                      "unknown directive '" + std::string(line) + "'");
        }
        const auto name = trim(line.substr(directive.size()));
        if (name.empty() || !is_valid_label(name)) {
          throw Error(ErrorCode::SyntaxError, "@domain needs a name");
        }
        domain = std::string(name);
        continue;
      }
      Statement stmt = parse_statement(line, domain);
      validate_statement(stmt, table);
      stmt.line = lineno;
      out.push_back(std::move(stmt));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(lineno) + ": " + e.detail());
    }
  }
  return out;
}

}  // namespace ils

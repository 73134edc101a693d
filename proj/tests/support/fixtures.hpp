// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Informledge Contributors

#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "ils/ils.hpp"

#ifndef ILS_TEST_DATA_DIR
#error "ILS_TEST_DATA_DIR must point at tests/data"
#endif

namespace ils::testing {

inline std::string data_path(const std::string& name) {
  return std::string(ILS_TEST_DATA_DIR) + "/" + name;
}

inline std::string read_data(const std::string& name) {
  std::ifstream in(data_path(name), std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "missing test data " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<EmbedResult> embed_text(Store& store, std::string_view corpus,
                                           const RelationTable& table = default_relation_table(),
                                           std::string_view domain = "default") {
  return embed_corpus(store, parse_corpus(corpus, domain, table), table);
}

inline Store store_from(std::string_view corpus) {
  Store s;
  embed_text(s, corpus);
  return s;
}

inline KnnId id_of(const Store& s, std::string_view label) {
  const auto ids = s.find_nodes(label);
  if (ids.empty()) throw Error(ErrorCode::UnknownNode, std::string(label));
  return ids.front();
}

template <typename Fn>
std::optional<ErrorCode> error_code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

/// Snapshot with every usage and last_used column zeroed.
inline std::string structural_snapshot(const Store& s) {
  std::string out;
  int section = -1;
  std::istringstream in(snapshot(s));
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.front() == '[') {
      ++section;
      out += line + "\n";
      continue;
    }
    std::vector<std::string> f;
    std::stringstream ls(line);
    for (std::string x; std::getline(ls, x, '\t');) f.push_back(x);
    if (section == 0 && f.size() == 6) f[5] = "0";
    if (section == 1 && f.size() == 10) f[7] = f[8] = "0";
    for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "\t" : "") + f[i];
    out += "\n";
  }
  return out;
}

}  // namespace ils::testing

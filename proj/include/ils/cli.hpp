// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Informledge Contributors

#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ils/embedder.hpp"
#include "ils/lifecycle.hpp"
#include "ils/parser.hpp"
#include "ils/relations.hpp"
#include "ils/report.hpp"
#include "ils/retriever.hpp"
#include "ils/store.hpp"

namespace ils::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kEngineError = 2;

inline std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write '" + tmp + "'");
    out << text;
    if (!out.flush()) throw Error(ErrorCode::Io, "write to '" + tmp + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot replace '" + path + "': " + ec.message());
}

inline Store load_store(const std::string& path, bool missing_ok) {
  if (missing_ok && !std::filesystem::exists(path)) return Store{};
  return restore(read_file(path));
}

/// --relations, then $ILS_RELATIONS, then the built-in table.
inline RelationTable load_relations(const std::string& flag) {
  if (!flag.empty()) return load_relation_table(read_file(flag));
  if (const char* env = std::getenv("ILS_RELATIONS"); env != nullptr && *env != '\0') {
    return load_relation_table(read_file(env));
  }
  return default_relation_table();
}

inline std::vector<EmbedResult> embed_files(Store& store, const std::vector<std::string>& files,
                                            const std::string& domain,
                                            const RelationTable& table) {
  std::vector<EmbedResult> all;
  for (const auto& file : files) {
    try {
      const auto statements = parse_corpus(read_file(file), domain, table);
      for (auto& r : embed_corpus(store, statements, table)) all.push_back(r);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Io) throw;
      throw Error(e.code(), file + ": " + e.detail());
    }
  }
  return all;
}

inline std::optional<std::string> optional_flag(const std::string& v) {
  if (v.empty()) return std::nullopt;
  return v;
}

inline const CLI::App* deepest_subcommand(const CLI::App& app) {
  const CLI::App* at = &app;
  for (auto subs = at->get_subcommands(); !subs.empty(); subs = at->get_subcommands()) {
    at = subs.front();
  }
  return at;
}

/// Runs one `ils` invocation. `args[0]` is the program name. Data goes to
/// `out`, diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Informledge knowledge network engine", args.empty() ? "ils" : args[0]};
  app.require_subcommand(1, 1);

  std::string store_path, relations_path, domain = "default", format = "text";
  std::size_t max_depth = kDefaultMaxDepth;
  auto add_store = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--store", store_path, "Snapshot file");
    if (required) opt->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "text"}))
        ->capture_default_str();
  };
  auto add_depth = [&](CLI::App* sub) {
    sub->add_option("--max-depth", max_depth, "Longest thread in links")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  // embed
  std::vector<std::string> corpus_files;
  auto* embed = app.add_subcommand("embed", "Embed corpus files into the store");
  add_store(embed, true);
  embed->add_option("--relations", relations_path, "Relation table (TSV)");
  embed->add_option("--domain", domain, "Domain for statements before any @domain")
      ->capture_default_str();
  add_format(embed);
  embed->add_option("corpus", corpus_files, "Corpus files")->required();

  // cone
  std::vector<std::string> labels;
  std::string query_domain;
  auto* cone = app.add_subcommand("cone", "Retrieve knowledge cones");
  add_store(cone, true);
  cone->add_option("--domain", query_domain, "Resolve labels in this domain only");
  add_depth(cone);
  add_format(cone);
  cone->add_option("labels", labels, "Apex labels")->required();

  // thread
  std::string from, to, relation;
  auto* thread = app.add_subcommand("thread", "Find a thread between two labels");
  add_store(thread, true);
  thread->add_option("--from", from, "Start label")->required();
  thread->add_option("--to", to, "Target label")->required();
  thread->add_option("--domain", query_domain, "Resolve --from in this domain only");
  thread->add_option("--relation", relation, "Follow only this relation (exclusive links too)");
  add_depth(thread);

  // stats
  auto* stats = app.add_subcommand("stats", "Per-domain knowledge summary");
  add_store(stats, true);
  add_format(stats);

  // fade
  std::uint64_t min_usage = 1, window = 1;
  std::optional<std::uint64_t> now;
  std::vector<std::uint64_t> recreate;
  auto* fade = app.add_subcommand("fade", "Fade rarely used links or recreate faded ones");
  add_store(fade, true);
  fade->add_option("--min-usage", min_usage, "Links used fewer times may fade")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  fade->add_option("--window", window, "Idle ticks before a link may fade")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  fade->add_option("--now", now, "Tick to evaluate at (default: store tick)");
  fade->add_option("--recreate", recreate, "Recreate these faded link ids instead of fading");

  // dump / load
  auto* dump = app.add_subcommand("dump", "Print the store snapshot");
  add_store(dump, true);
  std::string load_input;
  auto* load = app.add_subcommand("load", "Validate a snapshot and install it as the store");
  add_store(load, true);
  load->add_option("input", load_input, "Snapshot file, or - for stdin")->required();

  // report
  auto* report = app.add_subcommand("report", "CSV reports");
  report->require_subcommand(1, 1);
  auto* table2 = report->add_subcommand("table2", "Per-statement embedding scenarios");
  add_store(table2, false);
  table2->add_option("--relations", relations_path, "Relation table (TSV)");
  table2->add_option("--domain", domain, "Domain for statements before any @domain")
      ->capture_default_str();
  table2->add_option("corpus", corpus_files, "Corpus files")->required();
  auto* cones = report->add_subcommand("cones", "Cone height per apex");
  add_store(cones, true);
  cones->add_option("--domain", query_domain, "Resolve labels in this domain only");
  add_depth(cones);
  cones->add_option("labels", labels, "Apex labels")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << deepest_subcommand(app)->help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << deepest_subcommand(app)->help();
    return kUsageError;
  }

  try {
    const auto qdomain = optional_flag(query_domain);
    if (embed->parsed()) {
      Store store = load_store(store_path, true);
      const auto table = load_relations(relations_path);
      const auto results = embed_files(store, corpus_files, domain, table);
      write_file_atomic(store_path, snapshot(store));
      if (format == "csv") {
        out << report_table2(results);
      } else {
        std::size_t nodes = 0, links = 0;
        for (const auto& r : results) {
          nodes += r.report.nodes_added;
          links += r.report.links_added;
        }
        out << "embedded " << results.size() << " statements: " << nodes << " nodes added, "
            << links << " links added\n";
      }
    } else if (cone->parsed()) {
      Store store = load_store(store_path, false);
      std::vector<Thread> batch;
      std::vector<Cone> built;
      for (const auto& label : labels) {
        const KnnId apex = resolve_apex(store, label, qdomain);
        auto threads = enumerate_threads(store, apex, max_depth);
        batch.insert(batch.end(), threads.begin(), threads.end());
        built.push_back(cone_from_threads(store, apex, std::move(threads)));
      }
      record_usage(store, batch);
      write_file_atomic(store_path, snapshot(store));
      if (format == "csv") {
        out << format_cones_csv(store, built);
      } else {
        for (const Cone& c : built) {
          const Knn& apex = store.node(c.apex);
          out << apex.label << " (" << apex.coord.l << "," << apex.coord.m << ","
              << apex.coord.n << ") height " << c.height << " levels " << format_levels(c)
              << "\n";
          for (const Thread& t : c.threads) out << "  " << format_thread(store, t) << "\n";
        }
      }
    } else if (thread->parsed()) {
      Store store = load_store(store_path, false);
      ExpansionFilter filter;
      filter.relation = optional_flag(relation);
      const auto hit = find_thread(store, from, to, qdomain, max_depth, filter);
      if (hit) {
        write_file_atomic(store_path, snapshot(store));
        out << format_thread(store, *hit) << "\n";
      } else {
        err << "no thread from '" << from << "' to '" << to << "'\n";
      }
    } else if (stats->parsed()) {
      const Store store = load_store(store_path, false);
      const auto s = system_stats(store);
      if (format == "csv") {
        out << "domain,l,nodes\n";
        for (const auto& d : s.domains) out << d.name << ',' << d.l << ',' << d.nodes << "\n";
      } else {
        out << "domains: " << s.domain_count << "\n"
            << "nodes: " << s.total_nodes << "\n"
            << "links: " << s.active_links << " active, " << s.faded_links << " faded\n";
        for (const auto& d : s.domains) {
          out << "  " << d.name << " (l=" << d.l << "): " << d.nodes << "\n";
        }
      }
    } else if (fade->parsed()) {
      Store store = load_store(store_path, false);
      auto describe = [&](LinkId id) {
        const auto& d = store.link(id).descriptor;
        return std::to_string(id.value) + " " + store.node(d.source()).label + " " +
               d.relation + " " + store.node(d.destination()).label;
      };
      if (!recreate.empty()) {
        for (auto raw : recreate) {
          recreate_link(store, LinkId{raw});
          out << "recreated " << describe(LinkId{raw}) << "\n";
        }
      } else {
        const auto r = fade_tick(store, FadePolicy{window, min_usage}, now.value_or(store.tick()));
        for (LinkId id : r.faded) out << "faded " << describe(id) << "\n";
      }
      write_file_atomic(store_path, snapshot(store));
    } else if (dump->parsed()) {
      out << snapshot(load_store(store_path, false));
    } else if (load->parsed()) {
      const Store store = restore(read_file(load_input));
      write_file_atomic(store_path, snapshot(store));
      out << "loaded " << store.nodes().size() << " nodes, " << store.links().size()
          << " links\n";
    } else if (table2->parsed()) {
      Store store = store_path.empty() ? Store{} : load_store(store_path, false);
      const auto table = load_relations(relations_path);
      out << report_table2(embed_files(store, corpus_files, domain, table));
    } else if (cones->parsed()) {
      const Store store = load_store(store_path, false);
      out << report_cones(store, labels, max_depth, qdomain);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kEngineError;
  }
  return kOk;
}

}  // namespace ils::cli

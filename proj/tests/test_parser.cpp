// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Informledge Contributors

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "ils/parser.hpp"
#include "ils/relations.hpp"

namespace ils {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Io;
}

TEST(ParseStatement, SimpleChains) {
  const auto a = parse_statement("Africa CONTAINS lion", "geo");
  EXPECT_EQ(a.domain, "geo");
  EXPECT_EQ(a.units, (std::vector<std::string>{"Africa", "lion"}));
  EXPECT_EQ(a.relations, (std::vector<std::string>{"CONTAINS"}));

  const auto b = parse_statement("lion HAS_PROPERTY strong", "geo");
  EXPECT_EQ(b.units, (std::vector<std::string>{"lion", "strong"}));
  EXPECT_EQ(b.relations, (std::vector<std::string>{"HAS_PROPERTY"}));
}

TEST(ParseStatement, QuotedUnitsAndUppercaseUnits) {
  const auto s = parse_statement(R"(apple MADE_BY "Apple Inc"  IS_A NASA)", "tech");
  EXPECT_EQ(s.units, (std::vector<std::string>{"apple", "Apple Inc", "NASA"}));
  EXPECT_EQ(s.relations, (std::vector<std::string>{"MADE_BY", "IS_A"}));
}

TEST(ParseStatement, Errors) {
  EXPECT_EQ(code_of([] { parse_statement("apple IS_A", "d"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_statement("apple", "d"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_statement("apple is_a fruit", "d"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_statement(R"(apple "IS_A" fruit)", "d"); }),
            ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_statement(R"("" IS_A fruit)", "d"); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_statement(R"("apple IS_A fruit)", "d"); }),
            ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_statement(R"(ap"ple IS_A fruit)", "d"); }),
            ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([] { parse_statement("   ", "d"); }), ErrorCode::EmptyStatement);
  EXPECT_EQ(code_of([] { parse_statement("a IS_A b", ""); }), ErrorCode::InvalidArgument);
}

TEST(ParseStatement, RoundTripProperty) {
  std::mt19937 rng(11);
  const std::vector<std::string> words = {"lion", "Apple Inc", "NASA", "x", "big cat", "#tag",
                                          "@home", "strong"};
  const std::vector<std::string> rels = {"IS_A", "CONTAINS", "R2D2", "HAS_PROPERTY"};
  for (int iter = 0; iter < 300; ++iter) {
    Statement s{"d", {}, {}, 0};
    const auto hops = std::uniform_int_distribution<int>(1, 5)(rng);
    s.units.push_back(words[rng() % words.size()]);
    for (int i = 0; i < hops; ++i) {
      s.relations.push_back(rels[rng() % rels.size()]);
      s.units.push_back(words[rng() % words.size()]);
    }
    const auto text = serialize(s);
    const auto back = parse_statement(text, "d");
    EXPECT_EQ(back, s) << text;
    EXPECT_EQ(back.relations.size() + 1, back.units.size());
  }
}

TEST(RelationTable, LoadsEntries) {
  const auto t = load_relation_table("IS_A\tinclusive\tadditive\n");
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t.at("IS_A"), (RelationRule{Inclusivity::Inclusive, Additivity::Additive}));

  const auto p = load_relation_table("# c\n\nHAS_PROPERTY\tinclusive\tsubtractive\r\n");
  EXPECT_EQ(p.at("HAS_PROPERTY").additivity, Additivity::Subtractive);
}

TEST(RelationTable, Errors) {
  EXPECT_EQ(code_of([] {
              load_relation_table("IS_A\tinclusive\tadditive\nIS_A\texclusive\tadditive\n");
            }),
            ErrorCode::DuplicateRelation);
  EXPECT_EQ(code_of([] { load_relation_table("IS_A\tsometimes\tadditive\n"); }),
            ErrorCode::BadValue);
  EXPECT_EQ(code_of([] { load_relation_table("IS_A\tinclusive\n"); }), ErrorCode::BadValue);
  EXPECT_EQ(code_of([] { load_relation_table("is_a\tinclusive\tadditive\n"); }),
            ErrorCode::BadValue);
}

TEST(RelationTable, DefaultTableHasSynonymsAndSerializes) {
  const auto t = default_relation_table();
  EXPECT_EQ(t.at("SYNONYM_OF"), (RelationRule{Inclusivity::Inclusive, Additivity::Additive}));
  EXPECT_EQ(t.at("HAS_PROPERTY").additivity, Additivity::Subtractive);
  EXPECT_EQ(load_relation_table(serialize(t)), t);
}

TEST(ValidateStatement, KnownAndUnknownRelations) {
  const auto table = default_relation_table();
  EXPECT_NO_THROW(validate_statement(parse_statement("Africa CONTAINS lion", "g"), table));
  EXPECT_NO_THROW(validate_statement(parse_statement("A IS_A B HAS_PROPERTY c", "g"), table));
  try {
    validate_statement(parse_statement("cat LIKES milk", "g"), table);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownRelation);
    EXPECT_EQ(e.detail(), "LIKES");
  }
}

TEST(ParseCorpus, DirectivesCommentsAndLineNumbers) {
  const auto table = default_relation_table();
  const auto stmts = parse_corpus(
      "# header\n"
      "a IS_A b\n"
      "\n"
      "@domain geo\n"
      "Africa CONTAINS lion\n",
      "default", table);
  ASSERT_EQ(stmts.size(), 2u);
  EXPECT_EQ(stmts[0].domain, "default");
  EXPECT_EQ(stmts[0].line, 2u);
  EXPECT_EQ(stmts[1].domain, "geo");
  EXPECT_EQ(stmts[1].line, 5u);

  try {
    parse_corpus("a IS_A b\ncat LIKES milk\n", "d", table);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownRelation);
    EXPECT_NE(e.detail().find("line 2"), std::string::npos);
  }
  EXPECT_EQ(code_of([&] { parse_corpus("@domains x\n", "d", table); }), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of([&] { parse_corpus("@domain\n", "d", table); }), ErrorCode::SyntaxError);
}

}  // namespace
}  // namespace ils

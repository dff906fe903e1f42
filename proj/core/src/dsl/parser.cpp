// Copyright 2026 The pvn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pvn/dsl/parser.hpp"

#include <array>
#include <string>
#include <vector>

#include "pvn/snapshot.hpp"

namespace pvn::dsl {

namespace {

struct Token {
  enum class Type { kIdent, kPunct, kEnd };
  Type type = Type::kEnd;
  std::string text;
  SourceLoc loc;
};

bool ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }
bool punct_char(char c) {
  return c == ';' || c == '{' || c == '}' || c == '<' || c == ',' ||
         c == ':' || c == '/' || c == '[' || c == ']';
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto step = [&](char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      step(c);
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') {
        step(text[i]);
        ++i;
      }
      continue;
    }
    SourceLoc loc{line, col};
    if (ident_start(c)) {
      std::size_t start = i;
      while (i < text.size() && ident_char(text[i])) {
        step(text[i]);
        ++i;
      }
      tokens.push_back({Token::Type::kIdent,
                        std::string(text.substr(start, i - start)), loc});
      continue;
    }
    if (punct_char(c)) {
      tokens.push_back({Token::Type::kPunct, std::string(1, c), loc});
      step(c);
      ++i;
      continue;
    }
    throw Error(ErrorCode::kSyntaxError,
                "unexpected character '" + std::string(1, c) + "'", loc);
  }
  SourceLoc end_loc{line, col};
  tokens.push_back({Token::Type::kEnd, "", end_loc});
  return tokens;
}

constexpr std::array<std::string_view, 7> kMutationStarters = {
    "create", "delete", "join", "leave", "move", "add", "remove"};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  PolicyDocument parse_document() {
    PolicyDocument doc;
    while (!at_end()) doc.statements.push_back(parse_statement());
    return doc;
  }

  Statement parse_single() {
    Statement s = parse_statement();
    if (!at_end())
      throw Error(ErrorCode::kSyntaxError, "expected end of input", peek().loc);
    return s;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  bool at_end() const { return peek().type == Token::Type::kEnd; }

  bool peek_ident(std::string_view word) const {
    return peek().type == Token::Type::kIdent && peek().text == word;
  }
  bool peek_punct(char c) const {
    return peek().type == Token::Type::kPunct && peek().text[0] == c;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    std::string got = t.type == Token::Type::kEnd
                          ? "end of input"
                          : "'" + t.text + "'";
    throw Error(ErrorCode::kSyntaxError, "expected " + expected + ", got " + got,
                t.loc);
  }

  void expect_punct(char c) {
    if (!peek_punct(c)) fail(std::string("'") + c + "'");
    advance();
  }

  void expect_ident(std::string_view word) {
    if (!peek_ident(word)) fail("'" + std::string(word) + "'");
    advance();
  }

  std::string expect_name() {
    if (peek().type != Token::Type::kIdent) fail("a name");
    if (!valid_name(peek().text))
      throw Error(ErrorCode::kSyntaxError,
                  "'" + peek().text + "' is a reserved word", peek().loc);
    return advance().text;
  }

  std::string expect_subject() {
    if (peek_ident("all")) {
      advance();
      return "all";
    }
    return expect_name();
  }

  Protocol expect_protocol() {
    if (peek_ident("optimistic")) {
      advance();
      return Protocol::kOptimistic;
    }
    if (peek_ident("pessimistic") || peek_ident("cautious")) {
      advance();
      return Protocol::kPessimistic;
    }
    fail("a protocol ('optimistic', 'pessimistic' or 'cautious')");
  }

  ContentPath expect_path() {
    ContentPath path;
    expect_punct('/');
    path.push_back(expect_name());
    while (peek_punct('/')) {
      advance();
      path.push_back(expect_name());
    }
    return path;
  }

  Statement parse_statement() {
    if (peek().type != Token::Type::kIdent)
      fail("a statement ('group', 'member', 'content', 'policy', a query or a "
           "mutation)");
    const std::string& word = peek().text;
    if (word == "group") return parse_group();
    if (word == "member") return parse_member();
    if (word == "content") return parse_content();
    if (word == "policy") return parse_policy();
    if (word == "can" || word == "show" || word == "audience" ||
        word == "explain")
      return parse_query();
    if (word == "whatif") return parse_whatif();
    for (std::string_view starter : kMutationStarters) {
      if (word == starter) {
        MutationStmt m = parse_mutation();
        expect_punct(';');
        return m;
      }
    }
    fail("a statement ('group', 'member', 'content', 'policy', a query or a "
         "mutation)");
  }

  GroupDecl parse_group() {
    GroupDecl g;
    g.loc = peek().loc;
    expect_ident("group");
    g.name = expect_name();
    if (peek_punct('<')) {
      advance();
      g.parents.push_back(expect_name());
      while (peek_punct(',')) {
        advance();
        g.parents.push_back(expect_name());
      }
    }
    if (peek_ident("owner")) {
      advance();
      g.owner = expect_name();
    }
    expect_punct(';');
    return g;
  }

  MemberDecl parse_member() {
    MemberDecl m;
    m.loc = peek().loc;
    expect_ident("member");
    m.name = expect_name();
    if (peek_ident("in")) {
      advance();
      m.groups.push_back(expect_name());
      while (peek_punct(',')) {
        advance();
        m.groups.push_back(expect_name());
      }
    }
    expect_punct(';');
    return m;
  }

  ContentNodeDecl parse_tree() {
    ContentNodeDecl node;
    node.loc = peek().loc;
    node.name = expect_name();
    if (peek_punct(';')) {
      advance();
      return node;
    }
    expect_punct('{');
    while (!peek_punct('}')) node.children.push_back(parse_tree());
    expect_punct('}');
    return node;
  }

  ContentDecl parse_content() {
    ContentDecl c;
    c.loc = peek().loc;
    expect_ident("content");
    c.owner = expect_name();
    expect_punct('{');
    c.root = parse_tree();
    expect_punct('}');
    return c;
  }

  PolicyDecl parse_policy() {
    PolicyDecl p;
    p.loc = peek().loc;
    expect_ident("policy");
    p.owner = expect_name();
    if (peek_ident("default")) {
      advance();
      p.default_protocol = expect_protocol();
    }
    expect_punct('{');
    while (!peek_punct('}')) {
      Rule r;
      r.loc = peek().loc;
      if (peek_ident("allow")) {
        advance();
        r.mode = Mode::kVisible;
      } else if (peek_ident("deny")) {
        advance();
        r.mode = Mode::kInvisible;
      } else {
        fail("'allow', 'deny' or '}'");
      }
      r.subject = expect_subject();
      expect_punct(':');
      r.path = expect_path();
      if (peek_punct('[')) {
        advance();
        r.protocol = expect_protocol();
        expect_punct(']');
      }
      expect_punct(';');
      p.rules.push_back(std::move(r));
    }
    expect_punct('}');
    return p;
  }

  Query parse_query() {
    Query q;
    q.loc = peek().loc;
    if (peek_ident("can") || peek_ident("explain")) {
      q.kind = peek_ident("can") ? Query::Kind::kCan : Query::Kind::kExplain;
      advance();
      q.viewer = expect_name();
      expect_ident("see");
      q.owner = expect_name();
      expect_punct(':');
      q.path = expect_path();
    } else if (peek_ident("show")) {
      advance();
      q.kind = Query::Kind::kShow;
      q.viewer = expect_name();
      expect_ident("for");
      q.owner = expect_name();
    } else {
      expect_ident("audience");
      q.kind = Query::Kind::kAudience;
      q.owner = expect_name();
      expect_punct(':');
      q.path = expect_path();
    }
    expect_punct(';');
    return q;
  }

  WhatIfStmt parse_whatif() {
    WhatIfStmt w;
    w.loc = peek().loc;
    expect_ident("whatif");
    expect_punct('{');
    while (!peek_punct('}')) {
      w.mutations.push_back(parse_mutation());
      expect_punct(';');
    }
    expect_punct('}');
    expect_ident("diff");
    w.diff_owner = expect_name();
    expect_punct(';');
    return w;
  }

  MutationStmt parse_mutation() {
    MutationStmt m;
    m.loc = peek().loc;
    if (peek_ident("create")) {
      advance();
      expect_ident("group");
      m.kind = MutationStmt::Kind::kCreateGroup;
      m.name = expect_name();
      if (peek_punct('<')) {
        advance();
        m.parent = expect_name();
      }
    } else if (peek_ident("delete")) {
      advance();
      expect_ident("group");
      m.kind = MutationStmt::Kind::kDeleteGroup;
      m.name = expect_name();
    } else if (peek_ident("join") || peek_ident("leave")) {
      m.kind = peek_ident("join") ? MutationStmt::Kind::kJoin
                                  : MutationStmt::Kind::kLeave;
      advance();
      m.name = expect_name();
      m.target = expect_name();
    } else if (peek_ident("move")) {
      advance();
      m.kind = MutationStmt::Kind::kMove;
      m.name = expect_name();
      expect_ident("to");
      m.target = expect_name();
    } else if (peek_ident("add") || peek_ident("remove")) {
      m.kind = peek_ident("add") ? MutationStmt::Kind::kAddContent
                                 : MutationStmt::Kind::kRemoveContent;
      advance();
      expect_ident("content");
      m.name = expect_name();
      expect_punct(':');
      m.path = expect_path();
    } else {
      fail("a mutation ('create', 'delete', 'join', 'leave', 'move', 'add' or "
           "'remove')");
    }
    return m;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

PolicyDocument parse(std::string_view text) {
  return Parser(text).parse_document();
}

Statement parse_statement(std::string_view text) {
  return Parser(text).parse_single();
}

}  // namespace pvn::dsl

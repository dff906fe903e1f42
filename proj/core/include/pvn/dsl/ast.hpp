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

#ifndef PVN_DSL_AST_HPP_
#define PVN_DSL_AST_HPP_

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pvn/error.hpp"
#include "pvn/ids.hpp"

// Abstract syntax of the policy language. Structural equality ignores
// source locations throughout.

namespace pvn::dsl {

// "/Everything/PersonalInfo/Phone" as segments, root name first.
using ContentPath = std::vector<std::string>;

std::string path_to_string(const ContentPath& path);

struct GroupDecl {
  std::string name;
  std::vector<std::string> parents;
  std::optional<std::string> owner;  // user hierarchy when set
  SourceLoc loc;

  friend bool operator==(const GroupDecl& a, const GroupDecl& b) {
    return a.name == b.name && a.parents == b.parents && a.owner == b.owner;
  }
};

struct MemberDecl {
  std::string name;
  std::vector<std::string> groups;
  SourceLoc loc;

  friend bool operator==(const MemberDecl& a, const MemberDecl& b) {
    return a.name == b.name && a.groups == b.groups;
  }
};

struct ContentNodeDecl {
  std::string name;
  std::vector<ContentNodeDecl> children;
  SourceLoc loc;

  friend bool operator==(const ContentNodeDecl& a, const ContentNodeDecl& b) {
    return a.name == b.name && a.children == b.children;
  }
};

struct ContentDecl {
  std::string owner;
  ContentNodeDecl root;
  SourceLoc loc;

  friend bool operator==(const ContentDecl& a, const ContentDecl& b) {
    return a.owner == b.owner && a.root == b.root;
  }
};

struct Rule {
  Mode mode = Mode::kVisible;  // allow -> visible, deny -> invisible
  std::string subject;         // "all", a group name or a member name
  ContentPath path;
  std::optional<Protocol> protocol;
  SourceLoc loc;

  friend bool operator==(const Rule& a, const Rule& b) {
    return a.mode == b.mode && a.subject == b.subject && a.path == b.path &&
           a.protocol == b.protocol;
  }
};

struct PolicyDecl {
  std::string owner;
  std::optional<Protocol> default_protocol;
  std::vector<Rule> rules;
  SourceLoc loc;

  friend bool operator==(const PolicyDecl& a, const PolicyDecl& b) {
    return a.owner == b.owner && a.default_protocol == b.default_protocol &&
           a.rules == b.rules;
  }
};

struct Query {
  enum class Kind : std::uint8_t { kCan, kShow, kAudience, kExplain };

  Kind kind = Kind::kCan;
  std::string viewer;  // can/show/explain
  std::string owner;
  ContentPath path;  // can/audience/explain
  SourceLoc loc;

  friend bool operator==(const Query& a, const Query& b) {
    return a.kind == b.kind && a.viewer == b.viewer && a.owner == b.owner &&
           a.path == b.path;
  }
};

struct MutationStmt {
  enum class Kind : std::uint8_t {
    kCreateGroup,
    kDeleteGroup,
    kJoin,
    kLeave,
    kMove,
    kAddContent,
    kRemoveContent,
  };

  Kind kind = Kind::kCreateGroup;
  std::string name;                  // group or member operand
  std::string target;                // join/leave/move target group
  std::optional<std::string> parent; // create-group "< parent"
  ContentPath path;                  // add/remove content
  SourceLoc loc;

  friend bool operator==(const MutationStmt& a, const MutationStmt& b) {
    return a.kind == b.kind && a.name == b.name && a.target == b.target &&
           a.parent == b.parent && a.path == b.path;
  }
};

struct WhatIfStmt {
  std::vector<MutationStmt> mutations;
  std::string diff_owner;
  SourceLoc loc;

  friend bool operator==(const WhatIfStmt& a, const WhatIfStmt& b) {
    return a.mutations == b.mutations && a.diff_owner == b.diff_owner;
  }
};

using Statement = std::variant<GroupDecl, MemberDecl, ContentDecl, PolicyDecl,
                               Query, WhatIfStmt, MutationStmt>;

struct PolicyDocument {
  std::vector<Statement> statements;

  friend bool operator==(const PolicyDocument&, const PolicyDocument&) = default;
};

SourceLoc statement_loc(const Statement& s);

}  // namespace pvn::dsl

#endif  // PVN_DSL_AST_HPP_

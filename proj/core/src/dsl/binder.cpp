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

#include "pvn/dsl/binder.hpp"

#include <set>
#include <string>

#include "pvn/dsl/printer.hpp"

namespace pvn::dsl {

namespace {

Subject bind_subject(const NetworkSnapshot& snap, const std::string& name,
                     SourceLoc loc) {
  if (name == "all") return Subject::group(NetworkSnapshot::kAll);
  if (auto g = snap.find_group(name)) return Subject::group(*g);
  if (auto m = snap.find_member(name)) return Subject::member(*m);
  throw Error(ErrorCode::kUnknownName, "unknown subject '" + name + "'", loc);
}

class Binder {
 public:
  explicit Binder(NetworkSnapshot base) : snap_(std::move(base)) {}

  BoundDocument run(const PolicyDocument& doc) {
    for (const Statement& stmt : doc.statements)
      std::visit([this](const auto& s) { handle(s); }, stmt);
    return BoundDocument{std::move(snap_), std::move(actions_)};
  }

 private:
  template <typename F>
  auto locate(SourceLoc loc, F&& f) -> decltype(f()) {
    try {
      return f();
    } catch (const Error& e) {
      if (e.location()) throw;
      throw e.with_location(loc);
    }
  }

  MemberId member_at(const std::string& name, SourceLoc loc) {
    if (auto m = snap_.find_member(name)) return *m;
    throw Error(ErrorCode::kUnknownName, "unknown member '" + name + "'", loc);
  }

  GroupId group_at(const std::string& name, SourceLoc loc) {
    if (auto g = snap_.find_group(name)) return *g;
    throw Error(ErrorCode::kUnknownName, "unknown group '" + name + "'", loc);
  }

  void handle(const GroupDecl& g) {
    std::vector<GroupId> parents;
    for (const std::string& p : g.parents) parents.push_back(group_at(p, g.loc));
    std::optional<MemberId> owner;
    if (g.owner) owner = member_at(*g.owner, g.loc);
    locate(g.loc, [&] { snap_ = snap_.add_group(g.name, parents, owner); });
  }

  void handle(const MemberDecl& m) {
    locate(m.loc, [&] { snap_ = snap_.add_member(m.name); });
    MemberId id = snap_.member(m.name);
    for (const std::string& g : m.groups) {
      GroupId gid = group_at(g, m.loc);
      locate(m.loc, [&] { snap_ = snap_.set_membership(id, gid, true); });
    }
  }

  void add_subtree(MemberId owner, ContentId parent, const ContentNodeDecl& node) {
    locate(node.loc,
           [&] { snap_ = snap_.add_content(owner, parent, node.name); });
    ContentId id = snap_.resolve_path(
        owner, snap_.content_path(parent) + "/" + node.name);
    for (const ContentNodeDecl& child : node.children)
      add_subtree(owner, id, child);
  }

  void handle(const ContentDecl& c) {
    MemberId owner = member_at(c.owner, c.loc);
    if (!content_owners_.insert(c.owner).second)
      throw Error(ErrorCode::kDuplicateDeclaration,
                  "duplicate content block for '" + c.owner + "'", c.loc);
    ContentId root = snap_.content_root(owner);
    if (c.root.name != snap_.content_name(root))
      throw Error(ErrorCode::kUnknownName,
                  "content tree for '" + c.owner + "' must be rooted at '" +
                      snap_.content_name(root) + "'",
                  c.loc);
    for (const ContentNodeDecl& child : c.root.children)
      add_subtree(owner, root, child);
  }

  void handle(const PolicyDecl& p) {
    MemberId owner = member_at(p.owner, p.loc);
    if (p.default_protocol) {
      locate(p.loc, [&] {
        snap_ = snap_.set_default_protocol(owner, *p.default_protocol);
      });
    }
    for (const Rule& r : p.rules) {
      Assignment a;
      a.owner = owner;
      a.subject = bind_subject(snap_, r.subject, r.loc);
      a.content = locate(r.loc, [&] {
        return snap_.resolve_path(owner, path_to_string(r.path));
      });
      a.mode = r.mode;
      a.protocol = r.protocol;
      locate(r.loc, [&] { snap_ = snap_.set_assignment(a); });
    }
  }

  void handle(const Query& q) {
    BoundQuery bound;
    bound.ast = q;
    bound.owner = member_at(q.owner, q.loc);
    bound.viewer = q.kind == Query::Kind::kAudience
                       ? bound.owner
                       : member_at(q.viewer, q.loc);
    bound.content =
        q.kind == Query::Kind::kShow
            ? snap_.content_root(bound.owner)
            : locate(q.loc, [&] {
                return snap_.resolve_path(bound.owner, path_to_string(q.path));
              });
    actions_.push_back(std::move(bound));
  }

  void handle(const WhatIfStmt& w) {
    BoundWhatIf bound;
    bound.ast = w;
    for (const MutationStmt& m : w.mutations)
      bound.mutations.push_back(to_mutation(m));
    bound.diff_owner = member_at(w.diff_owner, w.loc);
    actions_.push_back(std::move(bound));
  }

  void handle(const MutationStmt& m) {
    std::vector<Mutation> one{to_mutation(m)};
    try {
      snap_ = apply_batch(snap_, one);
    } catch (const BatchError& e) {
      // A bare statement is not a batch; report the underlying error.
      throw Error(e.code(), e.inner_message(), m.loc);
    }
  }

  NetworkSnapshot snap_;
  std::vector<BoundAction> actions_;
  std::set<std::string> content_owners_;
};

}  // namespace

Mutation to_mutation(const MutationStmt& stmt) {
  using Kind = MutationStmt::Kind;
  switch (stmt.kind) {
    case Kind::kCreateGroup: {
      std::vector<std::string> parents;
      if (stmt.parent) parents.push_back(*stmt.parent);
      return Mutation::create_group(stmt.name, std::move(parents));
    }
    case Kind::kDeleteGroup:
      return Mutation::delete_group(stmt.name);
    case Kind::kJoin:
      return Mutation::join(stmt.name, stmt.target);
    case Kind::kLeave:
      return Mutation::leave(stmt.name, stmt.target);
    case Kind::kMove:
      return Mutation::move(stmt.name, stmt.target);
    case Kind::kAddContent:
      return Mutation::add_content(stmt.name, path_to_string(stmt.path));
    default:
      return Mutation::remove_content(stmt.name, path_to_string(stmt.path));
  }
}

BoundDocument bind(const PolicyDocument& doc, NetworkSnapshot base) {
  return Binder(std::move(base)).run(doc);
}

}  // namespace pvn::dsl

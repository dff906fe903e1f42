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

#include "pvn/dsl/printer.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pvn::dsl {

std::string path_to_string(const ContentPath& path) {
  std::string out;
  for (const std::string& seg : path) {
    out += '/';
    out += seg;
  }
  return out;
}

SourceLoc statement_loc(const Statement& s) {
  return std::visit([](const auto& stmt) { return stmt.loc; }, s);
}

namespace {

void join_names(std::ostream& os, const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) os << ", ";
    os << names[i];
  }
}

void print_tree(std::ostream& os, const ContentNodeDecl& node, int depth) {
  for (int i = 0; i < depth; ++i) os << "  ";
  os << node.name;
  if (node.children.empty()) {
    os << ";\n";
    return;
  }
  os << " {\n";
  for (const ContentNodeDecl& child : node.children)
    print_tree(os, child, depth + 1);
  for (int i = 0; i < depth; ++i) os << "  ";
  os << "}\n";
}

void print_rule(std::ostream& os, const Rule& r) {
  os << "  " << (r.mode == Mode::kVisible ? "allow" : "deny") << ' '
     << r.subject << ':' << path_to_string(r.path);
  if (r.protocol) os << " [" << to_string(*r.protocol) << ']';
  os << ";\n";
}

void print_mutation(std::ostream& os, const MutationStmt& m) {
  using Kind = MutationStmt::Kind;
  switch (m.kind) {
    case Kind::kCreateGroup:
      os << "create group " << m.name;
      if (m.parent) os << " < " << *m.parent;
      break;
    case Kind::kDeleteGroup:
      os << "delete group " << m.name;
      break;
    case Kind::kJoin:
      os << "join " << m.name << ' ' << m.target;
      break;
    case Kind::kLeave:
      os << "leave " << m.name << ' ' << m.target;
      break;
    case Kind::kMove:
      os << "move " << m.name << " to " << m.target;
      break;
    case Kind::kAddContent:
      os << "add content " << m.name << ':' << path_to_string(m.path);
      break;
    case Kind::kRemoveContent:
      os << "remove content " << m.name << ':' << path_to_string(m.path);
      break;
  }
}

struct StatementPrinter {
  std::ostream& os;

  void operator()(const GroupDecl& g) {
    os << "group " << g.name;
    if (!g.parents.empty()) {
      os << " < ";
      join_names(os, g.parents);
    }
    if (g.owner) os << " owner " << *g.owner;
    os << ";\n";
  }

  void operator()(const MemberDecl& m) {
    os << "member " << m.name;
    if (!m.groups.empty()) {
      os << " in ";
      join_names(os, m.groups);
    }
    os << ";\n";
  }

  void operator()(const ContentDecl& c) {
    os << "content " << c.owner << " {\n";
    print_tree(os, c.root, 1);
    os << "}\n";
  }

  void operator()(const PolicyDecl& p) {
    os << "policy " << p.owner;
    if (p.default_protocol) os << " default " << to_string(*p.default_protocol);
    os << " {\n";
    for (const Rule& r : p.rules) print_rule(os, r);
    os << "}\n";
  }

  void operator()(const Query& q) {
    switch (q.kind) {
      case Query::Kind::kCan:
        os << "can " << q.viewer << " see " << q.owner << ':'
           << path_to_string(q.path);
        break;
      case Query::Kind::kShow:
        os << "show " << q.viewer << " for " << q.owner;
        break;
      case Query::Kind::kAudience:
        os << "audience " << q.owner << ':' << path_to_string(q.path);
        break;
      case Query::Kind::kExplain:
        os << "explain " << q.viewer << " see " << q.owner << ':'
           << path_to_string(q.path);
        break;
    }
    os << ";\n";
  }

  void operator()(const WhatIfStmt& w) {
    os << "whatif {\n";
    for (const MutationStmt& m : w.mutations) {
      os << "  ";
      print_mutation(os, m);
      os << ";\n";
    }
    os << "} diff " << w.diff_owner << ";\n";
  }

  void operator()(const MutationStmt& m) {
    print_mutation(os, m);
    os << ";\n";
  }
};

}  // namespace

std::string print(const Statement& stmt) {
  std::ostringstream os;
  std::visit(StatementPrinter{os}, stmt);
  return os.str();
}

std::string print(const PolicyDocument& doc) {
  std::ostringstream os;
  for (const Statement& s : doc.statements) std::visit(StatementPrinter{os}, s);
  return os.str();
}

// ---------------------------------------------------------------------------
// canonical snapshot serialization

namespace {

void print_content_node(std::ostream& os, const NetworkSnapshot& snap,
                        ContentId node, int depth) {
  for (int i = 0; i < depth; ++i) os << "  ";
  os << snap.content_name(node);
  const auto& kids = snap.content_children(node);
  if (kids.empty()) {
    os << ";\n";
    return;
  }
  os << " {\n";
  for (ContentId child : kids) print_content_node(os, snap, child, depth + 1);
  for (int i = 0; i < depth; ++i) os << "  ";
  os << "}\n";
}

std::vector<std::string> sorted_group_names(const NetworkSnapshot& snap,
                                            const std::set<GroupId>& groups,
                                            bool system_only) {
  std::vector<std::string> names;
  for (GroupId g : groups) {
    if (system_only && !snap.is_system_group(g)) continue;
    if (!system_only && snap.is_system_group(g)) continue;
    names.push_back(snap.group_name(g));
  }
  std::sort(names.begin(), names.end());
  return names;
}

// Declaration order: parents before children so the output rebinds without
// forward references; names break ties for determinism.
std::vector<GroupId> topo_by_name(const NetworkSnapshot& snap,
                                  const std::map<std::string, GroupId>& groups) {
  std::vector<GroupId> out;
  std::set<GroupId> emitted;
  while (out.size() < groups.size()) {
    for (const auto& [name, g] : groups) {
      if (emitted.count(g)) continue;
      bool ready = true;
      for (GroupId p : snap.declared_parents(g)) {
        if (groups.count(snap.group_name(p)) && !emitted.count(p)) ready = false;
      }
      if (ready) {
        out.push_back(g);
        emitted.insert(g);
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::string print(const NetworkSnapshot& snap) {
  std::ostringstream os;

  std::map<std::string, GroupId> system_groups;
  std::map<std::pair<std::string, std::string>, GroupId> user_groups;
  for (GroupId g : snap.groups()) {
    if (g == NetworkSnapshot::kAll) continue;
    if (auto owner = snap.hierarchy_owner(g))
      user_groups.emplace(
          std::make_pair(snap.member_name(*owner), snap.group_name(g)), g);
    else
      system_groups.emplace(snap.group_name(g), g);
  }
  std::map<std::string, MemberId> members;
  for (MemberId m : snap.members()) members.emplace(snap.member_name(m), m);

  for (GroupId g : topo_by_name(snap, system_groups)) {
    os << "group " << snap.group_name(g);
    std::vector<std::string> parents;
    for (GroupId p : snap.declared_parents(g))
      parents.push_back(snap.group_name(p));
    std::sort(parents.begin(), parents.end());
    if (!parents.empty()) {
      os << " < ";
      join_names(os, parents);
    }
    os << ";\n";
  }

  for (const auto& [name, m] : members) {
    os << "member " << name;
    auto groups = sorted_group_names(snap, snap.memberships(m), true);
    if (!groups.empty()) {
      os << " in ";
      join_names(os, groups);
    }
    os << ";\n";
  }

  for (const auto& [owner_name, unused] : members) {
    std::map<std::string, GroupId> mine;
    for (const auto& [key, g] : user_groups) {
      if (key.first == owner_name) mine.emplace(key.second, g);
    }
    for (GroupId g : topo_by_name(snap, mine)) {
      os << "group " << snap.group_name(g);
      std::vector<std::string> parents;
      for (GroupId p : snap.declared_parents(g))
        parents.push_back(snap.group_name(p));
      std::sort(parents.begin(), parents.end());
      if (!parents.empty()) {
        os << " < ";
        join_names(os, parents);
      }
      os << " owner " << owner_name << ";\n";
    }
  }

  // Memberships in user-defined groups replay as join statements; the
  // member declarations above can only reference system groups, which are
  // already declared at that point.
  for (const auto& [name, m] : members) {
    for (const std::string& g : sorted_group_names(snap, snap.memberships(m), false))
      os << "join " << name << ' ' << g << ";\n";
  }

  for (const auto& [name, m] : members) {
    ContentId root = snap.content_root(m);
    if (snap.content_children(root).empty()) continue;  // default tree
    os << "content " << name << " {\n";
    print_content_node(os, snap, root, 1);
    os << "}\n";
  }

  for (const auto& [name, m] : members) {
    bool optimistic = snap.default_protocol(m) == Protocol::kOptimistic;
    std::vector<const Assignment*> rules;
    for (const Assignment& a : snap.assignments()) {
      if (a.owner == m) rules.push_back(&a);
    }
    if (!optimistic && rules.empty()) continue;
    os << "policy " << name;
    if (optimistic) os << " default optimistic";
    os << " {\n";
    for (const Assignment* a : rules) {
      os << "  " << (a->mode == Mode::kVisible ? "allow" : "deny") << ' '
         << snap.subject_name(a->subject) << ':' << snap.content_path(a->content);
      if (a->protocol) os << " [" << to_string(*a->protocol) << ']';
      os << ";\n";
    }
    os << "}\n";
  }

  return os.str();
}

}  // namespace pvn::dsl

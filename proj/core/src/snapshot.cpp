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

#include "pvn/snapshot.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <string>

namespace pvn {

namespace {

constexpr std::array<std::string_view, 32> kReservedWords = {
    "group",    "member",  "content", "policy",      "default", "allow",
    "deny",     "all",     "can",     "see",         "show",    "for",
    "audience", "explain", "whatif",  "diff",        "create",  "delete",
    "join",     "leave",   "move",    "to",          "add",     "remove",
    "owner",    "in",      "optimistic", "pessimistic", "cautious",
    "watch",    "save",    "quit",
};

bool is_name_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

std::string q(std::string_view s) { return "'" + std::string(s) + "'"; }

}  // namespace

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  if (name[0] >= '0' && name[0] <= '9') return false;
  for (char c : name) {
    if (!is_name_char(c)) return false;
  }
  return std::find(kReservedWords.begin(), kReservedWords.end(), name) ==
         kReservedWords.end();
}

NetworkSnapshot::NetworkSnapshot() {
  GroupRec all;
  all.name = "all";
  groups_.emplace(kAll.value, std::move(all));
  group_names_.emplace("all", kAll.value);
}

// ---------------------------------------------------------------------------
// record access

const NetworkSnapshot::GroupRec& NetworkSnapshot::group_rec(GroupId g) const {
  auto it = groups_.find(g.value);
  if (it == groups_.end()) throw Error(ErrorCode::kUnknownGroup, "no such group");
  return it->second;
}

const NetworkSnapshot::MemberRec& NetworkSnapshot::member_rec(MemberId m) const {
  auto it = members_.find(m.value);
  if (it == members_.end()) throw Error(ErrorCode::kUnknownMember, "no such member");
  return it->second;
}

const NetworkSnapshot::ContentRec& NetworkSnapshot::content_rec(ContentId c) const {
  auto it = contents_.find(c.value);
  if (it == contents_.end()) throw Error(ErrorCode::kNotFound, "no such content node");
  return it->second;
}

// ---------------------------------------------------------------------------
// members

std::optional<MemberId> NetworkSnapshot::find_member(std::string_view name) const {
  auto it = member_names_.find(std::string(name));
  if (it == member_names_.end()) return std::nullopt;
  return MemberId{it->second};
}

MemberId NetworkSnapshot::member(std::string_view name) const {
  if (auto m = find_member(name)) return *m;
  throw Error(ErrorCode::kUnknownMember, "unknown member " + q(name));
}

const std::string& NetworkSnapshot::member_name(MemberId m) const {
  return member_rec(m).name;
}

bool NetworkSnapshot::has_member(MemberId m) const {
  return members_.count(m.value) != 0;
}

std::vector<MemberId> NetworkSnapshot::members() const {
  std::vector<MemberId> out;
  out.reserve(members_.size());
  for (const auto& [id, rec] : members_) out.push_back(MemberId{id});
  return out;
}

std::size_t NetworkSnapshot::member_count() const { return members_.size(); }

const std::set<GroupId>& NetworkSnapshot::memberships(MemberId m) const {
  return member_rec(m).groups;
}

Protocol NetworkSnapshot::default_protocol(MemberId m) const {
  return member_rec(m).default_protocol;
}

// ---------------------------------------------------------------------------
// groups

std::optional<GroupId> NetworkSnapshot::find_group(std::string_view name) const {
  auto it = group_names_.find(std::string(name));
  if (it == group_names_.end()) return std::nullopt;
  return GroupId{it->second};
}

GroupId NetworkSnapshot::group(std::string_view name) const {
  if (auto g = find_group(name)) return *g;
  throw Error(ErrorCode::kUnknownGroup, "unknown group " + q(name));
}

const std::string& NetworkSnapshot::group_name(GroupId g) const {
  return group_rec(g).name;
}

bool NetworkSnapshot::has_group(GroupId g) const {
  return groups_.count(g.value) != 0;
}

std::vector<GroupId> NetworkSnapshot::groups() const {
  std::vector<GroupId> out;
  out.reserve(groups_.size());
  for (const auto& [id, rec] : groups_) out.push_back(GroupId{id});
  return out;
}

std::size_t NetworkSnapshot::group_count() const { return groups_.size(); }

std::optional<MemberId> NetworkSnapshot::hierarchy_owner(GroupId g) const {
  return group_rec(g).owner;
}

bool NetworkSnapshot::is_system_group(GroupId g) const {
  return !group_rec(g).owner.has_value();
}

const std::set<GroupId>& NetworkSnapshot::declared_parents(GroupId g) const {
  return group_rec(g).parents;
}

std::set<GroupId> NetworkSnapshot::effective_parents(GroupId g) const {
  const GroupRec& rec = group_rec(g);
  std::set<GroupId> parents = rec.parents;
  if (parents.empty() && !rec.owner && g != kAll) parents.insert(kAll);
  return parents;
}

std::set<GroupId> NetworkSnapshot::effective_children(GroupId g) const {
  std::set<GroupId> kids = group_rec(g).children;
  if (g == kAll) {
    for (const auto& [id, rec] : groups_) {
      if (id != kAll.value && !rec.owner && rec.parents.empty())
        kids.insert(GroupId{id});
    }
  }
  return kids;
}

const std::set<MemberId>& NetworkSnapshot::direct_members(GroupId g) const {
  return group_rec(g).members;
}

std::set<MemberId> NetworkSnapshot::member_closure(GroupId g) const {
  group_rec(g);  // existence check
  if (g == kAll) {
    std::set<MemberId> everyone;
    for (const auto& [id, rec] : members_) everyone.insert(MemberId{id});
    return everyone;
  }
  std::set<MemberId> out;
  std::set<GroupId> seen{g};
  std::deque<GroupId> todo{g};
  while (!todo.empty()) {
    GroupId cur = todo.front();
    todo.pop_front();
    const GroupRec& rec = group_rec(cur);
    out.insert(rec.members.begin(), rec.members.end());
    for (GroupId child : rec.children) {
      if (seen.insert(child).second) todo.push_back(child);
    }
  }
  return out;
}

bool NetworkSnapshot::reaches(GroupId ancestor, GroupId descendant) const {
  if (ancestor == descendant) return true;
  std::set<GroupId> seen{ancestor};
  std::deque<GroupId> todo{ancestor};
  while (!todo.empty()) {
    GroupId cur = todo.front();
    todo.pop_front();
    for (GroupId child : effective_children(cur)) {
      if (child == descendant) return true;
      if (seen.insert(child).second) todo.push_back(child);
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// content trees

ContentId NetworkSnapshot::content_root(MemberId owner) const {
  return member_rec(owner).root;
}

const std::string& NetworkSnapshot::content_name(ContentId c) const {
  return content_rec(c).name;
}

MemberId NetworkSnapshot::content_owner(ContentId c) const {
  return content_rec(c).owner;
}

std::optional<ContentId> NetworkSnapshot::content_parent(ContentId c) const {
  return content_rec(c).parent;
}

const std::vector<ContentId>& NetworkSnapshot::content_children(ContentId c) const {
  return content_rec(c).children;
}

bool NetworkSnapshot::has_content(ContentId c) const {
  return contents_.count(c.value) != 0;
}

std::vector<ContentId> NetworkSnapshot::content_nodes(MemberId owner) const {
  return subtree(content_root(owner));
}

std::vector<ContentId> NetworkSnapshot::subtree(ContentId c) const {
  std::vector<ContentId> out;
  std::vector<ContentId> stack{c};
  while (!stack.empty()) {
    ContentId cur = stack.back();
    stack.pop_back();
    out.push_back(cur);
    const auto& kids = content_rec(cur).children;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

std::vector<ContentId> NetworkSnapshot::ancestor_chain(ContentId c) const {
  std::vector<ContentId> chain;
  for (std::optional<ContentId> cur = c; cur; cur = content_rec(*cur).parent)
    chain.push_back(*cur);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

ContentId NetworkSnapshot::resolve_path(MemberId owner,
                                        std::string_view path) const {
  const MemberRec& rec = member_rec(owner);
  auto fail = [&] {
    return Error(ErrorCode::kUnknownPath,
                 "no content node " + q(path) + " in " + rec.name + "'s tree");
  };
  if (path.empty() || path[0] != '/') throw fail();
  std::vector<std::string_view> segments;
  std::size_t pos = 1;
  while (pos <= path.size()) {
    std::size_t next = path.find('/', pos);
    std::string_view seg = next == std::string_view::npos
                               ? path.substr(pos)
                               : path.substr(pos, next - pos);
    if (seg.empty()) throw fail();
    segments.push_back(seg);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  if (segments.empty() || segments[0] != content_rec(rec.root).name) throw fail();
  ContentId cur = rec.root;
  for (std::size_t i = 1; i < segments.size(); ++i) {
    const ContentRec& node = content_rec(cur);
    ContentId next{0};
    bool found = false;
    for (ContentId child : node.children) {
      if (content_rec(child).name == segments[i]) {
        next = child;
        found = true;
        break;
      }
    }
    if (!found) throw fail();
    cur = next;
  }
  return cur;
}

std::string NetworkSnapshot::content_path(ContentId c) const {
  std::string out;
  for (ContentId node : ancestor_chain(c)) {
    out += '/';
    out += content_rec(node).name;
  }
  return out;
}

// ---------------------------------------------------------------------------
// assignments

std::span<const Assignment> NetworkSnapshot::assignments() const {
  return assignments_;
}

const Assignment* NetworkSnapshot::find_assignment(MemberId owner,
                                                   Subject subject,
                                                   ContentId content) const {
  for (const Assignment& a : assignments_) {
    if (a.owner == owner && a.subject == subject && a.content == content)
      return &a;
  }
  return nullptr;
}

std::string NetworkSnapshot::subject_name(Subject s) const {
  return s.is_group() ? group_name(s.as_group()) : member_name(s.as_member());
}

// ---------------------------------------------------------------------------
// in-place mutation guts

MemberId NetworkSnapshot::mut_add_member(std::string_view name) {
  if (!valid_name(name))
    throw Error(ErrorCode::kInvalidName, "invalid member name " + q(name));
  if (member_names_.count(std::string(name)) || group_names_.count(std::string(name)))
    throw Error(ErrorCode::kDuplicateName, "name " + q(name) + " already in use");
  MemberId id{next_member_++};
  ContentId root{next_content_++};
  ContentRec root_rec;
  root_rec.name = "Everything";
  root_rec.owner = id;
  contents_.emplace(root.value, std::move(root_rec));
  MemberRec rec;
  rec.name = std::string(name);
  rec.root = root;
  members_.emplace(id.value, std::move(rec));
  member_names_.emplace(std::string(name), id.value);
  return id;
}

GroupId NetworkSnapshot::mut_add_group(std::string_view name,
                                       const std::vector<GroupId>& parents,
                                       std::optional<MemberId> hierarchy_owner) {
  if (!valid_name(name))
    throw Error(ErrorCode::kInvalidName, "invalid group name " + q(name));
  if (group_names_.count(std::string(name)) || member_names_.count(std::string(name)))
    throw Error(ErrorCode::kDuplicateName, "name " + q(name) + " already in use");
  if (hierarchy_owner) member_rec(*hierarchy_owner);  // must exist

  std::set<GroupId> parent_set;
  for (GroupId p : parents) {
    const GroupRec& prec = group_rec(p);
    if (hierarchy_owner) {
      if (prec.owner != hierarchy_owner)
        throw Error(ErrorCode::kCrossHierarchy,
                    "parent " + q(prec.name) + " is not in " +
                        member_rec(*hierarchy_owner).name + "'s hierarchy");
      parent_set.insert(p);
    } else {
      if (prec.owner)
        throw Error(ErrorCode::kCrossHierarchy,
                    "system group cannot have user-defined parent " + q(prec.name));
      if (p != kAll) parent_set.insert(p);  // parent `all` stays implicit
    }
  }

  GroupId id{next_group_++};
  GroupRec rec;
  rec.name = std::string(name);
  rec.owner = hierarchy_owner;
  rec.parents = parent_set;
  for (GroupId p : parent_set) groups_.at(p.value).children.insert(id);
  groups_.emplace(id.value, std::move(rec));
  group_names_.emplace(std::string(name), id.value);
  return id;
}

void NetworkSnapshot::check_edge_hierarchy(GroupId child, GroupId parent) const {
  const GroupRec& crec = group_rec(child);
  const GroupRec& prec = group_rec(parent);
  if (crec.owner != prec.owner)
    throw Error(ErrorCode::kCrossHierarchy,
                "groups " + q(crec.name) + " and " + q(prec.name) +
                    " belong to different hierarchies");
}

void NetworkSnapshot::mut_add_subgroup_edge(GroupId child, GroupId parent) {
  const GroupRec& crec = group_rec(child);
  group_rec(parent);
  if (child == kAll)
    throw Error(ErrorCode::kCannotModifyAll, "'all' cannot have parents");
  if (parent == kAll) {
    if (crec.owner)
      throw Error(ErrorCode::kCrossHierarchy,
                  "user-defined group " + q(crec.name) + " cannot hang under 'all'");
    return;  // implicit already; accepting is a no-op
  }
  check_edge_hierarchy(child, parent);
  if (crec.parents.count(parent)) return;  // already present
  if (child == parent || reaches(child, parent))
    throw Error(ErrorCode::kCycleDetected,
                "edge " + q(crec.name) + " < " + q(group_name(parent)) +
                    " would create a cycle");
  groups_.at(child.value).parents.insert(parent);
  groups_.at(parent.value).children.insert(child);
}

void NetworkSnapshot::mut_remove_subgroup_edge(GroupId child, GroupId parent) {
  const GroupRec& crec = group_rec(child);
  group_rec(parent);
  if (!crec.parents.count(parent))
    throw Error(ErrorCode::kNotFound,
                "no stored edge " + q(crec.name) + " < " + q(group_name(parent)));
  groups_.at(child.value).parents.erase(parent);
  groups_.at(parent.value).children.erase(child);
}

void NetworkSnapshot::mut_delete_group(GroupId g) {
  const GroupRec& rec = group_rec(g);
  if (g == kAll)
    throw Error(ErrorCode::kCannotModifyAll, "'all' cannot be deleted");
  for (GroupId child : rec.children) groups_.at(child.value).parents.erase(g);
  for (GroupId parent : rec.parents) groups_.at(parent.value).children.erase(g);
  for (MemberId m : rec.members) members_.at(m.value).groups.erase(g);
  std::erase_if(assignments_, [&](const Assignment& a) {
    return a.subject == Subject::group(g);
  });
  group_names_.erase(rec.name);
  groups_.erase(g.value);
}

void NetworkSnapshot::mut_set_membership(MemberId m, GroupId g, bool present) {
  member_rec(m);
  group_rec(g);
  if (g == kAll)
    throw Error(ErrorCode::kCannotModifyAll,
                "membership of 'all' is implicit and cannot be changed");
  if (present) {
    members_.at(m.value).groups.insert(g);
    groups_.at(g.value).members.insert(m);
  } else {
    members_.at(m.value).groups.erase(g);
    groups_.at(g.value).members.erase(m);
  }
}

ContentId NetworkSnapshot::mut_add_content(MemberId owner, ContentId parent,
                                           std::string_view name) {
  member_rec(owner);
  const ContentRec& prec = content_rec(parent);
  if (prec.owner != owner)
    throw Error(ErrorCode::kForeignContent,
                "content node belongs to " + member_rec(prec.owner).name +
                    ", not " + member_rec(owner).name);
  if (!valid_name(name))
    throw Error(ErrorCode::kInvalidName, "invalid content name " + q(name));
  for (ContentId sib : prec.children) {
    if (content_rec(sib).name == name)
      throw Error(ErrorCode::kDuplicateSiblingName,
                  "sibling named " + q(name) + " already exists under " +
                      content_path(parent));
  }
  ContentId id{next_content_++};
  ContentRec rec;
  rec.name = std::string(name);
  rec.owner = owner;
  rec.parent = parent;
  contents_.emplace(id.value, std::move(rec));
  auto& kids = contents_.at(parent.value).children;
  kids.insert(std::upper_bound(kids.begin(), kids.end(), id,
                               [this](ContentId a, ContentId b) {
                                 return content_rec(a).name < content_rec(b).name;
                               }),
              id);
  return id;
}

void NetworkSnapshot::mut_remove_content(MemberId owner, ContentId node) {
  member_rec(owner);
  const ContentRec& rec = content_rec(node);
  if (rec.owner != owner)
    throw Error(ErrorCode::kForeignContent,
                "content node belongs to " + member_rec(rec.owner).name +
                    ", not " + member_rec(owner).name);
  if (!rec.parent)
    throw Error(ErrorCode::kCannotRemoveRoot, "the root node cannot be removed");
  std::vector<ContentId> doomed = subtree(node);
  std::set<ContentId> doomed_set(doomed.begin(), doomed.end());
  std::erase_if(assignments_, [&](const Assignment& a) {
    return doomed_set.count(a.content) != 0;
  });
  auto& kids = contents_.at(rec.parent->value).children;
  kids.erase(std::find(kids.begin(), kids.end(), node));
  for (ContentId c : doomed) contents_.erase(c.value);
}

void NetworkSnapshot::check_subject(MemberId owner, Subject s) const {
  if (s.is_group()) {
    const GroupRec& rec = group_rec(s.as_group());
    if (rec.owner && rec.owner != owner)
      throw Error(ErrorCode::kForeignSubjectHierarchy,
                  "group " + q(rec.name) + " belongs to " +
                      member_rec(*rec.owner).name + "'s private hierarchy");
  } else {
    member_rec(s.as_member());
  }
}

void NetworkSnapshot::mut_set_assignment(const Assignment& a) {
  member_rec(a.owner);
  const ContentRec& crec = content_rec(a.content);
  if (crec.owner != a.owner)
    throw Error(ErrorCode::kForeignContent,
                "only " + member_rec(crec.owner).name +
                    " can assign visibility over " + content_path(a.content));
  check_subject(a.owner, a.subject);
  for (Assignment& existing : assignments_) {
    if (existing.owner == a.owner && existing.subject == a.subject &&
        existing.content == a.content) {
      existing.mode = a.mode;
      existing.protocol = a.protocol;
      return;
    }
  }
  assignments_.push_back(a);
}

void NetworkSnapshot::mut_clear_assignment(MemberId owner, Subject subject,
                                           ContentId content) {
  auto it = std::find_if(assignments_.begin(), assignments_.end(),
                         [&](const Assignment& a) {
                           return a.owner == owner && a.subject == subject &&
                                  a.content == content;
                         });
  if (it == assignments_.end())
    throw Error(ErrorCode::kNotFound, "no such assignment");
  assignments_.erase(it);
}

void NetworkSnapshot::mut_set_default_protocol(MemberId owner, Protocol p) {
  member_rec(owner);
  members_.at(owner.value).default_protocol = p;
}

// ---------------------------------------------------------------------------
// functional wrappers

NetworkSnapshot NetworkSnapshot::add_member(std::string_view name) const {
  NetworkSnapshot next = *this;
  next.mut_add_member(name);
  next.bump();
  return next;
}

NetworkSnapshot NetworkSnapshot::add_group(
    std::string_view name, const std::vector<GroupId>& parents,
    std::optional<MemberId> hierarchy_owner) const {
  NetworkSnapshot next = *this;
  next.mut_add_group(name, parents, hierarchy_owner);
  next.bump();
  return next;
}

NetworkSnapshot NetworkSnapshot::add_subgroup_edge(GroupId child,
                                                   GroupId parent) const {
  NetworkSnapshot next = *this;
  next.mut_add_subgroup_edge(child, parent);
  next.bump();
  return next;
}

NetworkSnapshot NetworkSnapshot::remove_subgroup_edge(GroupId child,
                                                      GroupId parent) const {
  NetworkSnapshot next = *this;
  next.mut_remove_subgroup_edge(child, parent);
  next.bump();
  return next;
}

NetworkSnapshot NetworkSnapshot::delete_group(GroupId g) const {
  NetworkSnapshot next = *this;
  next.mut_delete_group(g);
  next.bump();
  return next;
}

NetworkSnapshot NetworkSnapshot::set_membership(MemberId m, GroupId g,
                                                bool present) const {
  NetworkSnapshot next = *this;
  next.mut_set_membership(m, g, present);
  next.bump();
  return next;
}

NetworkSnapshot NetworkSnapshot::add_content(MemberId owner, ContentId parent,
                                             std::string_view name) const {
  NetworkSnapshot next = *this;
  next.mut_add_content(owner, parent, name);
  next.bump();
  return next;
}

NetworkSnapshot NetworkSnapshot::remove_content(MemberId owner,
                                                ContentId node) const {
  NetworkSnapshot next = *this;
  next.mut_remove_content(owner, node);
  next.bump();
  return next;
}

NetworkSnapshot NetworkSnapshot::set_assignment(const Assignment& a) const {
  NetworkSnapshot next = *this;
  next.mut_set_assignment(a);
  next.bump();
  return next;
}

NetworkSnapshot NetworkSnapshot::clear_assignment(MemberId owner, Subject subject,
                                                  ContentId content) const {
  NetworkSnapshot next = *this;
  next.mut_clear_assignment(owner, subject, content);
  next.bump();
  return next;
}

NetworkSnapshot NetworkSnapshot::set_default_protocol(MemberId owner,
                                                      Protocol p) const {
  NetworkSnapshot next = *this;
  next.mut_set_default_protocol(owner, p);
  next.bump();
  return next;
}

}  // namespace pvn

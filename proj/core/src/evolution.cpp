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

#include "pvn/evolution.hpp"

#include <map>
#include <set>

#include "pvn/resolution.hpp"

namespace pvn {

// ---------------------------------------------------------------------------
// Mutation factories

Mutation Mutation::add_member(std::string name) {
  Mutation m;
  m.kind = Kind::kAddMember;
  m.member = std::move(name);
  return m;
}

Mutation Mutation::create_group(std::string name, std::vector<std::string> parents,
                                std::optional<std::string> hierarchy_owner) {
  Mutation m;
  m.kind = Kind::kCreateGroup;
  m.group = std::move(name);
  m.parents = std::move(parents);
  m.hierarchy_owner = std::move(hierarchy_owner);
  return m;
}

Mutation Mutation::delete_group(std::string name) {
  Mutation m;
  m.kind = Kind::kDeleteGroup;
  m.group = std::move(name);
  return m;
}

Mutation Mutation::add_subgroup_edge(std::string child, std::string parent) {
  Mutation m;
  m.kind = Kind::kAddSubgroupEdge;
  m.group = std::move(child);
  m.parents = {std::move(parent)};
  return m;
}

Mutation Mutation::remove_subgroup_edge(std::string child, std::string parent) {
  Mutation m;
  m.kind = Kind::kRemoveSubgroupEdge;
  m.group = std::move(child);
  m.parents = {std::move(parent)};
  return m;
}

Mutation Mutation::join(std::string member, std::string group) {
  Mutation m;
  m.kind = Kind::kJoin;
  m.member = std::move(member);
  m.group = std::move(group);
  return m;
}

Mutation Mutation::leave(std::string member, std::string group) {
  Mutation m;
  m.kind = Kind::kLeave;
  m.member = std::move(member);
  m.group = std::move(group);
  return m;
}

Mutation Mutation::move(std::string member, std::string to_group,
                        std::optional<std::string> from_group) {
  Mutation m;
  m.kind = Kind::kMove;
  m.member = std::move(member);
  m.group = std::move(to_group);
  m.from_group = std::move(from_group);
  return m;
}

Mutation Mutation::add_content(std::string owner, std::string path) {
  Mutation m;
  m.kind = Kind::kAddContent;
  m.member = std::move(owner);
  m.path = std::move(path);
  return m;
}

Mutation Mutation::remove_content(std::string owner, std::string path) {
  Mutation m;
  m.kind = Kind::kRemoveContent;
  m.member = std::move(owner);
  m.path = std::move(path);
  return m;
}

Mutation Mutation::set_assignment(std::string owner, std::string subject,
                                  std::string path, Mode mode,
                                  std::optional<Protocol> protocol) {
  Mutation m;
  m.kind = Kind::kSetAssignment;
  m.member = std::move(owner);
  m.subject = std::move(subject);
  m.path = std::move(path);
  m.mode = mode;
  m.protocol = protocol;
  return m;
}

Mutation Mutation::clear_assignment(std::string owner, std::string subject,
                                    std::string path) {
  Mutation m;
  m.kind = Kind::kClearAssignment;
  m.member = std::move(owner);
  m.subject = std::move(subject);
  m.path = std::move(path);
  return m;
}

Mutation Mutation::set_default_protocol(std::string owner, Protocol p) {
  Mutation m;
  m.kind = Kind::kSetDefaultProtocol;
  m.member = std::move(owner);
  m.protocol = p;
  return m;
}

// ---------------------------------------------------------------------------
// batch application

namespace {

Subject resolve_subject(const NetworkSnapshot& snap, const std::string& name) {
  if (name == "all") return Subject::group(NetworkSnapshot::kAll);
  if (auto g = snap.find_group(name)) return Subject::group(*g);
  if (auto m = snap.find_member(name)) return Subject::member(*m);
  throw Error(ErrorCode::kUnknownName, "unknown subject '" + name + "'");
}

// Split "/A/B/C" into parent path "/A/B" and leaf name "C".
std::pair<std::string, std::string> split_leaf(const std::string& path) {
  auto slash = path.find_last_of('/');
  if (slash == std::string::npos || slash == 0)
    throw Error(ErrorCode::kUnknownPath,
                "cannot add a root node; path must name a parent: '" + path + "'");
  return {path.substr(0, slash), path.substr(slash + 1)};
}

}  // namespace

void NetworkSnapshot::apply(const Mutation& m) {
  using Kind = Mutation::Kind;
  switch (m.kind) {
    case Kind::kAddMember:
      mut_add_member(m.member);
      break;
    case Kind::kCreateGroup: {
      std::vector<GroupId> parents;
      for (const std::string& p : m.parents) parents.push_back(group(p));
      std::optional<MemberId> owner;
      if (m.hierarchy_owner) owner = member(*m.hierarchy_owner);
      mut_add_group(m.group, parents, owner);
      break;
    }
    case Kind::kDeleteGroup:
      mut_delete_group(group(m.group));
      break;
    case Kind::kAddSubgroupEdge:
      mut_add_subgroup_edge(group(m.group), group(m.parents.at(0)));
      break;
    case Kind::kRemoveSubgroupEdge:
      mut_remove_subgroup_edge(group(m.group), group(m.parents.at(0)));
      break;
    case Kind::kJoin:
      mut_set_membership(member(m.member), group(m.group), true);
      break;
    case Kind::kLeave:
      mut_set_membership(member(m.member), group(m.group), false);
      break;
    case Kind::kMove: {
      MemberId who = member(m.member);
      GroupId to = group(m.group);
      if (m.from_group) {
        GroupId from = group(*m.from_group);
        if (!memberships(who).count(from))
          throw Error(ErrorCode::kNotFound,
                      m.member + " is not a member of " + *m.from_group);
        mut_set_membership(who, from, false);
      } else {
        // Single-target form: leave every group in the destination's
        // hierarchy (system, or the same owner's private one), then join.
        auto dest_owner = hierarchy_owner(to);
        std::vector<GroupId> leaving;
        for (GroupId g : memberships(who)) {
          if (hierarchy_owner(g) == dest_owner) leaving.push_back(g);
        }
        for (GroupId g : leaving) mut_set_membership(who, g, false);
      }
      mut_set_membership(who, to, true);
      break;
    }
    case Kind::kAddContent: {
      MemberId owner = member(m.member);
      auto [parent_path, leaf] = split_leaf(m.path);
      mut_add_content(owner, resolve_path(owner, parent_path), leaf);
      break;
    }
    case Kind::kRemoveContent: {
      MemberId owner = member(m.member);
      mut_remove_content(owner, resolve_path(owner, m.path));
      break;
    }
    case Kind::kSetAssignment: {
      Assignment a;
      a.owner = member(m.member);
      a.subject = resolve_subject(*this, m.subject);
      a.content = resolve_path(a.owner, m.path);
      a.mode = m.mode;
      a.protocol = m.protocol;
      mut_set_assignment(a);
      break;
    }
    case Kind::kClearAssignment: {
      MemberId owner = member(m.member);
      mut_clear_assignment(owner, resolve_subject(*this, m.subject),
                           resolve_path(owner, m.path));
      break;
    }
    case Kind::kSetDefaultProtocol:
      mut_set_default_protocol(member(m.member),
                               m.protocol.value_or(Protocol::kPessimistic));
      break;
  }
}

NetworkSnapshot apply_batch(const NetworkSnapshot& snap,
                            std::span<const Mutation> mutations) {
  NetworkSnapshot working = snap;
  for (std::size_t i = 0; i < mutations.size(); ++i) {
    try {
      working.apply(mutations[i]);
    } catch (const Error& e) {
      throw BatchError(i, e);
    }
  }
  working.bump();
  return working;
}

// ---------------------------------------------------------------------------
// visibility diffing

namespace {

struct SideView {
  bool owner_present = false;
  std::set<std::string> paths;                       // owner's content paths
  std::map<std::string, std::set<std::string>> seen;  // viewer -> visible paths
};

SideView side_view(const NetworkSnapshot& snap, const std::string& owner_name) {
  SideView side;
  auto owner = snap.find_member(owner_name);
  if (!owner) return side;
  side.owner_present = true;
  for (ContentId c : snap.content_nodes(*owner))
    side.paths.insert(snap.content_path(c));
  for (MemberId m : snap.members()) {
    std::set<std::string> visible;
    for (ContentId c : visible_set(snap, m, *owner))
      visible.insert(snap.content_path(c));
    side.seen.emplace(snap.member_name(m), std::move(visible));
  }
  return side;
}

DiffState state_of(const SideView& side, const std::string& viewer,
                   const std::string& path) {
  auto it = side.seen.find(viewer);
  if (it == side.seen.end() || !side.paths.count(path)) return DiffState::kAbsent;
  return it->second.count(path) ? DiffState::kVisible : DiffState::kInvisible;
}

bool effectively_visible(DiffState s) { return s == DiffState::kVisible; }

}  // namespace

VisibilityDiff diff_visibility(const NetworkSnapshot& before,
                               const NetworkSnapshot& after, MemberId owner) {
  const std::string owner_name = before.member_name(owner);
  after.member(owner_name);  // must exist on both sides

  SideView b = side_view(before, owner_name);
  SideView a = side_view(after, owner_name);

  std::set<std::string> viewers;
  for (const auto& [name, unused] : b.seen) viewers.insert(name);
  for (const auto& [name, unused] : a.seen) viewers.insert(name);
  std::set<std::string> paths = b.paths;
  paths.insert(a.paths.begin(), a.paths.end());

  VisibilityDiff diff;
  diff.owner = owner_name;
  diff.version_before = before.version();
  diff.version_after = after.version();
  for (const std::string& viewer : viewers) {
    for (const std::string& path : paths) {
      DiffState sb = state_of(b, viewer, path);
      DiffState sa = state_of(a, viewer, path);
      if (effectively_visible(sb) != effectively_visible(sa))
        diff.entries.push_back(DiffEntry{viewer, path, sb, sa});
    }
  }
  return diff;
}

VisibilityDiff whatif(const NetworkSnapshot& snap,
                      std::span<const Mutation> mutations, MemberId owner) {
  snap.member_name(owner);
  NetworkSnapshot after = apply_batch(snap, mutations);
  return diff_visibility(snap, after, owner);
}

}  // namespace pvn

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

#ifndef PVN_SNAPSHOT_HPP_
#define PVN_SNAPSHOT_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pvn/assignment.hpp"
#include "pvn/error.hpp"
#include "pvn/ids.hpp"

namespace pvn {

struct Mutation;

// An immutable value describing the whole network at one instant: members,
// the group DAG (the system hierarchy rooted at the universal group plus
// per-member user hierarchies), memberships, per-member content trees, the
// explicit assignment set and per-member default protocols.
//
// Mutating operations are functional: they validate, then return a new
// snapshot with version bumped by one. A rejected mutation throws and leaves
// the receiver untouched. Snapshots are plain values, safe to copy, share
// and read from any number of threads.
class NetworkSnapshot {
 public:
  // A fresh network containing only the universal group `all`.
  NetworkSnapshot();

  static constexpr GroupId kAll{0};

  std::uint64_t version() const { return version_; }

  // -- members ------------------------------------------------------------

  std::optional<MemberId> find_member(std::string_view name) const;
  MemberId member(std::string_view name) const;  // throws kUnknownMember
  const std::string& member_name(MemberId m) const;
  bool has_member(MemberId m) const;
  std::vector<MemberId> members() const;  // ascending id
  std::size_t member_count() const;

  // Direct, stored memberships. Membership of `all` is implicit for every
  // member and never stored.
  const std::set<GroupId>& memberships(MemberId m) const;
  Protocol default_protocol(MemberId m) const;

  // -- groups ---------------------------------------------------------------

  std::optional<GroupId> find_group(std::string_view name) const;
  GroupId group(std::string_view name) const;  // throws kUnknownGroup
  const std::string& group_name(GroupId g) const;
  bool has_group(GroupId g) const;
  std::vector<GroupId> groups() const;  // ascending id, includes `all`
  std::size_t group_count() const;

  // nullopt for system groups, the owning member for user hierarchies.
  std::optional<MemberId> hierarchy_owner(GroupId g) const;
  bool is_system_group(GroupId g) const;

  // Parents as declared. A system group with no declared parent implicitly
  // hangs under `all`; effective_parents() reflects that, declared_parents()
  // does not. The parent `all` itself is never stored.
  const std::set<GroupId>& declared_parents(GroupId g) const;
  std::set<GroupId> effective_parents(GroupId g) const;
  // Declared children, plus (for `all`) the parentless system groups.
  std::set<GroupId> effective_children(GroupId g) const;

  const std::set<MemberId>& direct_members(GroupId g) const;

  // Every member of the group or of any transitive subgroup. For `all` this
  // is every member of the network.
  std::set<MemberId> member_closure(GroupId g) const;

  // True when `descendant` is reachable from `ancestor` by descending
  // subgroup edges (strictly below it, or equal).
  bool reaches(GroupId ancestor, GroupId descendant) const;

  // -- content trees --------------------------------------------------------

  ContentId content_root(MemberId owner) const;
  const std::string& content_name(ContentId c) const;
  MemberId content_owner(ContentId c) const;
  std::optional<ContentId> content_parent(ContentId c) const;
  // Children ordered by name.
  const std::vector<ContentId>& content_children(ContentId c) const;
  bool has_content(ContentId c) const;
  // Preorder walk of the owner's whole tree.
  std::vector<ContentId> content_nodes(MemberId owner) const;
  // Preorder walk of the subtree rooted at `c`, inclusive.
  std::vector<ContentId> subtree(ContentId c) const;
  // Root-to-node chain, inclusive: [root, ..., c].
  std::vector<ContentId> ancestor_chain(ContentId c) const;

  // "/Everything/PersonalInfo/Phone" style addressing, rooted at the owner's
  // root node name.
  ContentId resolve_path(MemberId owner, std::string_view path) const;
  std::string content_path(ContentId c) const;

  // -- assignments ----------------------------------------------------------

  // Insertion order; replacement keeps the original position.
  std::span<const Assignment> assignments() const;
  const Assignment* find_assignment(MemberId owner, Subject subject,
                                    ContentId content) const;

  // -- mutations ------------------------------------------------------------

  NetworkSnapshot add_member(std::string_view name) const;
  NetworkSnapshot add_group(std::string_view name,
                            const std::vector<GroupId>& parents,
                            std::optional<MemberId> hierarchy_owner) const;
  NetworkSnapshot add_subgroup_edge(GroupId child, GroupId parent) const;
  NetworkSnapshot remove_subgroup_edge(GroupId child, GroupId parent) const;
  // Cascades: memberships in the group and assignments whose subject is the
  // group are dropped; orphaned system children re-attach to `all`.
  NetworkSnapshot delete_group(GroupId g) const;
  NetworkSnapshot set_membership(MemberId m, GroupId g, bool present) const;
  NetworkSnapshot add_content(MemberId owner, ContentId parent,
                              std::string_view name) const;
  // Cascades over the subtree and deletes assignments targeting removed
  // nodes. The root cannot be removed.
  NetworkSnapshot remove_content(MemberId owner, ContentId node) const;
  NetworkSnapshot set_assignment(const Assignment& a) const;
  NetworkSnapshot clear_assignment(MemberId owner, Subject subject,
                                   ContentId content) const;
  NetworkSnapshot set_default_protocol(MemberId owner, Protocol p) const;

  std::string subject_name(Subject s) const;

 private:
  friend NetworkSnapshot apply_batch(const NetworkSnapshot& snap,
                                     std::span<const Mutation> mutations);

  struct GroupRec {
    std::string name;
    std::optional<MemberId> owner;  // nullopt = system
    std::set<GroupId> parents;      // declared, `all` never stored
    std::set<GroupId> children;
    std::set<MemberId> members;
  };
  struct MemberRec {
    std::string name;
    std::set<GroupId> groups;
    Protocol default_protocol = Protocol::kPessimistic;
    ContentId root{0};
  };
  struct ContentRec {
    std::string name;
    MemberId owner;
    std::optional<ContentId> parent;
    std::vector<ContentId> children;  // sorted by name
  };

  const GroupRec& group_rec(GroupId g) const;
  const MemberRec& member_rec(MemberId m) const;
  const ContentRec& content_rec(ContentId c) const;

  void bump() { ++version_; }

  // In-place appliers shared by the functional wrappers and apply_batch.
  // They validate fully before touching state.
  MemberId mut_add_member(std::string_view name);
  GroupId mut_add_group(std::string_view name,
                        const std::vector<GroupId>& parents,
                        std::optional<MemberId> hierarchy_owner);
  void mut_add_subgroup_edge(GroupId child, GroupId parent);
  void mut_remove_subgroup_edge(GroupId child, GroupId parent);
  void mut_delete_group(GroupId g);
  void mut_set_membership(MemberId m, GroupId g, bool present);
  ContentId mut_add_content(MemberId owner, ContentId parent,
                            std::string_view name);
  void mut_remove_content(MemberId owner, ContentId node);
  void mut_set_assignment(const Assignment& a);
  void mut_clear_assignment(MemberId owner, Subject subject, ContentId content);
  void mut_set_default_protocol(MemberId owner, Protocol p);
  void apply(const Mutation& m);

  void check_subject(MemberId owner, Subject s) const;
  void check_edge_hierarchy(GroupId child, GroupId parent) const;

  std::uint64_t version_ = 0;
  std::map<std::uint32_t, GroupRec> groups_;
  std::map<std::uint32_t, MemberRec> members_;
  std::map<std::uint32_t, ContentRec> contents_;
  std::map<std::string, std::uint32_t> group_names_;
  std::map<std::string, std::uint32_t> member_names_;
  std::vector<Assignment> assignments_;
  std::uint32_t next_group_ = 1;
  std::uint32_t next_member_ = 0;
  std::uint32_t next_content_ = 0;
};

// True iff `name` is usable as an identifier in the policy language (and
// therefore as an entity name): [A-Za-z_][A-Za-z0-9_]*, not a reserved word.
bool valid_name(std::string_view name);

}  // namespace pvn

#endif  // PVN_SNAPSHOT_HPP_

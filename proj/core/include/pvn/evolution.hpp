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

#ifndef PVN_EVOLUTION_HPP_
#define PVN_EVOLUTION_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pvn/snapshot.hpp"

namespace pvn {

// One structural edit, as pure data. Parameters are names rather than ids so
// a batch can create an entity and use it in later steps; names resolve
// against the evolving intermediate state when the batch is applied.
struct Mutation {
  enum class Kind : std::uint8_t {
    kAddMember,
    kCreateGroup,
    kDeleteGroup,
    kAddSubgroupEdge,
    kRemoveSubgroupEdge,
    kJoin,
    kLeave,
    kMove,
    kAddContent,
    kRemoveContent,
    kSetAssignment,
    kClearAssignment,
    kSetDefaultProtocol,
  };

  Kind kind = Kind::kAddMember;
  std::string member;                    // member / content owner / assignment owner
  std::string group;                     // group operand or created group
  std::optional<std::string> from_group; // move source; empty = all groups in the
                                         // target's hierarchy
  std::vector<std::string> parents;      // create-group parents
  std::optional<std::string> hierarchy_owner;  // create-group user hierarchy
  std::string path;                      // content path, "/Everything/..."
  std::string subject;                   // assignment subject name ("all", group or member)
  Mode mode = Mode::kVisible;
  std::optional<Protocol> protocol;      // assignment annotation / new default

  static Mutation add_member(std::string name);
  static Mutation create_group(std::string name, std::vector<std::string> parents = {},
                               std::optional<std::string> hierarchy_owner = {});
  static Mutation delete_group(std::string name);
  static Mutation add_subgroup_edge(std::string child, std::string parent);
  static Mutation remove_subgroup_edge(std::string child, std::string parent);
  static Mutation join(std::string member, std::string group);
  static Mutation leave(std::string member, std::string group);
  static Mutation move(std::string member, std::string to_group,
                       std::optional<std::string> from_group = {});
  static Mutation add_content(std::string owner, std::string path);
  static Mutation remove_content(std::string owner, std::string path);
  static Mutation set_assignment(std::string owner, std::string subject,
                                 std::string path, Mode mode,
                                 std::optional<Protocol> protocol = {});
  static Mutation clear_assignment(std::string owner, std::string subject,
                                   std::string path);
  static Mutation set_default_protocol(std::string owner, Protocol p);
};

// Applies the batch atomically: mutations validate sequentially against the
// evolving intermediate state; the first failure throws BatchError with the
// failing index and nothing is published. The whole batch bumps the version
// by exactly one (an empty batch still bumps).
NetworkSnapshot apply_batch(const NetworkSnapshot& snap,
                            std::span<const Mutation> mutations);

enum class DiffState : std::uint8_t { kVisible, kInvisible, kAbsent };

inline const char* to_string(DiffState s) {
  switch (s) {
    case DiffState::kVisible: return "visible";
    case DiffState::kInvisible: return "invisible";
    default: return "absent";
  }
}

// One changed verdict. `kAbsent` marks a viewer or content node that exists
// on only one side; for change detection an absent side counts as
// invisible, so a node a new member cannot see produces no entry.
struct DiffEntry {
  std::string viewer;
  std::string path;
  DiffState before = DiffState::kInvisible;
  DiffState after = DiffState::kInvisible;

  friend bool operator==(const DiffEntry&, const DiffEntry&) = default;
};

// Pointwise verdict differences for one owner's content between two
// snapshots: viewers are the union of members on both sides, content nodes
// are matched by path. Entries are sorted by (viewer name, content path).
struct VisibilityDiff {
  std::string owner;
  std::uint64_t version_before = 0;
  std::uint64_t version_after = 0;
  std::vector<DiffEntry> entries;

  bool empty() const { return entries.empty(); }
};

VisibilityDiff diff_visibility(const NetworkSnapshot& before,
                               const NetworkSnapshot& after, MemberId owner);

// diff_visibility(snap, apply_batch(snap, mutations), owner) without
// publishing the intermediate snapshot. Batch failures propagate.
VisibilityDiff whatif(const NetworkSnapshot& snap,
                      std::span<const Mutation> mutations, MemberId owner);

}  // namespace pvn

#endif  // PVN_EVOLUTION_HPP_

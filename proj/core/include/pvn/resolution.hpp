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

#ifndef PVN_RESOLUTION_HPP_
#define PVN_RESOLUTION_HPP_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pvn/snapshot.hpp"

namespace pvn {

// Effective visibility of (viewer, owner, content) is derived from the
// explicit assignments along derivation paths and then combined across
// paths:
//
//  * A derivation path descends from a root (`all`, or a root of the content
//    owner's own user hierarchy) through subgroup edges to one of the
//    viewer's groups and ends at the viewer; the implicit membership of
//    every member in `all` also yields the direct path (all, viewer).
//    Only maximal paths participate: a path whose node sequence is a proper
//    subsequence of another derivation path is shadowed by it (this is what
//    makes a subgroup's assignment override its ancestors' for the members
//    below it).
//
//  * On one path, an assignment applies when its subject lies on the path
//    and its content node covers the queried node. The winner is the
//    applicable assignment whose subject sits closest to the viewer;
//    subject ties break to the deepest covering content node. A path with
//    no applicable assignment contributes nothing.
//
//  * Across paths: no defined verdict at all means invisible (default
//    deny). Without any invisible verdict, one visible verdict suffices.
//    When visible and invisible verdicts conflict, the content is visible
//    only if some winning visible verdict carries an effective optimistic
//    protocol; otherwise the conflict denies.
//
//  * Owners always see their own content (owner bypass).

// One derivation path and the assignment that won on it. `winner` empty
// means no assignment applied along the path.
struct PathVerdict {
  std::vector<std::string> nodes;  // names: root, groups..., viewer
  std::optional<Assignment> winner;
  std::optional<Protocol> effective_protocol;  // of the winner, when defined

  bool defined() const { return winner.has_value(); }
  Mode mode() const { return winner->mode; }
};

enum class Combination : std::uint8_t {
  kOwnerBypass,     // viewer == owner, nothing evaluated
  kDefaultDeny,     // no defined path verdict
  kUncontested,     // defined verdicts all agree
  kOptimisticGrant, // conflict; an optimistic visible verdict prevailed
  kConflictDenied,  // conflict; no optimistic visible verdict
};

struct ResolutionTrace {
  MemberId viewer;
  MemberId owner;
  ContentId content;
  bool owner_bypass = false;
  // Full path set for the path resolver / explain; winner-class
  // representatives (one path per distinct winning assignment) for the
  // optimized resolver.
  std::vector<PathVerdict> paths;
  Combination combination = Combination::kDefaultDeny;
  Verdict verdict = Verdict::kInvisible;
};

// Optimized resolver: reverse traversal from the viewer over the
// shortcut-free subgroup graph, stopping at the first assigned subject per
// branch. Must agree with resolve_by_paths on every input.
ResolutionTrace resolve(const NetworkSnapshot& snap, MemberId viewer,
                        MemberId owner, ContentId content);

// Reference resolver: literally enumerates every maximal derivation path
// and applies the semantics above. Exponential in the worst case; intended
// for small networks, tests and explanations.
ResolutionTrace resolve_by_paths(const NetworkSnapshot& snap, MemberId viewer,
                                 MemberId owner, ContentId content);

// resolve_by_paths with the full path list retained and deterministically
// ordered (paths sorted by their node-name sequences).
ResolutionTrace explain(const NetworkSnapshot& snap, MemberId viewer,
                        MemberId owner, ContentId content);

// { c in owner's tree : resolve(viewer, owner, c) == visible }
std::set<ContentId> visible_set(const NetworkSnapshot& snap, MemberId viewer,
                                MemberId owner);

// { v : resolve(v, owner, content) == visible }; always contains the owner.
std::set<MemberId> audience(const NetworkSnapshot& snap, MemberId owner,
                            ContentId content);

}  // namespace pvn

#endif  // PVN_RESOLUTION_HPP_

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

// Reference resolver: a literal transcription of the derivation-path
// semantics. It enumerates every simple descending path from a root to the
// viewer, discards paths dominated by a supersequence, scans each path
// backwards for its winning assignment and combines the outcomes. It shares
// no traversal machinery with the optimized resolver.

#include <algorithm>
#include <optional>
#include <vector>

#include "pvn/resolution.hpp"

namespace pvn {

namespace {

constexpr std::size_t kMaxPaths = 1u << 20;

struct RawPath {
  std::vector<GroupId> groups;  // root first
};

bool admissible(const NetworkSnapshot& snap, MemberId owner, GroupId g) {
  auto ho = snap.hierarchy_owner(g);
  return !ho || *ho == owner;
}

void enumerate_from(const NetworkSnapshot& snap, MemberId owner,
                    MemberId viewer, std::vector<GroupId>& prefix,
                    std::vector<RawPath>& out) {
  GroupId g = prefix.back();
  // Terminate with a membership edge: stored for any group, implicit for
  // `all`.
  if (g == NetworkSnapshot::kAll || snap.direct_members(g).count(viewer)) {
    if (out.size() >= kMaxPaths)
      throw Error(ErrorCode::kPathLimitExceeded,
                  "derivation path enumeration exceeded the oracle limit");
    out.push_back(RawPath{prefix});
  }
  std::vector<GroupId> kids;
  for (GroupId child : snap.effective_children(g)) {
    if (admissible(snap, owner, child)) kids.push_back(child);
  }
  std::sort(kids.begin(), kids.end(), [&](GroupId a, GroupId b) {
    return snap.group_name(a) < snap.group_name(b);
  });
  for (GroupId child : kids) {
    prefix.push_back(child);
    enumerate_from(snap, owner, viewer, prefix, out);
    prefix.pop_back();
  }
}

bool proper_subsequence(const std::vector<GroupId>& a,
                        const std::vector<GroupId>& b) {
  if (a.size() >= b.size()) return false;
  std::size_t i = 0;
  for (GroupId g : b) {
    if (i < a.size() && a[i] == g) ++i;
  }
  return i == a.size();
}

// All maximal simple derivation paths for (viewer, owner): the system
// hierarchy plus the owner's own user hierarchy contribute roots.
std::vector<RawPath> derivation_paths(const NetworkSnapshot& snap,
                                      MemberId viewer, MemberId owner) {
  std::vector<GroupId> roots{NetworkSnapshot::kAll};
  for (GroupId g : snap.groups()) {
    auto ho = snap.hierarchy_owner(g);
    if (ho && *ho == owner && snap.declared_parents(g).empty())
      roots.push_back(g);
  }
  std::vector<RawPath> all;
  for (GroupId root : roots) {
    std::vector<GroupId> prefix{root};
    enumerate_from(snap, owner, viewer, prefix, all);
  }
  std::vector<RawPath> maximal;
  for (const RawPath& p : all) {
    bool dominated = false;
    for (const RawPath& q : all) {
      if (proper_subsequence(p.groups, q.groups)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(p);
  }
  return maximal;
}

// Deepest covering assignment for one subject, or null.
const Assignment* subject_winner(const NetworkSnapshot& snap, MemberId owner,
                                 Subject subject,
                                 const std::vector<ContentId>& chain) {
  for (auto node = chain.rbegin(); node != chain.rend(); ++node) {
    if (const Assignment* a = snap.find_assignment(owner, subject, *node))
      return a;
  }
  return nullptr;
}

PathVerdict score_path(const NetworkSnapshot& snap, MemberId owner,
                       MemberId viewer, const RawPath& path,
                       const std::vector<ContentId>& chain) {
  PathVerdict pv;
  for (GroupId g : path.groups) pv.nodes.push_back(snap.group_name(g));
  pv.nodes.push_back(snap.member_name(viewer));

  // Latest subject on the path wins; the viewer itself is the latest of all.
  if (const Assignment* a =
          subject_winner(snap, owner, Subject::member(viewer), chain)) {
    pv.winner = *a;
  } else {
    for (auto g = path.groups.rbegin(); g != path.groups.rend(); ++g) {
      if (const Assignment* a =
              subject_winner(snap, owner, Subject::group(*g), chain)) {
        pv.winner = *a;
        break;
      }
    }
  }
  if (pv.winner) pv.effective_protocol = effective_protocol(snap, *pv.winner);
  return pv;
}

}  // namespace

ResolutionTrace resolve_by_paths(const NetworkSnapshot& snap, MemberId viewer,
                                 MemberId owner, ContentId content) {
  snap.member_name(viewer);
  snap.member_name(owner);
  if (snap.content_owner(content) != owner)
    throw Error(ErrorCode::kForeignContent,
                "content " + snap.content_path(content) + " is not owned by " +
                    snap.member_name(owner));

  ResolutionTrace trace;
  trace.viewer = viewer;
  trace.owner = owner;
  trace.content = content;
  if (viewer == owner) {
    trace.owner_bypass = true;
    trace.combination = Combination::kOwnerBypass;
    trace.verdict = Verdict::kVisible;
    return trace;
  }

  std::vector<ContentId> chain = snap.ancestor_chain(content);
  for (const RawPath& p : derivation_paths(snap, viewer, owner))
    trace.paths.push_back(score_path(snap, owner, viewer, p, chain));
  std::sort(trace.paths.begin(), trace.paths.end(),
            [](const PathVerdict& a, const PathVerdict& b) {
              return a.nodes < b.nodes;
            });

  bool any_defined = false;
  bool any_visible = false;
  bool any_invisible = false;
  bool optimistic_grant = false;
  for (const PathVerdict& pv : trace.paths) {
    if (!pv.defined()) continue;
    any_defined = true;
    if (pv.mode() == Mode::kVisible) {
      any_visible = true;
      if (pv.effective_protocol == Protocol::kOptimistic)
        optimistic_grant = true;
    } else {
      any_invisible = true;
    }
  }
  if (!any_defined) {
    trace.combination = Combination::kDefaultDeny;
    trace.verdict = Verdict::kInvisible;
  } else if (!any_invisible) {
    trace.combination = Combination::kUncontested;
    trace.verdict = Verdict::kVisible;
  } else if (!any_visible) {
    trace.combination = Combination::kUncontested;
    trace.verdict = Verdict::kInvisible;
  } else if (optimistic_grant) {
    trace.combination = Combination::kOptimisticGrant;
    trace.verdict = Verdict::kVisible;
  } else {
    trace.combination = Combination::kConflictDenied;
    trace.verdict = Verdict::kInvisible;
  }
  return trace;
}

ResolutionTrace explain(const NetworkSnapshot& snap, MemberId viewer,
                        MemberId owner, ContentId content) {
  return resolve_by_paths(snap, viewer, owner, content);
}

}  // namespace pvn

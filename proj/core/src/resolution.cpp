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

// Optimized resolver. Instead of enumerating derivation paths it works on
// the transitive reduction of the admissible subgroup-plus-membership graph:
// paths of the reduction are exactly the maximal derivation paths, so the
// winner of a path is the assignment at the path's last assigned node, and
// combination only needs the set of distinct winners. Per query that is one
// upward sweep from the viewer instead of a path walk.

#include "pvn/resolution.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace pvn {

namespace {

void check_query_ids(const NetworkSnapshot& snap, MemberId viewer,
                     MemberId owner, ContentId content) {
  snap.member_name(viewer);
  snap.member_name(owner);
  if (snap.content_owner(content) != owner)
    throw Error(ErrorCode::kForeignContent,
                "content " + snap.content_path(content) + " is not owned by " +
                    snap.member_name(owner));
}

// The viewer-independent part of a resolution: the owner's admissible
// groups (system plus the owner's own hierarchy) in dense indexing, their
// reachability, the shortcut-free subgroup edges, and the owner's rules
// bucketed by content node.
class OwnerView {
 public:
  OwnerView(const NetworkSnapshot& snap, MemberId owner)
      : snap_(snap), owner_(owner) {
    for (GroupId g : snap.groups()) {
      auto ho = snap.hierarchy_owner(g);
      if (!ho || *ho == owner) {
        index_.emplace(g, static_cast<int>(groups_.size()));
        groups_.push_back(g);
      }
    }
    const int n = static_cast<int>(groups_.size());
    words_ = (n + 63) / 64;

    kids_.resize(n);
    for (int i = 0; i < n; ++i) {
      for (GroupId child : snap.effective_children(groups_[i])) {
        auto it = index_.find(child);
        if (it != index_.end()) kids_[i].push_back(it->second);
      }
      std::sort(kids_[i].begin(), kids_[i].end());
    }

    reach_.assign(n, std::vector<std::uint64_t>(words_, 0));
    std::vector<char> done(n, 0);
    for (int i = 0; i < n; ++i) compute_reach(i, done);

    tr_parents_.resize(n);
    for (int p = 0; p < n; ++p) {
      for (int c : kids_[p]) {
        bool shortcut = false;
        for (int x : kids_[p]) {
          if (x != c && test(reach_[x], c)) {
            shortcut = true;
            break;
          }
        }
        if (!shortcut) tr_parents_[c].push_back(p);
      }
    }

    for (const Assignment& a : snap.assignments()) {
      if (a.owner == owner) rules_[a.content].push_back(&a);
    }
  }

  const NetworkSnapshot& snap() const { return snap_; }
  MemberId owner() const { return owner_; }
  int size() const { return static_cast<int>(groups_.size()); }
  GroupId group_at(int i) const { return groups_[i]; }
  int index_of(GroupId g) const {
    auto it = index_.find(g);
    return it == index_.end() ? -1 : it->second;
  }
  bool reaches(int from, int to) const { return test(reach_[from], to); }
  const std::vector<int>& tr_parents(int i) const { return tr_parents_[i]; }

  const std::vector<const Assignment*>* rules_on(ContentId c) const {
    auto it = rules_.find(c);
    return it == rules_.end() ? nullptr : &it->second;
  }

 private:
  static bool test(const std::vector<std::uint64_t>& bits, int i) {
    return (bits[i >> 6] >> (i & 63)) & 1;
  }
  static void set(std::vector<std::uint64_t>& bits, int i) {
    bits[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void compute_reach(int i, std::vector<char>& done) {
    if (done[i]) return;
    done[i] = 1;  // acyclic, so marking before descent is fine
    set(reach_[i], i);
    for (int c : kids_[i]) {
      compute_reach(c, done);
      for (int w = 0; w < words_; ++w) reach_[i][w] |= reach_[c][w];
    }
  }

  const NetworkSnapshot& snap_;
  MemberId owner_;
  std::vector<GroupId> groups_;
  std::map<GroupId, int> index_;
  int words_ = 0;
  std::vector<std::vector<int>> kids_;
  std::vector<std::vector<std::uint64_t>> reach_;
  std::vector<std::vector<int>> tr_parents_;
  std::map<ContentId, std::vector<const Assignment*>> rules_;
};

struct WinnerClasses {
  const Assignment* member_winner = nullptr;
  std::vector<const Assignment*> group_winners;
  std::vector<int> group_winner_ix;  // dense subject index, parallel
};

// One viewer against an OwnerView: the viewer's shortcut-free membership
// edges plus the per-content winner computation.
class ViewerCursor {
 public:
  ViewerCursor(const OwnerView& view, MemberId viewer)
      : view_(view), viewer_(viewer) {
    const NetworkSnapshot& snap = view.snap();
    std::vector<int> memb;
    bool any_system = false;
    for (GroupId g : snap.memberships(viewer)) {
      int ix = view.index_of(g);
      if (ix < 0) continue;  // another member's private hierarchy
      memb.push_back(ix);
      if (snap.is_system_group(g)) any_system = true;
    }
    std::sort(memb.begin(), memb.end());
    for (int g : memb) {
      bool shadowed = false;
      for (int h : memb) {
        if (h != g && view.reaches(g, h)) {
          shadowed = true;
          break;
        }
      }
      if (!shadowed) entry_points_.push_back(g);
    }
    // The implicit membership in `all` backs the direct path (all, viewer);
    // any stored system membership provides a longer route and shadows it.
    if (!any_system) {
      int all_ix = view.index_of(NetworkSnapshot::kAll);
      if (std::find(entry_points_.begin(), entry_points_.end(), all_ix) ==
          entry_points_.end())
        entry_points_.push_back(all_ix);
      std::sort(entry_points_.begin(), entry_points_.end());
    }
  }

  MemberId viewer() const { return viewer_; }
  const std::vector<int>& entry_points() const { return entry_points_; }

  WinnerClasses classes_for(ContentId c) const {
    const NetworkSnapshot& snap = view_.snap();
    WinnerClasses out;

    // Deepest covering assignment per subject: walk the ancestor chain from
    // the queried node upward and keep the first rule seen per subject.
    std::vector<std::pair<Subject, const Assignment*>> best;
    std::vector<ContentId> chain = snap.ancestor_chain(c);
    for (auto node = chain.rbegin(); node != chain.rend(); ++node) {
      const auto* rules = view_.rules_on(*node);
      if (!rules) continue;
      for (const Assignment* a : *rules) {
        bool seen = false;
        for (const auto& [s, unused] : best) {
          if (s == a->subject) {
            seen = true;
            break;
          }
        }
        if (!seen) best.emplace_back(a->subject, a);
      }
    }

    const int n = view_.size();
    std::vector<const Assignment*> relevant(n, nullptr);
    for (const auto& [s, a] : best) {
      if (s.is_member()) {
        if (s.as_member() == viewer_) out.member_winner = a;
      } else {
        int ix = view_.index_of(s.as_group());
        if (ix >= 0) relevant[ix] = a;
      }
    }
    // A member-level assignment sits at the end of every derivation path and
    // wins them all.
    if (out.member_winner) return out;

    // A group wins some maximal path exactly when it can reach the viewer
    // through unassigned groups: mark upward from the viewer's entry points,
    // stopping below any assigned group.
    std::vector<char> vci(n, 0);
    std::vector<int> stack;
    for (int g : entry_points_) {
      if (!vci[g]) {
        vci[g] = 1;
        stack.push_back(g);
      }
    }
    while (!stack.empty()) {
      int g = stack.back();
      stack.pop_back();
      if (relevant[g]) continue;
      for (int p : view_.tr_parents(g)) {
        if (!vci[p]) {
          vci[p] = 1;
          stack.push_back(p);
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      if (vci[i] && relevant[i]) {
        out.group_winners.push_back(relevant[i]);
        out.group_winner_ix.push_back(i);
      }
    }
    return out;
  }

 private:
  const OwnerView& view_;
  MemberId viewer_;
  std::vector<int> entry_points_;  // groups with shortcut-free edge to viewer
};

struct Combined {
  Verdict verdict = Verdict::kInvisible;
  Combination combination = Combination::kDefaultDeny;
};

Combined combine(const NetworkSnapshot& snap, const WinnerClasses& classes) {
  std::vector<const Assignment*> winners;
  if (classes.member_winner) winners.push_back(classes.member_winner);
  else winners = classes.group_winners;

  if (winners.empty()) return {Verdict::kInvisible, Combination::kDefaultDeny};

  bool any_invisible = false;
  bool any_visible = false;
  bool optimistic_grant = false;
  for (const Assignment* a : winners) {
    if (a->mode == Mode::kVisible) {
      any_visible = true;
      if (effective_protocol(snap, *a) == Protocol::kOptimistic)
        optimistic_grant = true;
    } else {
      any_invisible = true;
    }
  }
  if (!any_invisible) return {Verdict::kVisible, Combination::kUncontested};
  if (!any_visible) return {Verdict::kInvisible, Combination::kUncontested};
  if (optimistic_grant)
    return {Verdict::kVisible, Combination::kOptimisticGrant};
  return {Verdict::kInvisible, Combination::kConflictDenied};
}

Verdict fast_verdict(const NetworkSnapshot& snap, const ViewerCursor& cursor,
                     ContentId c) {
  return combine(snap, cursor.classes_for(c)).verdict;
}

// Representative derivation path for a winner class: any shortcut-free
// chain root .. subject .. viewer. Cosmetic (full paths come from
// resolve_by_paths), but kept deterministic.
std::vector<std::string> representative_path(const OwnerView& view,
                                             const ViewerCursor& cursor,
                                             int subject_ix) {
  const NetworkSnapshot& snap = view.snap();
  std::vector<std::string> nodes;
  int cur = subject_ix;
  for (;;) {
    nodes.push_back(snap.group_name(view.group_at(cur)));
    const auto& parents = view.tr_parents(cur);
    if (parents.empty()) break;
    cur = parents.front();
  }
  std::reverse(nodes.begin(), nodes.end());
  // Descent subject -> viewer elided; entry points are by construction
  // reachable, and the viewer terminates every path.
  nodes.push_back(snap.member_name(cursor.viewer()));
  return nodes;
}

}  // namespace

ResolutionTrace resolve(const NetworkSnapshot& snap, MemberId viewer,
                        MemberId owner, ContentId content) {
  check_query_ids(snap, viewer, owner, content);
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
  OwnerView view(snap, owner);
  ViewerCursor cursor(view, viewer);
  WinnerClasses classes = cursor.classes_for(content);
  Combined result = combine(snap, classes);
  trace.combination = result.combination;
  trace.verdict = result.verdict;

  if (classes.member_winner) {
    PathVerdict pv;
    pv.nodes = {snap.group_name(NetworkSnapshot::kAll), snap.member_name(viewer)};
    pv.winner = *classes.member_winner;
    pv.effective_protocol = effective_protocol(snap, *classes.member_winner);
    trace.paths.push_back(std::move(pv));
  } else {
    for (std::size_t i = 0; i < classes.group_winners.size(); ++i) {
      PathVerdict pv;
      pv.nodes = representative_path(view, cursor, classes.group_winner_ix[i]);
      pv.winner = *classes.group_winners[i];
      pv.effective_protocol = effective_protocol(snap, *classes.group_winners[i]);
      trace.paths.push_back(std::move(pv));
    }
  }
  return trace;
}

std::set<ContentId> visible_set(const NetworkSnapshot& snap, MemberId viewer,
                                MemberId owner) {
  snap.member_name(viewer);
  std::vector<ContentId> nodes = snap.content_nodes(owner);
  std::set<ContentId> out;
  if (viewer == owner) {
    out.insert(nodes.begin(), nodes.end());
    return out;
  }
  OwnerView view(snap, owner);
  ViewerCursor cursor(view, viewer);
  for (ContentId c : nodes) {
    if (fast_verdict(snap, cursor, c) == Verdict::kVisible) out.insert(c);
  }
  return out;
}

std::set<MemberId> audience(const NetworkSnapshot& snap, MemberId owner,
                            ContentId content) {
  check_query_ids(snap, owner, owner, content);
  OwnerView view(snap, owner);
  std::set<MemberId> out;
  for (MemberId m : snap.members()) {
    if (m == owner) {
      out.insert(m);
      continue;
    }
    ViewerCursor cursor(view, m);
    if (fast_verdict(snap, cursor, content) == Verdict::kVisible) out.insert(m);
  }
  return out;
}

}  // namespace pvn

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

#include "render.hpp"

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <set>
#include <vector>

#include "pvn/dsl/printer.hpp"

namespace pvncli {

using namespace pvn;
using dsl::BoundAction;
using dsl::BoundQuery;
using dsl::BoundWhatIf;
using dsl::Query;

RenderOpts detect_render_opts(bool machine_flag) {
  RenderOpts opts;
  opts.machine = machine_flag;
  const char* env = std::getenv("PVN_COLOR");
  opts.color = isatty(1) && !(env && std::string(env) == "0") && !machine_flag;
  return opts;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kSyntaxError: return 2;
    case ErrorCode::kIoError: return 3;
    default: return 1;
  }
}

void print_error(std::ostream& os, const Error& e, const std::string& filename) {
  if (e.location())
    os << filename << ":" << e.location()->line << ":" << e.location()->column
       << ": error: " << e.message() << "\n";
  else
    os << "error: " << e.message() << "\n";
}

namespace {

std::string verdict_word(Verdict v, const RenderOpts& opts) {
  std::string word = v == Verdict::kVisible ? "VISIBLE" : "INVISIBLE";
  if (!opts.color) return word;
  const char* code = v == Verdict::kVisible ? "\x1b[1;32m" : "\x1b[1;31m";
  return code + word + "\x1b[0m";
}

std::string describe_winner(const NetworkSnapshot& snap, const PathVerdict& pv) {
  const Assignment& a = *pv.winner;
  std::string out = a.mode == Mode::kVisible ? "allow " : "deny ";
  out += snap.subject_name(a.subject);
  out += ':';
  out += snap.content_path(a.content);
  out += " [";
  out += to_string(*pv.effective_protocol);
  out += ']';
  return out;
}

std::string join_path_nodes(const std::vector<std::string>& nodes) {
  std::string out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) out += " > ";
    out += nodes[i];
  }
  return out;
}

const char* combination_note(Combination c) {
  switch (c) {
    case Combination::kOwnerBypass:
      return "owner bypass: owners always see their own content";
    case Combination::kDefaultDeny:
      return "no applicable assignment on any path: invisible by default";
    case Combination::kUncontested:
      return "all defined paths agree";
    case Combination::kOptimisticGrant:
      return "conflicting paths: optimistic grant wins";
    case Combination::kConflictDenied:
      return "conflicting paths: no optimistic grant, denied";
  }
  return "";
}

void machine_record_prefix(std::ostream& os, const char* query,
                           const std::string& viewer, const std::string& owner,
                           const std::string& path) {
  os << "query=" << query << " viewer=" << viewer << " owner=" << owner
     << " path=" << path;
}

void render_can(std::ostream& os, const NetworkSnapshot& snap,
                const BoundQuery& q, const RenderOpts& opts) {
  ResolutionTrace trace = resolve(snap, q.viewer, q.owner, q.content);
  if (opts.machine) {
    machine_record_prefix(os, "can", snap.member_name(q.viewer),
                          snap.member_name(q.owner),
                          snap.content_path(q.content));
    os << " verdict=" << to_string(trace.verdict) << "\n";
  } else {
    os << verdict_word(trace.verdict, opts) << "\n";
  }
}

void render_show(std::ostream& os, const NetworkSnapshot& snap,
                 const BoundQuery& q, const RenderOpts& opts) {
  std::set<std::string> paths;
  for (ContentId c : visible_set(snap, q.viewer, q.owner))
    paths.insert(snap.content_path(c));
  for (const std::string& p : paths) {
    if (opts.machine) {
      machine_record_prefix(os, "show", snap.member_name(q.viewer),
                            snap.member_name(q.owner), p);
      os << " verdict=visible\n";
    } else {
      os << p << "\n";
    }
  }
}

void render_audience(std::ostream& os, const NetworkSnapshot& snap,
                     const BoundQuery& q, const RenderOpts& opts) {
  std::set<std::string> names;
  for (MemberId m : audience(snap, q.owner, q.content))
    names.insert(snap.member_name(m));
  for (const std::string& n : names) {
    if (opts.machine) {
      machine_record_prefix(os, "audience", n, snap.member_name(q.owner),
                            snap.content_path(q.content));
      os << " verdict=visible\n";
    } else {
      os << n << "\n";
    }
  }
}

void render_explain(std::ostream& os, const NetworkSnapshot& snap,
                    const BoundQuery& q, const RenderOpts& opts) {
  ResolutionTrace trace = explain(snap, q.viewer, q.owner, q.content);
  const std::string viewer = snap.member_name(q.viewer);
  const std::string owner = snap.member_name(q.owner);
  const std::string path = snap.content_path(q.content);
  if (opts.machine) {
    machine_record_prefix(os, "explain", viewer, owner, path);
    os << " verdict=" << to_string(trace.verdict) << "\n";
    for (const PathVerdict& pv : trace.paths) {
      if (!pv.defined()) continue;
      machine_record_prefix(os, "explain", viewer, owner, path);
      os << " verdict="
         << (pv.mode() == Mode::kVisible ? "visible" : "invisible")
         << " winner_subject=" << snap.subject_name(pv.winner->subject)
         << " winner_content=" << snap.content_path(pv.winner->content)
         << " protocol=" << to_string(*pv.effective_protocol) << "\n";
    }
    return;
  }
  os << "explain " << viewer << " see " << owner << ":" << path << "\n";
  for (const PathVerdict& pv : trace.paths) {
    os << "  " << join_path_nodes(pv.nodes) << ": ";
    if (pv.defined())
      os << verdict_word(pv.mode() == Mode::kVisible ? Verdict::kVisible
                                                     : Verdict::kInvisible,
                         opts)
         << " (" << describe_winner(snap, pv) << ")";
    else
      os << "no applicable assignment";
    os << "\n";
  }
  os << "  " << combination_note(trace.combination) << "\n";
  os << "verdict: " << verdict_word(trace.verdict, opts) << "\n";
}

}  // namespace

void render_diff(std::ostream& os, const VisibilityDiff& diff,
                 const RenderOpts& opts) {
  if (opts.machine) {
    for (const DiffEntry& e : diff.entries) {
      os << "query=diff owner=" << diff.owner << " viewer=" << e.viewer
         << " path=" << e.path << " old=" << to_string(e.before)
         << " new=" << to_string(e.after) << "\n";
    }
    return;
  }
  if (diff.entries.empty()) {
    os << "no changes\n";
    return;
  }
  for (const DiffEntry& e : diff.entries) {
    os << e.viewer << "  " << e.path << "  " << to_string(e.before) << " -> "
       << to_string(e.after) << "\n";
  }
}

void render_action(std::ostream& os, const NetworkSnapshot& snap,
                   const BoundAction& action, const RenderOpts& opts) {
  if (const auto* q = std::get_if<BoundQuery>(&action)) {
    switch (q->ast.kind) {
      case Query::Kind::kCan: render_can(os, snap, *q, opts); break;
      case Query::Kind::kShow: render_show(os, snap, *q, opts); break;
      case Query::Kind::kAudience: render_audience(os, snap, *q, opts); break;
      case Query::Kind::kExplain: render_explain(os, snap, *q, opts); break;
    }
    return;
  }
  const auto& w = std::get<BoundWhatIf>(action);
  render_diff(os, whatif(snap, w.mutations, w.diff_owner), opts);
}

}  // namespace pvncli

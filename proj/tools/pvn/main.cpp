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

// pvn -- load .pvn policy files, validate them, answer visibility queries
// and preview reorganizations.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pvn/dsl/binder.hpp"
#include "pvn/dsl/parser.hpp"
#include "pvn/dsl/printer.hpp"
#include "pvn/evolution.hpp"
#include "render.hpp"
#include "repl.hpp"

namespace {

using namespace pvn;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::kIoError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

dsl::BoundDocument load(const std::string& path) {
  return dsl::bind(dsl::parse(read_file(path)));
}

int cmd_check(const std::string& file, const pvncli::RenderOpts& opts) {
  dsl::BoundDocument doc = load(file);
  const NetworkSnapshot& snap = doc.snapshot;
  if (opts.machine)
    std::cout << "groups=" << snap.group_count()
              << " members=" << snap.member_count()
              << " assignments=" << snap.assignments().size() << "\n";
  else
    std::cout << "ok: " << snap.group_count() << " groups, "
              << snap.member_count() << " members, "
              << snap.assignments().size() << " assignments\n";
  return 0;
}

int cmd_eval(const std::string& file, const std::string& query_text,
             const pvncli::RenderOpts& opts) {
  dsl::BoundDocument doc = load(file);
  if (query_text.empty()) {
    // No -e: run the queries and what-if blocks embedded in the file.
    for (const dsl::BoundAction& action : doc.actions)
      pvncli::render_action(std::cout, doc.snapshot, action, opts);
    return 0;
  }
  dsl::Statement stmt = dsl::parse_statement(query_text);
  if (!std::holds_alternative<dsl::Query>(stmt) &&
      !std::holds_alternative<dsl::WhatIfStmt>(stmt))
    throw Error(ErrorCode::kNotAQuery,
                "-e expects a query ('can', 'show', 'audience', 'explain') or "
                "a 'whatif' block");
  dsl::PolicyDocument qdoc;
  qdoc.statements.push_back(std::move(stmt));
  dsl::BoundDocument bound = dsl::bind(qdoc, doc.snapshot);
  for (const dsl::BoundAction& action : bound.actions)
    pvncli::render_action(std::cout, doc.snapshot, action, opts);
  return 0;
}

int cmd_diff(const std::string& file, const std::string& mutations_file,
             const std::string& owner_name, const std::string& commit_file,
             const pvncli::RenderOpts& opts) {
  dsl::BoundDocument base = load(file);
  MemberId owner = base.snapshot.member(owner_name);
  dsl::PolicyDocument muts = dsl::parse(read_file(mutations_file));
  NetworkSnapshot after = dsl::bind(muts, base.snapshot).snapshot;
  VisibilityDiff diff = diff_visibility(base.snapshot, after, owner);
  pvncli::render_diff(std::cout, diff, opts);
  if (!commit_file.empty()) {
    std::ofstream out(commit_file, std::ios::binary);
    if (!out)
      throw Error(ErrorCode::kIoError, "cannot write '" + commit_file + "'");
    out << dsl::print(after);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pvn - content visibility policies for evolving networks"};
  app.require_subcommand(1);
  bool machine = false;
  app.add_flag("--machine", machine,
               "line-oriented key=value output instead of human-readable text");

  std::string file;
  std::string query_text;
  std::string mutations_file;
  std::string owner_name;
  std::string commit_file;

  CLI::App* check = app.add_subcommand("check", "parse and validate a policy file");
  check->add_option("file", file, "policy file")->required();

  CLI::App* eval = app.add_subcommand("eval", "answer visibility queries");
  eval->add_option("file", file, "policy file")->required();
  eval->add_option("-e,--query", query_text,
                   "query to evaluate (default: the file's own queries)");

  CLI::App* diff = app.add_subcommand(
      "diff", "preview the visibility changes of a reorganization");
  diff->add_option("file", file, "policy file")->required();
  diff->add_option("--mutations", mutations_file, "file of mutations to apply")
      ->required();
  diff->add_option("--owner", owner_name, "owner whose content to diff")
      ->required();
  diff->add_option("--commit", commit_file,
                   "write the post-mutation snapshot to this file");

  CLI::App* repl = app.add_subcommand("repl", "interactive session");
  repl->add_option("file", file, "policy file to load")->required();

  CLI11_PARSE(app, argc, argv);

  pvncli::RenderOpts opts = pvncli::detect_render_opts(machine);
  try {
    if (check->parsed()) return cmd_check(file, opts);
    if (eval->parsed()) return cmd_eval(file, query_text, opts);
    if (diff->parsed())
      return cmd_diff(file, mutations_file, owner_name, commit_file, opts);
    if (repl->parsed()) {
      pvn::dsl::BoundDocument doc = load(file);
      return pvncli::run_repl(std::move(doc.snapshot), std::cin, std::cout,
                              std::cerr, opts);
    }
  } catch (const pvn::Error& e) {
    pvncli::print_error(std::cerr, e, file);
    return pvncli::exit_code_for(e);
  }
  return 0;
}

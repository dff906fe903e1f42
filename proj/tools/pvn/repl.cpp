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

#include "repl.hpp"

#include <unistd.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "pvn/dsl/binder.hpp"
#include "pvn/dsl/parser.hpp"
#include "pvn/dsl/printer.hpp"
#include "pvn/evolution.hpp"

namespace pvncli {

using namespace pvn;

namespace {

std::string first_word(const std::string& line) {
  std::istringstream is(line);
  std::string word;
  is >> word;
  return word;
}

// Block statements (content/policy) end when their braces close; everything
// else ends with a ';' outside braces.
bool statement_complete(const std::string& buffer) {
  std::string head = first_word(buffer);
  bool block_form = head == "content" || head == "policy";
  int depth = 0;
  bool in_comment = false;
  for (char c : buffer) {
    if (in_comment) {
      if (c == '\n') in_comment = false;
      continue;
    }
    if (c == '#') {
      in_comment = true;
    } else if (c == '{') {
      ++depth;
    } else if (c == '}') {
      --depth;
      if (block_form && depth == 0) return true;
    } else if (c == ';' && depth == 0 && !block_form) {
      return true;
    }
  }
  return false;
}

}  // namespace

int run_repl(NetworkSnapshot snapshot, std::istream& in, std::ostream& out,
             std::ostream& err, const RenderOpts& opts) {
  const bool interactive = (&in == &std::cin) && isatty(0);
  std::optional<MemberId> watched;
  std::string buffer;
  std::string line;

  auto prompt = [&] {
    if (interactive) out << (buffer.empty() ? "pvn> " : "...> ") << std::flush;
  };

  prompt();
  while (std::getline(in, line)) {
    if (buffer.empty()) {
      std::string word = first_word(line);
      if (word.empty()) {
        prompt();
        continue;
      }
      if (word == "quit") return 0;
      if (word == "watch") {
        std::istringstream is(line);
        std::string cmd, name;
        is >> cmd >> name;
        if (name.empty()) {
          watched.reset();
          out << "watch off\n";
        } else if (auto m = snapshot.find_member(name)) {
          watched = *m;
          out << "watching " << name << "\n";
        } else {
          err << "error: unknown member '" << name << "'\n";
        }
        prompt();
        continue;
      }
      if (word == "save") {
        std::istringstream is(line);
        std::string cmd, file;
        is >> cmd >> file;
        std::ofstream os(file);
        if (!os) {
          err << "error: cannot write '" << file << "'\n";
        } else {
          os << dsl::print(snapshot);
          out << "saved " << file << "\n";
        }
        prompt();
        continue;
      }
    }
    buffer += line;
    buffer += '\n';
    if (!statement_complete(buffer)) {
      prompt();
      continue;
    }
    std::string text;
    std::swap(text, buffer);
    try {
      dsl::Statement stmt = dsl::parse_statement(text);
      if (std::holds_alternative<dsl::Query>(stmt) ||
          std::holds_alternative<dsl::WhatIfStmt>(stmt)) {
        dsl::PolicyDocument doc;
        doc.statements.push_back(std::move(stmt));
        dsl::BoundDocument bound = dsl::bind(doc, snapshot);
        for (const dsl::BoundAction& action : bound.actions)
          render_action(out, snapshot, action, opts);
      } else {
        dsl::PolicyDocument doc;
        doc.statements.push_back(std::move(stmt));
        NetworkSnapshot next = dsl::bind(doc, snapshot).snapshot;
        if (watched) {
          VisibilityDiff diff = diff_visibility(snapshot, next, *watched);
          if (!diff.empty()) render_diff(out, diff, opts);
        }
        snapshot = std::move(next);
      }
    } catch (const Error& e) {
      print_error(err, e, "<repl>");
    }
    prompt();
  }
  return 0;
}

}  // namespace pvncli

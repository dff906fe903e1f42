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

#ifndef PVN_DSL_BINDER_HPP_
#define PVN_DSL_BINDER_HPP_

#include <variant>
#include <vector>

#include "pvn/dsl/ast.hpp"
#include "pvn/evolution.hpp"
#include "pvn/snapshot.hpp"

namespace pvn::dsl {

// A query whose names resolved successfully at its document position.
struct BoundQuery {
  Query ast;
  MemberId viewer;   // can/show/explain
  MemberId owner;
  ContentId content; // can/audience/explain
};

// A what-if block: non-committal mutations plus the owner to diff for.
struct BoundWhatIf {
  WhatIfStmt ast;
  std::vector<Mutation> mutations;
  MemberId diff_owner;
};

using BoundAction = std::variant<BoundQuery, BoundWhatIf>;

struct BoundDocument {
  NetworkSnapshot snapshot;
  std::vector<BoundAction> actions;  // queries and what-ifs, in document order
};

// Replays the document's declarations and mutations in order on top of
// `base` (a fresh network by default). Name resolution is positional:
// forward references are errors. Every diagnostic carries the location of
// the offending statement. Either a complete snapshot is produced or an
// Error is thrown; there is no partial result.
BoundDocument bind(const PolicyDocument& doc,
                   NetworkSnapshot base = NetworkSnapshot());

// Converts a parsed mutation statement into the evolution form.
Mutation to_mutation(const MutationStmt& stmt);

}  // namespace pvn::dsl

#endif  // PVN_DSL_BINDER_HPP_

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

#ifndef PVN_DSL_PRINTER_HPP_
#define PVN_DSL_PRINTER_HPP_

#include <string>

#include "pvn/dsl/ast.hpp"
#include "pvn/snapshot.hpp"

namespace pvn::dsl {

// Pretty-prints a document in canonical formatting, preserving statement
// order. parse(print(doc)) is structurally identical to doc, and
// print(parse(print(doc))) == print(doc).
std::string print(const PolicyDocument& doc);
std::string print(const Statement& stmt);

// Serializes a snapshot as a policy document in canonical order: system
// groups, members, user hierarchies, user-group joins, content trees,
// policy blocks; names sorted, rules in store order. Binding the output
// reproduces the snapshot's semantics; printing it again is byte-identical.
std::string print(const NetworkSnapshot& snap);

}  // namespace pvn::dsl

#endif  // PVN_DSL_PRINTER_HPP_

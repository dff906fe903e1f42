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

#ifndef PVN_DSL_PARSER_HPP_
#define PVN_DSL_PARSER_HPP_

#include <string_view>

#include "pvn/dsl/ast.hpp"

namespace pvn::dsl {

// Parses a whole policy document. Whitespace-insensitive; `#` starts a line
// comment; LF and CRLF both accepted. Throws Error{kSyntaxError} carrying
// the location and the expected-token set of the first failure.
PolicyDocument parse(std::string_view text);

// Parses exactly one statement (plus trailing whitespace/comments).
Statement parse_statement(std::string_view text);

}  // namespace pvn::dsl

#endif  // PVN_DSL_PARSER_HPP_

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

#ifndef PVN_TOOLS_REPL_HPP_
#define PVN_TOOLS_REPL_HPP_

#include <iosfwd>

#include "pvn/snapshot.hpp"
#include "render.hpp"

namespace pvncli {

// Interactive loop over an in-memory snapshot. Statements apply
// immediately; `watch OWNER` prints the visibility diff for that owner
// after every committed mutation; `save FILE` writes the canonical form;
// `quit` (or end of input) exits. Returns the process exit code.
int run_repl(pvn::NetworkSnapshot snapshot, std::istream& in, std::ostream& out,
             std::ostream& err, const RenderOpts& opts);

}  // namespace pvncli

#endif  // PVN_TOOLS_REPL_HPP_

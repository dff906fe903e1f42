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

#ifndef PVN_TOOLS_RENDER_HPP_
#define PVN_TOOLS_RENDER_HPP_

#include <iosfwd>
#include <string>

#include "pvn/dsl/binder.hpp"
#include "pvn/evolution.hpp"
#include "pvn/resolution.hpp"

namespace pvncli {

// Output options shared by all commands. `color` styles the VISIBLE /
// INVISIBLE verdict words; it is off when stdout is not a terminal or
// PVN_COLOR=0 is set.
struct RenderOpts {
  bool machine = false;
  bool color = false;
};

RenderOpts detect_render_opts(bool machine_flag);

// Exit codes: 0 success, 1 semantic failure, 2 syntax error, 3 I/O error.
int exit_code_for(const pvn::Error& e);

void print_error(std::ostream& os, const pvn::Error& e,
                 const std::string& filename);

void render_action(std::ostream& os, const pvn::NetworkSnapshot& snap,
                   const pvn::dsl::BoundAction& action, const RenderOpts& opts);

void render_diff(std::ostream& os, const pvn::VisibilityDiff& diff,
                 const RenderOpts& opts);

}  // namespace pvncli

#endif  // PVN_TOOLS_RENDER_HPP_

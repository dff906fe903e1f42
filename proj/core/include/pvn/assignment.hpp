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

#ifndef PVN_ASSIGNMENT_HPP_
#define PVN_ASSIGNMENT_HPP_

#include <compare>
#include <optional>

#include "pvn/ids.hpp"

namespace pvn {

// The grantee of a visibility assignment: either a group (including the
// universal group `all`) or an individual member.
struct Subject {
  enum class Kind : std::uint8_t { kGroup, kMember };

  Kind kind = Kind::kGroup;
  std::uint32_t raw = 0;

  static Subject group(GroupId g) { return {Kind::kGroup, g.value}; }
  static Subject member(MemberId m) { return {Kind::kMember, m.value}; }

  bool is_group() const { return kind == Kind::kGroup; }
  bool is_member() const { return kind == Kind::kMember; }
  GroupId as_group() const { return GroupId{raw}; }
  MemberId as_member() const { return MemberId{raw}; }

  friend auto operator<=>(const Subject&, const Subject&) = default;
};

// One explicit visibility grant or revocation, authored by `owner` over a
// node of the owner's own content tree. At most one assignment exists per
// (owner, subject, content) key; setting the same key again replaces the
// mode and protocol annotation.
//
// A missing protocol annotation means the assignment resolves with the
// owner's default protocol in force at resolution time.
struct Assignment {
  MemberId owner;
  Subject subject;
  ContentId content;
  Mode mode = Mode::kInvisible;
  std::optional<Protocol> protocol;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

class NetworkSnapshot;

// The protocol an assignment resolves with: its own annotation when present,
// else the owner's current default.
Protocol effective_protocol(const NetworkSnapshot& snap, const Assignment& a);

}  // namespace pvn

#endif  // PVN_ASSIGNMENT_HPP_

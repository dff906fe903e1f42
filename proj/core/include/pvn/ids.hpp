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

#ifndef PVN_IDS_HPP_
#define PVN_IDS_HPP_

#include <compare>
#include <cstdint>

namespace pvn {

// Opaque handles into a NetworkSnapshot. Handles are allocated monotonically
// and never reused, so they stay meaningful across snapshot versions of the
// same network lineage.
struct MemberId {
  std::uint32_t value = 0;
  friend auto operator<=>(const MemberId&, const MemberId&) = default;
};

struct GroupId {
  std::uint32_t value = 0;
  friend auto operator<=>(const GroupId&, const GroupId&) = default;
};

struct ContentId {
  std::uint32_t value = 0;
  friend auto operator<=>(const ContentId&, const ContentId&) = default;
};

// The two visibility modes of an explicit assignment. "Undefined" is never
// stored; it exists only as a per-path outcome during resolution.
enum class Mode : std::uint8_t { kVisible, kInvisible };

// Conflict protocol. The surface language also accepts "cautious" as an
// alias for pessimistic.
enum class Protocol : std::uint8_t { kOptimistic, kPessimistic };

enum class Verdict : std::uint8_t { kVisible, kInvisible };

inline const char* to_string(Mode m) {
  return m == Mode::kVisible ? "visible" : "invisible";
}

inline const char* to_string(Protocol p) {
  return p == Protocol::kOptimistic ? "optimistic" : "pessimistic";
}

inline const char* to_string(Verdict v) {
  return v == Verdict::kVisible ? "visible" : "invisible";
}

}  // namespace pvn

#endif  // PVN_IDS_HPP_

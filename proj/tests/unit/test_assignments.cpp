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

#include <doctest.h>

#include <functional>
#include <random>
#include <vector>

#include "pvn/resolution.hpp"
#include "pvn/snapshot.hpp"
#include "support/fixtures.hpp"

using namespace pvn;
using pvn_tests::build_fig1;
using pvn_tests::Fig1;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kNotFound;
}

Assignment make(MemberId owner, Subject subject, ContentId content, Mode mode) {
  Assignment a;
  a.owner = owner;
  a.subject = subject;
  a.content = content;
  a.mode = mode;
  return a;
}

}  // namespace

TEST_CASE("setting the same key again replaces mode and protocol") {
  Fig1 f = build_fig1();
  NetworkSnapshot s = f.snap;
  std::size_t count = s.assignments().size();

  Assignment a = make(f.nina, Subject::group(f.piston_fans), f.blog,
                      Mode::kInvisible);
  a.protocol = Protocol::kPessimistic;
  s = s.set_assignment(a);
  CHECK(s.assignments().size() == count);
  const Assignment* found =
      s.find_assignment(f.nina, Subject::group(f.piston_fans), f.blog);
  REQUIRE(found != nullptr);
  CHECK(found->mode == Mode::kInvisible);
  CHECK(found->protocol == Protocol::kPessimistic);
}

TEST_CASE("clearing reverts to the inherited or default verdict") {
  Fig1 f = build_fig1();
  NetworkSnapshot s = f.snap;
  CHECK(resolve(s, f.sue, f.nina, f.nina_photo).verdict == Verdict::kVisible);
  s = s.clear_assignment(f.nina, Subject::group(NetworkSnapshot::kAll),
                         f.nina_photo);
  CHECK(resolve(s, f.sue, f.nina, f.nina_photo).verdict == Verdict::kInvisible);
  CHECK(code_of([&] {
          (void)s.clear_assignment(f.nina, Subject::group(NetworkSnapshot::kAll),
                                   f.nina_photo);
        }) == ErrorCode::kNotFound);
}

TEST_CASE("set visible, clear, resolve with no other rules: default deny") {
  NetworkSnapshot s;
  s = s.add_member("Nina");
  s = s.add_member("Sue");
  MemberId nina = s.member("Nina");
  MemberId sue = s.member("Sue");
  ContentId root = s.content_root(nina);
  s = s.set_assignment(make(nina, Subject::member(sue), root, Mode::kVisible));
  CHECK(resolve(s, sue, nina, root).verdict == Verdict::kVisible);
  s = s.clear_assignment(nina, Subject::member(sue), root);
  CHECK(resolve(s, sue, nina, root).verdict == Verdict::kInvisible);
}

TEST_CASE("only the owner authors assignments over their content") {
  Fig1 f = build_fig1();
  CHECK(code_of([&] {
          (void)f.snap.set_assignment(
              make(f.bob, Subject::group(NetworkSnapshot::kAll), f.blog,
                   Mode::kVisible));
        }) == ErrorCode::kForeignContent);
}

TEST_CASE("another member's private group cannot be a subject") {
  Fig1 f = build_fig1();
  NetworkSnapshot s = f.snap.add_group("MyFriends", {}, f.nina);
  GroupId friends = s.group("MyFriends");
  ContentId bob_root = s.content_root(f.bob);
  CHECK(code_of([&] {
          (void)s.set_assignment(
              make(f.bob, Subject::group(friends), bob_root, Mode::kVisible));
        }) == ErrorCode::kForeignSubjectHierarchy);
  // but the owner herself may use it
  s = s.set_assignment(
      make(f.nina, Subject::group(friends), f.blog, Mode::kVisible));
  CHECK(s.find_assignment(f.nina, Subject::group(friends), f.blog) != nullptr);
}

TEST_CASE("the owner default protocol decides JJ's phone access") {
  Fig1 f = build_fig1();
  NetworkSnapshot s = f.snap;  // Nina's default is optimistic here
  CHECK(resolve(s, f.jj, f.nina, f.phone).verdict == Verdict::kVisible);
  s = s.set_default_protocol(f.nina, Protocol::kPessimistic);
  CHECK(resolve(s, f.jj, f.nina, f.phone).verdict == Verdict::kInvisible);
  CHECK(code_of([&] {
          (void)s.set_default_protocol(MemberId{999}, Protocol::kOptimistic);
        }) == ErrorCode::kUnknownMember);
}

TEST_CASE("store operations never touch network structure") {
  Fig1 f = build_fig1();
  NetworkSnapshot s = f.snap;
  auto groups = s.groups();
  auto members = s.members();
  auto memberships = s.memberships(f.jj);
  s = s.set_assignment(make(f.nina, Subject::member(f.sue), f.blog, Mode::kVisible));
  s = s.clear_assignment(f.nina, Subject::member(f.sue), f.blog);
  s = s.set_default_protocol(f.nina, Protocol::kPessimistic);
  CHECK(s.groups() == groups);
  CHECK(s.members() == members);
  CHECK(s.memberships(f.jj) == memberships);
}

TEST_CASE("an `all` grant covers members who join later") {
  Fig1 f = build_fig1();
  NetworkSnapshot s = f.snap.add_member("Mike");
  MemberId mike = s.member("Mike");
  CHECK(resolve(s, mike, f.nina, f.nina_photo).verdict == Verdict::kVisible);
}

TEST_CASE("property: key uniqueness after arbitrary set/clear sequences") {
  Fig1 f = build_fig1();
  NetworkSnapshot s = f.snap;
  std::vector<Subject> subjects = {Subject::group(NetworkSnapshot::kAll),
                                   Subject::group(f.piston_fans),
                                   Subject::member(f.sue)};
  std::vector<ContentId> contents = {f.blog, f.phone, f.everything};
  std::mt19937 rng(99);
  for (int i = 0; i < 300; ++i) {
    Subject subj = subjects[rng() % subjects.size()];
    ContentId c = contents[rng() % contents.size()];
    if (rng() % 3 == 0) {
      try {
        s = s.clear_assignment(f.nina, subj, c);
      } catch (const Error&) {
      }
    } else {
      s = s.set_assignment(make(f.nina, subj, c,
                                rng() % 2 ? Mode::kVisible : Mode::kInvisible));
    }
    for (Subject a : subjects) {
      for (ContentId cc : contents) {
        int hits = 0;
        for (const Assignment& as : s.assignments()) {
          if (as.owner == f.nina && as.subject == a && as.content == cc) ++hits;
        }
        CHECK(hits <= 1);
      }
    }
  }
}

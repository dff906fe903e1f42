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

#ifndef PVN_TESTS_FIXTURES_HPP_
#define PVN_TESTS_FIXTURES_HPP_

#include <set>
#include <string>

#include "pvn/resolution.hpp"
#include "pvn/snapshot.hpp"

namespace pvn_tests {

// The running example network: three fan/student groups, seven members,
// Nina's content tree and her seven visibility rules, optimistic default.
struct Fig1 {
  pvn::NetworkSnapshot snap;

  pvn::GroupId michiganders, piston_fans, umich;
  pvn::MemberId nina, alex, jj, taylor, bob, prema, sue;
  pvn::ContentId everything, personal_info, nina_photo, phone, blog,
      family_photos, piston_photos;
};

inline Fig1 build_fig1() {
  using namespace pvn;
  Fig1 f;
  NetworkSnapshot s;
  s = s.add_group("Michiganders", {}, {});
  f.michiganders = s.group("Michiganders");
  s = s.add_group("PistonFans", {f.michiganders}, {});
  f.piston_fans = s.group("PistonFans");
  s = s.add_group("UMichStudents", {}, {});
  f.umich = s.group("UMichStudents");

  s = s.add_member("Nina");
  s = s.add_member("Alex");
  s = s.add_member("JJ");
  s = s.add_member("Taylor");
  s = s.add_member("Bob");
  s = s.add_member("Prema");
  s = s.add_member("Sue");
  f.nina = s.member("Nina");
  f.alex = s.member("Alex");
  f.jj = s.member("JJ");
  f.taylor = s.member("Taylor");
  f.bob = s.member("Bob");
  f.prema = s.member("Prema");
  f.sue = s.member("Sue");

  s = s.set_membership(f.nina, f.umich, true);
  s = s.set_membership(f.alex, f.umich, true);
  s = s.set_membership(f.jj, f.umich, true);
  s = s.set_membership(f.jj, f.piston_fans, true);
  s = s.set_membership(f.taylor, f.piston_fans, true);
  s = s.set_membership(f.bob, f.piston_fans, true);
  s = s.set_membership(f.prema, f.michiganders, true);

  f.everything = s.content_root(f.nina);
  s = s.add_content(f.nina, f.everything, "PersonalInfo");
  f.personal_info = s.resolve_path(f.nina, "/Everything/PersonalInfo");
  s = s.add_content(f.nina, f.personal_info, "NinaPhoto");
  s = s.add_content(f.nina, f.personal_info, "Phone");
  s = s.add_content(f.nina, f.everything, "Blog");
  s = s.add_content(f.nina, f.everything, "FamilyPhotos");
  s = s.add_content(f.nina, f.everything, "PistonPhotos");
  f.nina_photo = s.resolve_path(f.nina, "/Everything/PersonalInfo/NinaPhoto");
  f.phone = s.resolve_path(f.nina, "/Everything/PersonalInfo/Phone");
  f.blog = s.resolve_path(f.nina, "/Everything/Blog");
  f.family_photos = s.resolve_path(f.nina, "/Everything/FamilyPhotos");
  f.piston_photos = s.resolve_path(f.nina, "/Everything/PistonPhotos");

  auto grant = [&](Subject subj, ContentId c, Mode m) {
    Assignment a;
    a.owner = f.nina;
    a.subject = subj;
    a.content = c;
    a.mode = m;
    s = s.set_assignment(a);
  };
  grant(Subject::group(NetworkSnapshot::kAll), f.nina_photo, Mode::kVisible);
  grant(Subject::group(f.michiganders), f.everything, Mode::kInvisible);
  grant(Subject::group(f.piston_fans), f.blog, Mode::kVisible);
  grant(Subject::group(f.piston_fans), f.nina_photo, Mode::kVisible);
  grant(Subject::group(f.piston_fans), f.piston_photos, Mode::kVisible);
  grant(Subject::member(f.taylor), f.personal_info, Mode::kVisible);
  grant(Subject::group(f.umich), f.everything, Mode::kVisible);

  s = s.set_default_protocol(f.nina, Protocol::kOptimistic);
  f.snap = std::move(s);
  return f;
}

inline std::set<std::string> visible_paths(const pvn::NetworkSnapshot& snap,
                                           pvn::MemberId viewer,
                                           pvn::MemberId owner) {
  std::set<std::string> out;
  for (pvn::ContentId c : pvn::visible_set(snap, viewer, owner))
    out.insert(snap.content_path(c));
  return out;
}

}  // namespace pvn_tests

#endif  // PVN_TESTS_FIXTURES_HPP_

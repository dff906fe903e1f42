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

// Resolution throughput. The reverse-traversal resolver prunes at the first
// assigned subject per branch, so its cost tracks the subgroup edge count;
// the path oracle enumerates derivation paths and stops being usable a few
// dozen groups in. BM_PathOracle is therefore capped at small group counts.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "pvn/evolution.hpp"
#include "pvn/resolution.hpp"

namespace {

using namespace pvn;

NetworkSnapshot synthetic(int members, int groups, int contents,
                          int assignments, int parents_per_group = 1) {
  std::mt19937 rng(1234);
  std::vector<Mutation> build;
  const int levels = 6;
  const int per_level = groups / levels + 1;
  for (int g = 0; g < groups; ++g) {
    int level = g / per_level;
    std::vector<std::string> parents;
    if (level > 0) {
      int lo = (level - 1) * per_level;
      int hi = std::min(level * per_level, groups) - 1;
      for (int p = 0; p < parents_per_group; ++p) {
        std::string cand = "G" + std::to_string(lo + (int)(rng() % (hi - lo + 1)));
        if (std::find(parents.begin(), parents.end(), cand) == parents.end())
          parents.push_back(cand);
      }
    }
    build.push_back(Mutation::create_group("G" + std::to_string(g), parents));
  }
  for (int m = 0; m < members; ++m) {
    std::string name = "M" + std::to_string(m);
    build.push_back(Mutation::add_member(name));
    int joins = 1 + rng() % 3;
    for (int j = 0; j < joins; ++j)
      build.push_back(Mutation::join(name, "G" + std::to_string(rng() % groups)));
  }
  std::vector<std::string> paths{"/Everything"};
  for (int c = 0; c < contents; ++c) {
    std::string parent = paths[rng() % paths.size()];
    std::string path = parent + "/C" + std::to_string(c);
    build.push_back(Mutation::add_content("M0", path));
    paths.push_back(path);
  }
  for (int a = 0; a < assignments; ++a) {
    std::string subject = a % 9 == 0 ? "all" : "G" + std::to_string(rng() % groups);
    build.push_back(Mutation::set_assignment(
        "M0", subject, paths[rng() % paths.size()],
        rng() % 2 ? Mode::kVisible : Mode::kInvisible));
  }
  return apply_batch(NetworkSnapshot(), build);
}

void BM_VisibleSet(benchmark::State& state) {
  const int members = static_cast<int>(state.range(0));
  NetworkSnapshot snap = synthetic(members, 200, 100, 1000);
  MemberId owner = snap.member("M0");
  std::mt19937 rng(7);
  for (auto _ : state) {
    MemberId viewer = snap.member("M" + std::to_string(rng() % members));
    benchmark::DoNotOptimize(visible_set(snap, viewer, owner));
  }
}
BENCHMARK(BM_VisibleSet)->Arg(1000)->Arg(10000);

// Same query, both resolvers, over increasingly dense subgroup DAGs. The
// oracle's path count multiplies with the alternate routes per level; the
// reverse traversal only sees more edges.
void BM_ResolveFast(benchmark::State& state) {
  const int density = static_cast<int>(state.range(0));
  NetworkSnapshot snap = synthetic(50, 60, 20, 40, density);
  MemberId owner = snap.member("M0");
  MemberId viewer = snap.member("M1");
  ContentId c = snap.content_nodes(owner).back();
  for (auto _ : state) {
    benchmark::DoNotOptimize(resolve(snap, viewer, owner, c).verdict);
  }
}
BENCHMARK(BM_ResolveFast)->Arg(1)->Arg(3)->Arg(6);

void BM_PathOracle(benchmark::State& state) {
  const int density = static_cast<int>(state.range(0));
  NetworkSnapshot snap = synthetic(50, 60, 20, 40, density);
  MemberId owner = snap.member("M0");
  MemberId viewer = snap.member("M1");
  ContentId c = snap.content_nodes(owner).back();
  for (auto _ : state) {
    benchmark::DoNotOptimize(resolve_by_paths(snap, viewer, owner, c).verdict);
  }
}
BENCHMARK(BM_PathOracle)->Arg(1)->Arg(3)->Arg(6);

void BM_ApplyReorganization(benchmark::State& state) {
  NetworkSnapshot snap = synthetic(1000, 50, 20, 100);
  std::vector<Mutation> batch;
  for (int i = 0; i < 100; ++i)
    batch.push_back(Mutation::join("M" + std::to_string(i), "G0"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_batch(snap, batch).version());
  }
}
BENCHMARK(BM_ApplyReorganization);

void BM_DiffVisibility(benchmark::State& state) {
  NetworkSnapshot snap = synthetic(200, 40, 30, 80);
  MemberId owner = snap.member("M0");
  std::vector<Mutation> batch;
  for (int i = 0; i < 20; ++i)
    batch.push_back(Mutation::join("M" + std::to_string(i), "G1"));
  NetworkSnapshot after = apply_batch(snap, batch);
  for (auto _ : state) {
    benchmark::DoNotOptimize(diff_visibility(snap, after, owner).entries.size());
  }
}
BENCHMARK(BM_DiffVisibility);

}  // namespace

BENCHMARK_MAIN();

// Copyright 2026 The Actol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <set>
#include <vector>

#include "actol/cfa.hpp"

namespace actol {

// A structured loop: a header whose complementary assume pair splits into
// the loop body and the exit, together with the natural-loop node set of
// its back edges.
struct Loop {
  Location header = 0;
  Location body_start = 0;
  Location exit_target = 0;
  BoolExpr guard;                    // condition on the edge entering the body
  std::set<Location> nodes;          // natural loop, including the header
  std::vector<int> back_edges;       // indices into cfa.edges
  int guard_edge = -1;               // index of the body-entering assume edge
  int exit_edge = -1;
};

struct LoopAnalysis {
  std::vector<Loop> loops;  // ordered by header location
  const Loop* by_header(Location l) const {
    for (const auto& loop : loops) {
      if (loop.header == l) return &loop;
    }
    return nullptr;
  }
  const Loop* by_body_start(Location l) const {
    for (const auto& loop : loops) {
      if (loop.body_start == l) return &loop;
    }
    return nullptr;
  }
};

// Dominator sets over reachable locations (dom[l] contains l).
std::vector<std::set<Location>> dominators(const Cfa& cfa);

// Finds all structured loops. Throws UnsupportedError on irreducible
// control flow and on cycles whose header lacks a complementary
// assume split into body and exit.
LoopAnalysis analyze_loops(const Cfa& cfa);

// The loop-body start locations (targets of the body-entering assume
// edges).
std::set<Location> detect_loop_starts(const Cfa& cfa);

}  // namespace actol

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

#include "actol/loops.hpp"

#include <algorithm>
#include <deque>

#include "actol/diagnostics.hpp"

namespace actol {

namespace {

std::vector<bool> reachable(const Cfa& cfa) {
  std::vector<bool> seen(cfa.num_locations, false);
  std::deque<Location> queue{cfa.initial};
  seen[cfa.initial] = true;
  auto out = cfa.out_edge_index();
  while (!queue.empty()) {
    Location l = queue.front();
    queue.pop_front();
    for (int ei : out[l]) {
      Location t = cfa.edges[ei].dst;
      if (!seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
    }
  }
  return seen;
}

}  // namespace

std::vector<std::set<Location>> dominators(const Cfa& cfa) {
  const int n = cfa.num_locations;
  std::vector<bool> live = reachable(cfa);
  std::set<Location> all;
  for (Location l = 0; l < n; ++l) {
    if (live[l]) all.insert(l);
  }
  std::vector<std::vector<Location>> preds(n);
  for (const auto& e : cfa.edges) {
    if (live[e.src]) preds[e.dst].push_back(e.src);
  }
  std::vector<std::set<Location>> dom(n);
  for (Location l = 0; l < n; ++l) {
    if (!live[l]) continue;
    dom[l] = (l == cfa.initial) ? std::set<Location>{l} : all;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (Location l = 0; l < n; ++l) {
      if (!live[l] || l == cfa.initial) continue;
      std::set<Location> meet = all;
      for (Location p : preds[l]) {
        std::set<Location> tmp;
        std::set_intersection(meet.begin(), meet.end(), dom[p].begin(), dom[p].end(),
                              std::inserter(tmp, tmp.begin()));
        meet = std::move(tmp);
      }
      meet.insert(l);
      if (meet != dom[l]) {
        dom[l] = std::move(meet);
        changed = true;
      }
    }
  }
  return dom;
}

LoopAnalysis analyze_loops(const Cfa& cfa) {
  cfa.check_well_formed();
  auto dom = dominators(cfa);
  std::vector<bool> live = reachable(cfa);

  // Back edges: target dominates source.
  std::map<Location, std::vector<int>> back_by_header;
  std::vector<bool> is_back(cfa.edges.size(), false);
  for (size_t i = 0; i < cfa.edges.size(); ++i) {
    const Edge& e = cfa.edges[i];
    if (!live[e.src]) continue;
    if (dom[e.src].count(e.dst)) {
      back_by_header[e.dst].push_back(int(i));
      is_back[i] = true;
    }
  }

  // Reducibility: removing the back edges must leave an acyclic graph.
  {
    std::vector<int> indeg(cfa.num_locations, 0);
    for (size_t i = 0; i < cfa.edges.size(); ++i) {
      if (!is_back[i] && live[cfa.edges[i].src]) ++indeg[cfa.edges[i].dst];
    }
    std::deque<Location> queue;
    int seen = 0, total = 0;
    for (Location l = 0; l < cfa.num_locations; ++l) {
      if (!live[l]) continue;
      ++total;
      if (indeg[l] == 0) queue.push_back(l);
    }
    auto out = cfa.out_edge_index();
    while (!queue.empty()) {
      Location l = queue.front();
      queue.pop_front();
      ++seen;
      for (int ei : out[l]) {
        if (is_back[ei]) continue;
        if (--indeg[cfa.edges[ei].dst] == 0) queue.push_back(cfa.edges[ei].dst);
      }
    }
    if (seen != total) {
      throw UnsupportedError("irreducible control flow: a cycle has no dominating header");
    }
  }

  auto out = cfa.out_edge_index();
  LoopAnalysis analysis;
  for (const auto& [header, back_edges] : back_by_header) {
    Loop loop;
    loop.header = header;
    loop.back_edges = back_edges;
    // Natural loop: header plus everything reaching a back-edge source
    // without passing through the header.
    loop.nodes.insert(header);
    std::deque<Location> queue;
    for (int ei : back_edges) {
      Location src = cfa.edges[ei].src;
      if (loop.nodes.insert(src).second) queue.push_back(src);
    }
    std::vector<std::vector<Location>> preds(cfa.num_locations);
    for (const auto& e : cfa.edges) {
      if (live[e.src]) preds[e.dst].push_back(e.src);
    }
    while (!queue.empty()) {
      Location l = queue.front();
      queue.pop_front();
      for (Location p : preds[l]) {
        if (loop.nodes.insert(p).second) queue.push_back(p);
      }
    }

    // The header must split into body and exit with a complementary
    // assume pair.
    const auto& hout = out[header];
    bool ok = false;
    if (hout.size() == 2) {
      const Edge& e0 = cfa.edges[hout[0]];
      const Edge& e1 = cfa.edges[hout[1]];
      if (e0.stm.kind == Statement::Kind::Assume && e1.stm.kind == Statement::Kind::Assume &&
          BoolExpr::complementary(*e0.stm.cond, *e1.stm.cond)) {
        const bool first_in = loop.nodes.count(e0.dst) != 0;
        const bool second_in = loop.nodes.count(e1.dst) != 0;
        if (first_in != second_in) {
          const int guard_idx = first_in ? hout[0] : hout[1];
          const int exit_idx = first_in ? hout[1] : hout[0];
          loop.guard = *cfa.edges[guard_idx].stm.cond;
          loop.guard_edge = guard_idx;
          loop.exit_edge = exit_idx;
          loop.body_start = cfa.edges[guard_idx].dst;
          loop.exit_target = cfa.edges[exit_idx].dst;
          ok = true;
        }
      }
    }
    if (!ok) {
      throw UnsupportedError("unsupported loop shape: header " + std::to_string(header) +
                             " has no conditional split into body and exit");
    }
    analysis.loops.push_back(std::move(loop));
  }
  return analysis;
}

std::set<Location> detect_loop_starts(const Cfa& cfa) {
  std::set<Location> starts;
  for (const auto& loop : analyze_loops(cfa).loops) starts.insert(loop.body_start);
  return starts;
}

}  // namespace actol

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
#include <string>
#include <vector>

#include "actol/ast.hpp"

namespace actol {

using Location = int;

struct Edge {
  Location src;
  Statement stm;
  Location dst;
};

struct ArrayDecl {
  std::string name;
  Int size;
};

// Source position of a while-loop, kept so ranking specifications can name
// loops by line. `header` holds the condition split; `body_start` is the
// target of the entering assume edge.
struct LoopSite {
  int source_line = 0;
  Location header = 0;
  Location body_start = 0;
};

// Control-flow automaton. Locations are dense indices [0, num_locations).
struct Cfa {
  int num_locations = 0;
  Location initial = 0;
  std::vector<Edge> edges;
  std::set<Location> errors;
  std::vector<std::string> variables;  // declaration order, then generated names
  std::vector<ArrayDecl> arrays;
  std::vector<LoopSite> loop_sites;  // valid for freshly parsed automata

  bool has_variable(const std::string& name) const {
    for (const auto& v : variables) {
      if (v == name) return true;
    }
    return false;
  }

  int variable_index(const std::string& name) const {
    for (size_t i = 0; i < variables.size(); ++i) {
      if (variables[i] == name) return int(i);
    }
    return -1;
  }

  Location add_location() { return num_locations++; }

  std::vector<std::vector<int>> out_edge_index() const {
    std::vector<std::vector<int>> out(num_locations);
    for (size_t i = 0; i < edges.size(); ++i) out[edges[i].src].push_back(int(i));
    return out;
  }

  // Every edge endpoint in range, initial in range, errors subset.
  void check_well_formed() const;

  // Count of `v := a op b` edges for the given operator.
  int count_op_statements(BinOp op) const;
};

// True when every operator application sits in a `v := a op b` statement
// and every assume condition is a boolean combination of linear atoms.
bool is_three_address(const Cfa& cfa);

}  // namespace actol

// Copyright 2026 The spliceq Authors
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


// Shared helpers for tests that need random smooth refinements.

#ifndef SPLICEQ_TESTS_HELPERS_HPP
#define SPLICEQ_TESTS_HELPERS_HPP

#include <random>

#include "spliceq/diagram.hpp"
#include "spliceq/refine.hpp"

namespace testing_helpers {

using namespace spliceq;

// Realizable refinement of g using random, generally non-minimal smooth
// chains: every edge and arrow cone gets `extra` additional mediant rays
// on top of its minimal chain, on a random gap each time. With
// `arrows` false the arrow cones are only refined minimally.
inline Diagram random_realizable_refinement(const Diagram& g, std::mt19937& rng, int extra, bool arrows = true) {
  Diagram cur = with_multiplicities(g);
  auto chain = [&rng, extra](const Subdivision& cone, bool random) {
    Subdivision s = smooth_subdivide_minimal(cone.rays.front(), cone.rays.back());
    for (int k = 0; random && k < extra; ++k)
      s = insert_mediant(s, std::uniform_int_distribution<std::size_t>(0, s.rays.size() - 2)(rng));
    return s;
  };
  std::vector<std::pair<std::string, std::string>> ends;
  for (const Edge& e : cur.edges()) ends.emplace_back(cur.node(e.u).name, cur.node(e.v).name);
  for (const auto& [a, b] : ends) {
    const EdgeId e = *cur.find_edge(cur.require_node(a), cur.require_node(b));
    cur = refine_edge(cur, e, chain(edge_cone(cur, e), true));
  }
  // A refined arrow moves to the end of the list; unchanged ones stay put.
  std::size_t at = 0;
  for (std::size_t k = 0, total = cur.arrow_count(); k < total; ++k) {
    Diagram next = refine_arrow(cur, ArrowId{at}, chain(arrow_cone(cur, ArrowId{at}), arrows));
    if (next.node_count() == cur.node_count()) ++at;
    cur = std::move(next);
  }
  return cur;
}

}  // namespace testing_helpers

#endif  // SPLICEQ_TESTS_HELPERS_HPP

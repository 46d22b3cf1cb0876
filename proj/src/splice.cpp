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


#include "spliceq/splice.hpp"

#include "spliceq/error.hpp"
#include "spliceq/refine.hpp"

namespace spliceq {

Diagram prepare_standard(const Diagram& g) {
  require_valid(g);
  if (g.is_standard()) return with_multiplicities(g);
  if (!g.has_all_caches())
    fail(ErrorCode::missing_cache, "a diagram with decorated arrows needs cached multiplicities on every node");
  Diagram cur = g;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k < cur.arrow_count() && !changed; ++k)
      if (cur.arrows()[k].dec != 1) {
        cur = refine_arrow(cur, ArrowId{k});
        changed = true;
      }
  }
  return with_multiplicities(cur);
}

EdgeId require_edge(const Diagram& g, const std::string& a, const std::string& b) {
  const auto na = g.find_node(a), nb = g.find_node(b);
  if (!na || !nb) fail(ErrorCode::not_an_edge, "unknown node in edge " + a + " " + b);
  const auto e = g.find_edge(*na, *nb);
  if (!e) fail(ErrorCode::not_an_edge, a + " and " + b + " are not joined by an edge");
  return *e;
}

namespace {

// Side of `keep` across e, plus the far endpoint stripped to e and one arrow.
Diagram half(const Diagram& g, const Diagram& prepared, EdgeId e, NodeId keep, NodeId far, const SideData& far_side) {
  std::vector<bool> nodes(g.node_count(), false);
  for (NodeId v : side_nodes(g, e, keep)) nodes[idx(v)] = true;
  nodes[idx(far)] = true;
  std::vector<bool> edges(g.edge_count(), false);
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const Edge& ed = g.edges()[k];
    edges[k] = EdgeId{k} == e || (ed.u != far && ed.v != far);
  }
  std::vector<bool> arrows(g.arrow_count(), false);
  for (std::size_t k = 0; k < g.arrow_count(); ++k) arrows[k] = g.arrows()[k].node != far;
  Diagram out = filtered(g, nodes, edges, arrows);
  for (std::size_t k = 0; k < out.node_count(); ++k) {
    Node& n = out.node(NodeId{k});
    n.cache = prepared.node(prepared.require_node(n.name)).cache;
  }
  out.add_arrow(out.require_node(g.node(far).name), g.outer_product(far, e), far_side.m, far_side.i);
  return out;
}

}  // namespace

SpliceResult splice(const Diagram& g, EdgeId e) {
  require_valid(g);
  if (idx(e) >= g.edge_count()) fail(ErrorCode::not_an_edge, "edge index out of range");
  const Diagram prepared = prepare_standard(g);
  const Edge& ed = g.edge(e);
  const EdgeId pe = require_edge(prepared, g.node(ed.u).name, g.node(ed.v).name);
  SpliceData sd = splice_data(prepared, pe);
  if (prepared.edge(pe).u != prepared.require_node(g.node(ed.u).name)) std::swap(sd.left, sd.right);
  for (const SideData& s : {sd.left, sd.right})
    if (s.m == 0 && s.i == 0) fail(ErrorCode::degenerate_denominator, "a side of the edge has (M, i) = (0, 0)");
  SpliceResult r{half(g, prepared, e, ed.u, ed.v, sd.right), half(g, prepared, e, ed.v, ed.u, sd.left),
                 SpliceQuad{sd.right.m, sd.left.m, sd.right.i, sd.left.i}};
  return r;
}

ZetaExpr correction_term(const SpliceQuad& q) {
  ZetaExpr z;
  const LaurentPoly lm1 = LaurentPoly::monomial(1, 1) - LaurentPoly(BigInt(1));
  z.add_term(lm1 * lm1, {{q.i, q.m}, {q.i2, q.m2}});
  return z;
}

RatFuncS correction_term_top(const SpliceQuad& q) { return RatFuncS::term(1, {{q.m, q.i}, {q.m2, q.i2}}); }

bool verify_splice_motivic(const Diagram& g, EdgeId e) {
  const SpliceResult r = splice(g, e);
  return motivic_zeta(g) == motivic_zeta(r.left) + motivic_zeta(r.right) - correction_term(r.data);
}

bool verify_splice_top(const Diagram& g, EdgeId e) {
  const SpliceResult r = splice(g, e);
  return top_zeta(g) == top_zeta(r.left) + top_zeta(r.right) - correction_term_top(r.data);
}

}  // namespace spliceq

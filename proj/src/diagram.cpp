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

#include "spliceq/diagram.hpp"

#include <numeric>
#include <sstream>

#include "spliceq/algebra.hpp"
#include "spliceq/error.hpp"

namespace spliceq {

NodeId Diagram::add_node(std::string name, std::optional<Mult> cache) {
  if (name.empty()) fail(ErrorCode::invalid_argument, "node name must not be empty");
  if (by_name_.count(name)) fail(ErrorCode::invalid_argument, "duplicate node '" + name + "'");
  const NodeId id{nodes_.size()};
  by_name_.emplace(name, id);
  nodes_.push_back({std::move(name), cache});
  node_edges_.emplace_back();
  node_arrows_.emplace_back();
  return id;
}

EdgeId Diagram::add_edge(NodeId u, NodeId v, std::int64_t du, std::int64_t dv) {
  if (idx(u) >= nodes_.size() || idx(v) >= nodes_.size()) fail(ErrorCode::invalid_argument, "edge endpoint out of range");
  const EdgeId id{edges_.size()};
  edges_.push_back({u, v, du, dv});
  node_edges_[idx(u)].push_back(id);
  if (u != v) node_edges_[idx(v)].push_back(id);
  return id;
}

ArrowId Diagram::add_arrow(NodeId node, std::int64_t dec, std::int64_t n, std::int64_t nu) {
  if (idx(node) >= nodes_.size()) fail(ErrorCode::invalid_argument, "arrow node out of range");
  const ArrowId id{arrows_.size()};
  arrows_.push_back({node, dec, n, nu});
  node_arrows_[idx(node)].push_back(id);
  return id;
}

std::optional<NodeId> Diagram::find_node(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

NodeId Diagram::require_node(const std::string& name) const {
  auto id = find_node(name);
  if (!id) fail(ErrorCode::invalid_argument, "unknown node '" + name + "'");
  return *id;
}

std::optional<EdgeId> Diagram::find_edge(NodeId a, NodeId b) const {
  for (EdgeId e : edges_at(a)) {
    const Edge& ed = edge(e);
    if ((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)) return e;
  }
  return std::nullopt;
}

NodeId Diagram::other_end(EdgeId e, NodeId v) const {
  const Edge& ed = edge(e);
  return ed.u == v ? ed.v : ed.u;
}

std::int64_t Diagram::near_decoration(EdgeId e, NodeId v) const {
  const Edge& ed = edge(e);
  if (ed.u == v) return ed.du;
  if (ed.v == v) return ed.dv;
  fail(ErrorCode::invalid_argument, "node is not an endpoint of the edge");
}

std::int64_t Diagram::decoration_product(NodeId v) const {
  std::int64_t p = 1;
  for (EdgeId e : edges_at(v)) p = checked_mul(p, near_decoration(e, v));
  for (ArrowId a : arrows_at(v)) p = checked_mul(p, arrow(a).dec);
  return p;
}

std::int64_t Diagram::outer_product(NodeId v, EdgeId e) const {
  std::int64_t p = 1;
  for (EdgeId f : edges_at(v))
    if (f != e) p = checked_mul(p, near_decoration(f, v));
  for (ArrowId a : arrows_at(v)) p = checked_mul(p, arrow(a).dec);
  return p;
}

std::int64_t Diagram::edge_determinant(EdgeId e) const {
  const Edge& ed = edge(e);
  return checked_add(checked_mul(ed.du, ed.dv), -checked_mul(outer_product(ed.u, e), outer_product(ed.v, e)));
}

bool Diagram::is_standard() const {
  for (const Arrow& a : arrows_)
    if (a.dec != 1) return false;
  return true;
}

bool Diagram::has_all_caches() const {
  for (const Node& n : nodes_)
    if (!n.cache) return false;
  return true;
}

void Diagram::clear_caches() {
  for (Node& n : nodes_) n.cache.reset();
}

std::string Diagram::fresh_name(const std::string& base) const {
  if (!by_name_.count(base)) return base;
  for (std::size_t k = 2;; ++k) {
    std::string candidate = base + "_" + std::to_string(k);
    if (!by_name_.count(candidate)) return candidate;
  }
}

Diagram filtered(const Diagram& g, const std::vector<bool>& keep_nodes, const std::vector<bool>& keep_edges,
                 const std::vector<bool>& keep_arrows) {
  Diagram out;
  std::vector<std::optional<NodeId>> map(g.node_count());
  for (std::size_t k = 0; k < g.node_count(); ++k)
    if (keep_nodes.at(k)) map[k] = out.add_node(g.nodes()[k].name, g.nodes()[k].cache);
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edges()[k];
    if (keep_edges.at(k) && map[idx(e.u)] && map[idx(e.v)]) out.add_edge(*map[idx(e.u)], *map[idx(e.v)], e.du, e.dv);
  }
  for (std::size_t k = 0; k < g.arrow_count(); ++k) {
    const Arrow& a = g.arrows()[k];
    if (keep_arrows.at(k) && map[idx(a.node)]) out.add_arrow(*map[idx(a.node)], a.dec, a.n, a.nu);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Validation

std::vector<Issue> validate(const Diagram& g) {
  std::vector<Issue> out;
  auto error = [&out](std::string kind, std::string msg) {
    out.push_back({Severity::error, std::move(kind), std::move(msg)});
  };
  if (g.node_count() == 0) {
    error("empty", "diagram has no nodes");
    return out;
  }

  bool decorations_ok = true;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edges()[k];
    const std::string where = "edge " + g.node(e.u).name + " " + g.node(e.v).name;
    if (e.u == e.v) error("tree", where + " is a loop");
    if (e.du < 1 || e.dv < 1) {
      error("decoration", where + " has a decoration < 1");
      decorations_ok = false;
    }
  }
  for (const Arrow& a : g.arrows()) {
    const std::string where = "arrow at " + g.node(a.node).name;
    if (a.dec < 1) {
      error("decoration", where + " has decoration < 1");
      decorations_ok = false;
    }
    if (a.n < 0) error("arrow", where + " has negative N");
    if (a.n == 0 && a.nu == 0) error("arrow", where + " has (N, nu) = (0, 0)");
    if (a.nu <= 0 && !(a.n == 0 && a.nu == 0))
      out.push_back({Severity::warning, "arrow_nu", where + " has nu = " + std::to_string(a.nu) + " <= 0"});
  }

  // Tree check: connected with |E| = |V| - 1.
  std::vector<bool> seen(g.node_count(), false);
  std::vector<NodeId> stack{NodeId{0}};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.edges_at(v)) {
      NodeId w = g.other_end(e, v);
      if (!seen[idx(w)]) {
        seen[idx(w)] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != g.node_count()) error("tree", "diagram is not connected");
  if (g.edge_count() + 1 != g.node_count()) error("tree", "diagram has a cycle (|E| != |V| - 1)");

  for (std::size_t k = 0; k < g.node_count(); ++k) {
    const NodeId v{k};
    std::vector<std::int64_t> decs;
    for (EdgeId e : g.edges_at(v)) decs.push_back(g.near_decoration(e, v));
    for (ArrowId a : g.arrows_at(v)) decs.push_back(g.arrow(a).dec);
    for (std::size_t i = 0; i < decs.size(); ++i)
      for (std::size_t j = i + 1; j < decs.size(); ++j)
        if (gcd64(decs[i], decs[j]) != 1)
          error("coprimality", "node " + g.node(v).name + ": decorations " + std::to_string(decs[i]) + " and " +
                                   std::to_string(decs[j]) + " are not coprime");
    const auto& c = g.node(v).cache;
    if (c && c->n == 0 && c->nu == 0) error("cache", "node " + g.node(v).name + " caches (N, nu) = (0, 0)");
    if (c && c->n < 0) error("cache", "node " + g.node(v).name + " caches negative N");
  }

  if (decorations_ok) {
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
      const Edge& e = g.edges()[k];
      if (e.u == e.v) continue;
      try {
        const std::int64_t q = g.edge_determinant(EdgeId{k});
        if (q < 1)
          error("determinant", "edge " + g.node(e.u).name + " " + g.node(e.v).name + " has determinant " +
                                   std::to_string(q) + " < 1");
      } catch (const Error&) {
        error("determinant", "edge determinant overflows");
      }
    }
  }
  return out;
}

bool is_valid(const Diagram& g) {
  for (const Issue& i : validate(g))
    if (i.severity == Severity::error) return false;
  return true;
}

void require_valid(const Diagram& g) {
  std::string msg;
  for (const Issue& i : validate(g))
    if (i.severity == Severity::error) msg += (msg.empty() ? "" : "; ") + i.message;
  if (!msg.empty()) fail(ErrorCode::validation_error, "invalid diagram: " + msg);
}

// ---------------------------------------------------------------------------
// Valency and linking numbers

int valency(const Diagram& g, NodeId v, ValencyKind kind) {
  int n = static_cast<int>(g.edges_at(v).size());
  if (kind == ValencyKind::plain) return n;
  for (ArrowId a : g.arrows_at(v))
    if (kind == ValencyKind::full || g.arrow(a).n >= 1) ++n;
  return n;
}

namespace {

struct Linkings {
  std::vector<std::int64_t> to_node;   // 0 for unreached nodes
  std::vector<std::int64_t> to_arrow;  // 0 for unreached arrows
};

// Linking numbers from `start` to every node and arrowhead reachable without
// crossing `entry`. When `entry` is set it counts as the on-path edge at start.
Linkings linkings_from(const Diagram& g, NodeId start, std::optional<EdgeId> entry) {
  Linkings out{std::vector<std::int64_t>(g.node_count(), 0), std::vector<std::int64_t>(g.arrow_count(), 0)};
  struct Frame {
    NodeId v;
    std::optional<EdgeId> in;
    std::int64_t acc;  // product of contributions of earlier path nodes
  };
  std::vector<Frame> stack{{start, entry, 1}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    const std::int64_t own = g.decoration_product(f.v);
    const std::int64_t in_dec = f.in ? g.near_decoration(*f.in, f.v) : 1;
    const std::int64_t open = own / in_dec;  // decorations at v off the incoming edge
    out.to_node[idx(f.v)] = checked_mul(f.acc, open);
    for (ArrowId a : g.arrows_at(f.v)) out.to_arrow[idx(a)] = checked_mul(f.acc, open / g.arrow(a).dec);
    for (EdgeId e : g.edges_at(f.v)) {
      if (f.in && e == *f.in) continue;
      const NodeId w = g.other_end(e, f.v);
      stack.push_back({w, e, checked_mul(f.acc, open / g.near_decoration(e, f.v))});
    }
  }
  return out;
}

std::int64_t pick(const Linkings& l, Target target) {
  if (auto* n = std::get_if<NodeId>(&target)) return l.to_node.at(idx(*n));
  return l.to_arrow.at(idx(std::get<ArrowId>(target)));
}

NodeId target_node(const Diagram& g, Target target) {
  if (auto* n = std::get_if<NodeId>(&target)) return *n;
  return g.arrow(std::get<ArrowId>(target)).node;
}

void require_standard(const Diagram& g, const char* what) {
  if (!g.is_standard())
    fail(ErrorCode::decorated_arrow_present,
         std::string(what) + " requires every arrowhead decoration to be 1; refine decorated arrows first");
}

}  // namespace

std::int64_t linking(const Diagram& g, NodeId source, Target target) {
  return pick(linkings_from(g, source, std::nullopt), target);
}

std::vector<NodeId> side_nodes(const Diagram& g, EdgeId e, NodeId endpoint) {
  std::vector<NodeId> out;
  std::vector<bool> seen(g.node_count(), false);
  std::vector<NodeId> stack{endpoint};
  seen[idx(endpoint)] = true;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (EdgeId f : g.edges_at(v)) {
      if (f == e) continue;
      NodeId w = g.other_end(f, v);
      if (!seen[idx(w)]) {
        seen[idx(w)] = true;
        stack.push_back(w);
      }
    }
  }
  return out;
}

std::int64_t linking_from_edge(const Diagram& g, EdgeId e, Target target) {
  const Edge& ed = g.edge(e);
  const NodeId t = target_node(g, target);
  bool on_u_side = false;
  for (NodeId v : side_nodes(g, e, ed.u))
    if (v == t) on_u_side = true;
  return pick(linkings_from(g, on_u_side ? ed.u : ed.v, e), target);
}

MultTable compute_multiplicities(const Diagram& g) {
  require_standard(g, "the linking-number multiplicity formulas");
  MultTable table(g.node_count());
  std::vector<int> plain(g.node_count());
  for (std::size_t k = 0; k < g.node_count(); ++k) plain[k] = valency(g, NodeId{k}, ValencyKind::plain);
  for (std::size_t k = 0; k < g.node_count(); ++k) {
    const Linkings l = linkings_from(g, NodeId{k}, std::nullopt);
    Mult m;
    for (std::size_t a = 0; a < g.arrow_count(); ++a) {
      const Arrow& ar = g.arrows()[a];
      m.n = checked_add(m.n, checked_mul(ar.n, l.to_arrow[a]));
      m.nu = checked_add(m.nu, checked_mul(ar.nu - 1, l.to_arrow[a]));
    }
    for (std::size_t w = 0; w < g.node_count(); ++w) m.nu = checked_add(m.nu, checked_mul(2 - plain[w], l.to_node[w]));
    table[k] = m;
  }
  return table;
}

Diagram with_multiplicities(const Diagram& g) {
  const MultTable table = compute_multiplicities(g);
  Diagram out = g;
  for (std::size_t k = 0; k < g.node_count(); ++k) {
    Node& n = out.node(NodeId{k});
    if (n.cache && !(*n.cache == table[k]))
      fail(ErrorCode::cache_mismatch, "node " + n.name + " caches (" + std::to_string(n.cache->n) + ", " +
                                          std::to_string(n.cache->nu) + ") but the diagram gives (" +
                                          std::to_string(table[k].n) + ", " + std::to_string(table[k].nu) + ")");
    n.cache = table[k];
  }
  return out;
}

MultTable cached_multiplicities(const Diagram& g) {
  MultTable table;
  for (const Node& n : g.nodes()) {
    if (!n.cache) fail(ErrorCode::missing_cache, "node " + n.name + " has no cached multiplicities");
    table.push_back(*n.cache);
  }
  return table;
}

// ---------------------------------------------------------------------------
// Splice data

SpliceData splice_data(const Diagram& g, EdgeId e) {
  require_standard(g, "splice data");
  std::vector<int> plain(g.node_count());
  for (std::size_t k = 0; k < g.node_count(); ++k) plain[k] = valency(g, NodeId{k}, ValencyKind::plain);
  auto side = [&](NodeId endpoint) {
    const Linkings l = linkings_from(g, endpoint, e);
    SideData s;
    for (std::size_t w = 0; w < g.node_count(); ++w)
      if (l.to_node[w] != 0) s.i = checked_add(s.i, checked_mul(2 - plain[w], l.to_node[w]));
    for (std::size_t a = 0; a < g.arrow_count(); ++a) {
      if (l.to_arrow[a] == 0) continue;
      const Arrow& ar = g.arrows()[a];
      s.m = checked_add(s.m, checked_mul(ar.n, l.to_arrow[a]));
      s.i = checked_add(s.i, checked_mul(ar.nu - 1, l.to_arrow[a]));
    }
    return s;
  };
  const Edge& ed = g.edge(e);
  return {side(ed.u), side(ed.v)};
}

SpliceData splice_data_from_caches(const Diagram& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  const auto& cu = g.node(ed.u).cache;
  const auto& cv = g.node(ed.v).cache;
  if (!cu || !cv) fail(ErrorCode::missing_cache, "edge endpoints need cached multiplicities");
  const std::int64_t du = ed.du, dv = ed.dv;
  const std::int64_t big_u = g.outer_product(ed.u, e), big_v = g.outer_product(ed.v, e);
  const std::int64_t q = g.edge_determinant(e);
  if (q < 1) fail(ErrorCode::invalid_argument, "edge determinant must be positive");
  auto solve = [&](std::int64_t xu, std::int64_t xv, std::int64_t& left, std::int64_t& right) {
    const std::int64_t l = checked_add(checked_mul(dv, xu), -checked_mul(big_u, xv));
    const std::int64_t r = checked_add(checked_mul(du, xv), -checked_mul(big_v, xu));
    if (l % q != 0 || r % q != 0)
      fail(ErrorCode::non_integral_interpolation, "cached multiplicities are inconsistent with the edge cone");
    left = l / q;
    right = r / q;
  };
  SpliceData s;
  solve(cu->n, cv->n, s.left.m, s.right.m);
  solve(cu->nu, cv->nu, s.left.i, s.right.i);
  return s;
}

// ---------------------------------------------------------------------------
// Cone vectors

std::int64_t det(Vec2 a, Vec2 b) { return checked_add(checked_mul(a.x, b.y), -checked_mul(a.y, b.x)); }

Vec2 cone_vector(const Diagram& g, EdgeId e, NodeId endpoint) {
  const Edge& ed = g.edge(e);
  if (endpoint == ed.u) return {ed.du, g.outer_product(ed.u, e)};
  if (endpoint == ed.v) return {g.outer_product(ed.v, e), ed.dv};
  fail(ErrorCode::invalid_argument, "node is not an endpoint of the edge");
}

Vec2 arrow_cone_vector(const Diagram& g, ArrowId a) {
  const Arrow& ar = g.arrow(a);
  std::int64_t outer = 1;
  for (EdgeId e : g.edges_at(ar.node)) outer = checked_mul(outer, g.near_decoration(e, ar.node));
  for (ArrowId b : g.arrows_at(ar.node))
    if (b != a) outer = checked_mul(outer, g.arrow(b).dec);
  return {ar.dec, outer};
}

}  // namespace spliceq

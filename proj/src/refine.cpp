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


#include "spliceq/refine.hpp"

#include <algorithm>
#include <functional>

#include "spliceq/algebra.hpp"
#include "spliceq/error.hpp"

namespace spliceq {

namespace {

// Returns (s, t) with a*s + b*t = gcd(a, b).
std::pair<std::int64_t, std::int64_t> bezout(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_s, -old_t};
  return {old_s, old_t};
}

bool primitive(Vec2 w) { return (w.x != 0 || w.y != 0) && gcd64(w.x, w.y) == 1; }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Subdivision smooth_subdivide_minimal(Vec2 u, Vec2 v) {
  if (!primitive(u) || !primitive(v)) fail(ErrorCode::non_primitive_input, "cone rays must be primitive");
  if (det(u, v) < 1) fail(ErrorCode::negative_determinant, "cone determinant must be >= 1");
  Subdivision s{{u}};
  Vec2 cur = u;
  while (true) {
    const std::int64_t q = det(cur, v);
    if (q == 1) break;
    // w0 with det(cur, w0) = cur.x*w0.y - cur.y*w0.x = 1
    const auto [a, b] = bezout(cur.x, -cur.y);
    Vec2 w{b, a};
    const std::int64_t r = det(w, v);
    const std::int64_t k = -floor_div(r, q);
    w = {checked_add(w.x, checked_mul(k, cur.x)), checked_add(w.y, checked_mul(k, cur.y))};
    s.rays.push_back(w);
    cur = w;
  }
  s.rays.push_back(v);
  if (std::string d = subdivision_defect(s, u, v, true); !d.empty())
    fail(ErrorCode::invalid_argument, "internal subdivision check failed: " + d);
  return s;
}

std::vector<std::int64_t> chain_b_values(const Subdivision& s) {
  std::vector<std::int64_t> out;
  for (std::size_t j = 1; j + 1 < s.rays.size(); ++j) {
    const Vec2 p = s.rays[j - 1], w = s.rays[j], n = s.rays[j + 1];
    const Vec2 sum{p.x + n.x, p.y + n.y};
    if (det(sum, w) != 0) fail(ErrorCode::invalid_argument, "neighbour sum is not a multiple of the ray");
    out.push_back(w.x != 0 ? sum.x / w.x : sum.y / w.y);
  }
  return out;
}

std::string subdivision_defect(const Subdivision& s, Vec2 u, Vec2 v, bool minimal) {
  if (s.rays.size() < 2) return "fewer than two rays";
  if (!(s.rays.front() == u) || !(s.rays.back() == v)) return "chain endpoints differ from the cone";
  for (const Vec2& w : s.rays)
    if (!primitive(w)) return "non-primitive ray (" + std::to_string(w.x) + "," + std::to_string(w.y) + ")";
  for (std::size_t j = 0; j + 1 < s.rays.size(); ++j)
    if (det(s.rays[j], s.rays[j + 1]) != 1) return "consecutive determinant != 1 at position " + std::to_string(j);
  std::vector<std::int64_t> b;
  try {
    b = chain_b_values(s);
  } catch (const Error& e) {
    return e.what();
  }
  for (std::int64_t bj : b)
    if (bj < (minimal ? 2 : 1)) return "b value " + std::to_string(bj) + " too small";
  return {};
}

Subdivision insert_mediant(const Subdivision& s, std::size_t gap) {
  if (gap + 1 >= s.rays.size()) fail(ErrorCode::invalid_argument, "gap out of range");
  Subdivision out = s;
  const Vec2 a = s.rays[gap], b = s.rays[gap + 1];
  out.rays.insert(out.rays.begin() + static_cast<std::ptrdiff_t>(gap + 1), Vec2{a.x + b.x, a.y + b.y});
  return out;
}

Subdivision edge_cone(const Diagram& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  return {{cone_vector(g, e, ed.u), cone_vector(g, e, ed.v)}};
}

Subdivision arrow_cone(const Diagram& g, ArrowId a) { return {{arrow_cone_vector(g, a), Vec2{0, 1}}}; }

namespace {

// (det(w, wr) * left + det(wl, w) * right) / det(wl, wr), exact.
Mult interpolate(Vec2 wl, Vec2 wr, Mult left, Mult right, Vec2 w) {
  const std::int64_t q = det(wl, wr);
  const std::int64_t a = det(w, wr), b = det(wl, w);
  const std::int64_t n = checked_add(checked_mul(a, left.n), checked_mul(b, right.n));
  const std::int64_t nu = checked_add(checked_mul(a, left.nu), checked_mul(b, right.nu));
  if (n % q != 0 || nu % q != 0)
    fail(ErrorCode::non_integral_interpolation,
         "interpolated multiplicities at (" + std::to_string(w.x) + "," + std::to_string(w.y) + ") are not integral");
  return {n / q, nu / q};
}

const Subdivision& checked_sub(const std::optional<Subdivision>& sub, const Subdivision& cone, Subdivision& storage) {
  if (!sub) {
    storage = smooth_subdivide_minimal(cone.rays.front(), cone.rays.back());
    return storage;
  }
  if (std::string d = subdivision_defect(*sub, cone.rays.front(), cone.rays.back(), false); !d.empty())
    fail(ErrorCode::invalid_argument, "subdivision does not fit the cone: " + d);
  return *sub;
}

}  // namespace

Diagram refine_edge(const Diagram& g, EdgeId e, const std::optional<Subdivision>& sub) {
  const Subdivision cone = edge_cone(g, e);
  Subdivision storage;
  const Subdivision& s = checked_sub(sub, cone, storage);
  if (s.interior_count() == 0) return g;
  const Edge ed = g.edge(e);
  const auto& cu = g.node(ed.u).cache;
  const auto& cv = g.node(ed.v).cache;
  const std::string& un = g.node(ed.u).name;
  const std::string& vn = g.node(ed.v).name;

  std::vector<bool> edges(g.edge_count(), true);
  edges[idx(e)] = false;
  Diagram out = filtered(g, std::vector<bool>(g.node_count(), true), edges, std::vector<bool>(g.arrow_count(), true));
  NodeId prev = out.require_node(un);
  std::int64_t prev_dec = ed.du;
  for (std::size_t j = 1; j + 1 < s.rays.size(); ++j) {
    const Vec2 w = s.rays[j];
    std::optional<Mult> cache;
    if (cu && cv) cache = interpolate(cone.rays.front(), cone.rays.back(), *cu, *cv, w);
    const NodeId x = out.add_node(out.fresh_name(un + "." + vn + "." + std::to_string(j)), cache);
    out.add_edge(prev, x, prev_dec, w.y);
    prev = x;
    prev_dec = w.x;
  }
  out.add_edge(prev, out.require_node(vn), prev_dec, ed.dv);
  return out;
}

Diagram refine_arrow(const Diagram& g, ArrowId a, const std::optional<Subdivision>& sub) {
  const Subdivision cone = arrow_cone(g, a);
  Subdivision storage;
  const Subdivision& s = checked_sub(sub, cone, storage);
  if (s.interior_count() == 0) return g;
  const Arrow ar = g.arrow(a);
  const auto& cv = g.node(ar.node).cache;
  if (!cv) fail(ErrorCode::missing_cache, "refining a decorated arrow needs the cache of node " + g.node(ar.node).name);
  const std::string& vn = g.node(ar.node).name;

  std::vector<bool> arrows(g.arrow_count(), true);
  arrows[idx(a)] = false;
  Diagram out = filtered(g, std::vector<bool>(g.node_count(), true), std::vector<bool>(g.edge_count(), true), arrows);
  NodeId prev = out.require_node(vn);
  std::int64_t prev_dec = ar.dec;
  for (std::size_t j = 1; j + 1 < s.rays.size(); ++j) {
    const Vec2 w = s.rays[j];
    const Mult cache = interpolate(cone.rays.front(), cone.rays.back(), *cv, Mult{ar.n, ar.nu}, w);
    const NodeId x = out.add_node(out.fresh_name(vn + ".a" + std::to_string(idx(a)) + "." + std::to_string(j)), cache);
    out.add_edge(prev, x, prev_dec, w.y);
    prev = x;
    prev_dec = w.x;
  }
  out.add_arrow(prev, prev_dec, ar.n, ar.nu);
  return out;
}

bool is_realizable(const Diagram& g) {
  for (std::size_t k = 0; k < g.edge_count(); ++k)
    if (g.edge_determinant(EdgeId{k}) != 1) return false;
  return g.is_standard();
}

Diagram realizable_refine(const Diagram& g) {
  require_valid(g);
  Diagram cur = g.is_standard() ? with_multiplicities(g) : g;
  if (!cur.has_all_caches())
    fail(ErrorCode::missing_cache, "a diagram with decorated arrows needs cached multiplicities on every node");
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k < cur.arrow_count() && !changed; ++k)
      if (cur.arrows()[k].dec != 1) {
        cur = refine_arrow(cur, ArrowId{k});
        changed = true;
      }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k < cur.edge_count() && !changed; ++k)
      if (cur.edge_determinant(EdgeId{k}) != 1) {
        cur = refine_edge(cur, EdgeId{k});
        changed = true;
      }
  }
  return with_multiplicities(cur);
}

Diagram reduce(const Diagram& g) {
  Diagram cur = g;
  while (true) {
    std::optional<NodeId> victim;
    for (std::size_t k = 0; k < cur.node_count() && !victim; ++k) {
      const NodeId v{k};
      if (cur.edges_at(v).size() == 2 && cur.arrows_at(v).empty()) victim = v;
    }
    if (!victim) return cur;
    const EdgeId e1 = cur.edges_at(*victim)[0], e2 = cur.edges_at(*victim)[1];
    const NodeId x = cur.other_end(e1, *victim), y = cur.other_end(e2, *victim);
    const std::int64_t dx = cur.near_decoration(e1, x), dy = cur.near_decoration(e2, y);
    const std::string xn = cur.node(x).name, yn = cur.node(y).name;
    std::vector<bool> nodes(cur.node_count(), true);
    nodes[idx(*victim)] = false;
    Diagram next = filtered(cur, nodes, std::vector<bool>(cur.edge_count(), true), std::vector<bool>(cur.arrow_count(), true));
    next.add_edge(next.require_node(xn), next.require_node(yn), dx, dy);
    cur = std::move(next);
  }
}

namespace {

std::string node_label(const Diagram& g, NodeId v, bool with_caches) {
  std::vector<std::string> arrows;
  for (ArrowId a : g.arrows_at(v)) {
    const Arrow& ar = g.arrow(a);
    arrows.push_back("<" + std::to_string(ar.dec) + "," + std::to_string(ar.n) + "," + std::to_string(ar.nu) + ">");
  }
  std::sort(arrows.begin(), arrows.end());
  std::string s;
  for (const auto& a : arrows) s += a;
  if (with_caches) {
    const auto& c = g.node(v).cache;
    s += c ? "{" + std::to_string(c->n) + "," + std::to_string(c->nu) + "}" : "{}";
  }
  return s;
}

std::string rooted_form(const Diagram& g, NodeId v, std::optional<EdgeId> parent, bool with_caches) {
  std::vector<std::string> children;
  for (EdgeId e : g.edges_at(v)) {
    if (parent && e == *parent) continue;
    const NodeId w = g.other_end(e, v);
    children.push_back("(" + std::to_string(g.near_decoration(e, v)) + ":" + std::to_string(g.near_decoration(e, w)) +
                       ")" + rooted_form(g, w, e, with_caches));
  }
  std::sort(children.begin(), children.end());
  std::string s = node_label(g, v, with_caches) + "[";
  for (const auto& c : children) s += c;
  return s + "]";
}

std::vector<NodeId> tree_centres(const Diagram& g) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> degree(n);
  std::vector<NodeId> layer;
  for (std::size_t k = 0; k < n; ++k) {
    degree[k] = g.edges_at(NodeId{k}).size();
    if (degree[k] <= 1) layer.push_back(NodeId{k});
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<NodeId> next;
    for (NodeId v : layer)
      for (EdgeId e : g.edges_at(v)) {
        const NodeId w = g.other_end(e, v);
        if (--degree[idx(w)] == 1) next.push_back(w);
      }
    layer = std::move(next);
  }
  return layer;
}

}  // namespace

std::string canonical_form(const Diagram& g, bool with_caches) {
  if (g.node_count() == 0) return "";
  std::string best;
  for (NodeId c : tree_centres(g)) {
    std::string s = rooted_form(g, c, std::nullopt, with_caches);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

bool equal_up_to_renaming(const Diagram& a, const Diagram& b, bool with_caches) {
  return a.node_count() == b.node_count() && a.edge_count() == b.edge_count() && a.arrow_count() == b.arrow_count() &&
         canonical_form(a, with_caches) == canonical_form(b, with_caches);
}

}  // namespace spliceq

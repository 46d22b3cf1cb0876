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


#include "spliceq/io.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <regex>
#include <sstream>
#include <tuple>

#include "spliceq/error.hpp"

namespace spliceq {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < line.size()) {
    if (line[k] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[k]))) {
      ++k;
      continue;
    }
    const std::size_t start = k;
    while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k])) && line[k] != '#') ++k;
    out.push_back({line.substr(start, k - start), start + 1});
  }
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, std::size_t column, const std::string& msg) {
  fail(ErrorCode::parse_error, std::to_string(line) + ":" + std::to_string(column) + ": " + msg);
}

std::int64_t parse_int(const Token& t, std::size_t line, std::string_view text) {
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec == std::errc::result_out_of_range) parse_fail(line, t.column, "integer out of range '" + t.text + "'");
  if (ec != std::errc() || ptr != last || text.empty()) parse_fail(line, t.column, "expected an integer, got '" + t.text + "'");
  return v;
}

std::int64_t parse_int(const Token& t, std::size_t line) { return parse_int(t, line, t.text); }

bool valid_name(const std::string& s) {
  static const std::regex re("[A-Za-z0-9_.:-]+");
  return std::regex_match(s, re);
}

}  // namespace

Diagram parse_sd_unchecked(const std::string& text) {
  Diagram g;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  auto node_ref = [&g](const Token& t, std::size_t line) {
    auto id = g.find_node(t.text);
    if (!id) parse_fail(line, t.column, "undeclared node '" + t.text + "'");
    return *id;
  };
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto tok = tokenize(raw);
    if (tok.empty()) continue;
    const std::string& kw = tok[0].text;
    auto want = [&](std::size_t lo, std::size_t hi) {
      if (tok.size() < lo || tok.size() > hi)
        parse_fail(line_no, tok.size() < lo ? raw.size() + 1 : tok[hi].column,
                   "'" + kw + "' expects " + std::to_string(lo - 1) +
                       (lo == hi ? "" : " to " + std::to_string(hi - 1)) + " arguments");
    };
    if (kw == "node") {
      want(2, 4);
      if (tok.size() == 3) parse_fail(line_no, tok[2].column, "cache needs both N= and nu=");
      if (!valid_name(tok[1].text)) parse_fail(line_no, tok[1].column, "invalid node name '" + tok[1].text + "'");
      if (g.find_node(tok[1].text)) parse_fail(line_no, tok[1].column, "duplicate node '" + tok[1].text + "'");
      std::optional<Mult> cache;
      if (tok.size() == 4) {
        if (tok[2].text.rfind("N=", 0) != 0) parse_fail(line_no, tok[2].column, "expected N=<int>");
        if (tok[3].text.rfind("nu=", 0) != 0) parse_fail(line_no, tok[3].column, "expected nu=<int>");
        cache = Mult{parse_int(tok[2], line_no, std::string_view(tok[2].text).substr(2)),
                     parse_int(tok[3], line_no, std::string_view(tok[3].text).substr(3))};
      }
      g.add_node(tok[1].text, cache);
    } else if (kw == "edge") {
      want(5, 5);
      const NodeId a = node_ref(tok[1], line_no), b = node_ref(tok[2], line_no);
      const std::int64_t da = parse_int(tok[3], line_no), db = parse_int(tok[4], line_no);
      if (da < 1) parse_fail(line_no, tok[3].column, "decoration must be >= 1");
      if (db < 1) parse_fail(line_no, tok[4].column, "decoration must be >= 1");
      g.add_edge(a, b, da, db);
    } else if (kw == "arrow") {
      want(5, 5);
      const NodeId a = node_ref(tok[1], line_no);
      const std::int64_t dec = parse_int(tok[2], line_no);
      if (dec < 1) parse_fail(line_no, tok[2].column, "decoration must be >= 1");
      g.add_arrow(a, dec, parse_int(tok[3], line_no), parse_int(tok[4], line_no));
    } else {
      parse_fail(line_no, tok[0].column, "unknown directive '" + kw + "'");
    }
  }
  return g;
}

Diagram parse_sd(const std::string& text) {
  Diagram g = parse_sd_unchecked(text);
  require_valid(g);
  return g;
}

std::string write_sd(const Diagram& g) {
  std::ostringstream out;
  std::vector<std::size_t> order(g.node_count());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&g](std::size_t a, std::size_t b) { return g.nodes()[a].name < g.nodes()[b].name; });
  for (std::size_t k : order) {
    const Node& n = g.nodes()[k];
    out << "node " << n.name;
    if (n.cache) out << " N=" << n.cache->n << " nu=" << n.cache->nu;
    out << '\n';
  }
  std::vector<std::tuple<std::string, std::string, std::int64_t, std::int64_t>> edges;
  for (const Edge& e : g.edges()) {
    std::string a = g.node(e.u).name, b = g.node(e.v).name;
    if (a <= b)
      edges.emplace_back(a, b, e.du, e.dv);
    else
      edges.emplace_back(b, a, e.dv, e.du);
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& [a, b, da, db] : edges) out << "edge " << a << ' ' << b << ' ' << da << ' ' << db << '\n';
  std::vector<std::tuple<std::string, std::int64_t, std::int64_t, std::int64_t>> arrows;
  for (const Arrow& a : g.arrows()) arrows.emplace_back(g.node(a.node).name, a.dec, a.n, a.nu);
  std::sort(arrows.begin(), arrows.end());
  for (const auto& [n, dec, m, nu] : arrows) out << "arrow " << n << ' ' << dec << ' ' << m << ' ' << nu << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Builders

namespace {

void require_branch(std::int64_t n, std::int64_t nu, const char* what) {
  if (n == 0 && nu == 0) fail(ErrorCode::degenerate_branch, std::string(what) + " has (N, nu) = (0, 0)");
  if (n < 0) fail(ErrorCode::degenerate_branch, std::string(what) + " has negative N");
}

}  // namespace

Diagram builder_monomial(std::int64_t m, std::int64_t m2, std::int64_t i, std::int64_t i2) {
  require_branch(m, i, "first branch");
  require_branch(m2, i2, "second branch");
  Diagram g;
  const NodeId v = g.add_node("v");
  g.add_arrow(v, 1, m, i);
  g.add_arrow(v, 1, m2, i2);
  return g;
}

Diagram builder_cusp(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) fail(ErrorCode::degenerate_branch, "form exponents must be >= 0");
  Diagram g;
  const NodeId n1 = g.add_node("n1"), n2 = g.add_node("n2"), n3 = g.add_node("n3");
  g.add_edge(n1, n2, 1, 3);
  g.add_edge(n2, n3, 2, 2);
  g.add_arrow(n2, 1, 1, 1);
  g.add_arrow(n1, 1, 0, a + 1);
  g.add_arrow(n3, 1, 0, b + 1);
  return g;
}

Diagram builder_nv_example2(std::int64_t i1, std::int64_t i2, std::int64_t i3, std::int64_t k) {
  require_branch(0, i1, "branch i1");
  require_branch(0, i2, "branch i2");
  require_branch(0, i3, "branch i3");
  Diagram g;
  const NodeId n1 = g.add_node("n1"), n2 = g.add_node("n2"), n3 = g.add_node("n3"), n4 = g.add_node("n4"),
               n5 = g.add_node("n5");
  g.add_edge(n1, n3, 2, 3);
  g.add_edge(n2, n3, 1, 4);
  g.add_edge(n3, n4, 1, 66);
  g.add_edge(n4, n5, 5, 14);
  g.add_arrow(n1, 1, 0, i1);
  g.add_arrow(n2, 1, 0, i2);
  g.add_arrow(n4, 1, 1, k);
  g.add_arrow(n5, 1, 0, i3);
  return g;
}

Diagram builder_gamma_tilde(std::int64_t d, std::int64_t big, std::int64_t d2, std::int64_t big2, std::int64_t m,
                            std::int64_t m2, std::int64_t i, std::int64_t i2) {
  require_branch(m, i, "right side");
  require_branch(m2, i2, "left side");
  Diagram g;
  const NodeId vl = g.add_node("vL", Mult{d * m2 + big * m, d * i2 + big * i});
  const NodeId vr = g.add_node("vR", Mult{d2 * m + big2 * m2, d2 * i + big2 * i2});
  g.add_edge(vl, vr, d, d2);
  g.add_arrow(vl, big, m2, i2);
  g.add_arrow(vr, big2, m, i);
  return g;
}

std::vector<std::string> bundled_example_names() {
  return {"cusp", "cusp-x2y4", "cusp-x3y3", "cusp-x4y5", "nv2", "monomial-1-1-1-1", "monomial-1-1-2-3"};
}

Diagram builtin_example(const std::string& name) {
  std::smatch m;
  auto num = [&m](std::size_t k) {
    std::int64_t v = 0;
    const std::string s = m[k].str();
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      fail(ErrorCode::invalid_argument, "bad number '" + s + "' in example name");
    return v;
  };
  static const std::regex cusp_re("cusp-x(\\d+)y(\\d+)");
  static const std::regex nv2_re("nv2-(-?\\d+)-(-?\\d+)-(-?\\d+)-(-?\\d+)");
  static const std::regex mono_re("monomial-(\\d+)-(\\d+)-(-?\\d+)-(-?\\d+)");
  if (name == "cusp") return builder_cusp(0, 0);
  if (name == "nv2") return builder_nv_example2(1, 1, 1, 1);
  if (std::regex_match(name, m, cusp_re)) return builder_cusp(num(1), num(2));
  if (std::regex_match(name, m, nv2_re)) return builder_nv_example2(num(1), num(2), num(3), num(4));
  if (std::regex_match(name, m, mono_re)) return builder_monomial(num(1), num(2), num(3), num(4));
  fail(ErrorCode::invalid_argument, "unknown example '" + name + "'");
}

// ---------------------------------------------------------------------------
// Random generator

namespace {

// Node w of cone vector (alpha, beta) between the ends of edge e.
Diagram insert_mediant(const Diagram& g, EdgeId e, const std::string& name) {
  const Edge ed = g.edge(e);
  const Vec2 wu = cone_vector(g, e, ed.u), wv = cone_vector(g, e, ed.v);
  const Vec2 w{wu.x + wv.x, wu.y + wv.y};
  std::vector<bool> edges(g.edge_count(), true);
  edges[idx(e)] = false;
  Diagram out = filtered(g, std::vector<bool>(g.node_count(), true), edges, std::vector<bool>(g.arrow_count(), true));
  const NodeId u = out.require_node(g.node(ed.u).name), v = out.require_node(g.node(ed.v).name);
  const NodeId x = out.add_node(name);
  out.add_edge(u, x, ed.du, w.y);
  out.add_edge(x, v, w.x, ed.dv);
  return out;
}

// Blow-up at the point where arrow a meets its node: the arrow moves to a new node.
Diagram insert_arrow_mediant(const Diagram& g, ArrowId a, const std::string& name) {
  const Arrow ar = g.arrow(a);
  const Vec2 w0 = arrow_cone_vector(g, a);
  std::vector<bool> arrows(g.arrow_count(), true);
  arrows[idx(a)] = false;
  Diagram out = filtered(g, std::vector<bool>(g.node_count(), true), std::vector<bool>(g.edge_count(), true), arrows);
  const NodeId v = out.require_node(g.node(ar.node).name);
  const NodeId x = out.add_node(name);
  out.add_edge(v, x, ar.dec, w0.y + 1);
  out.add_arrow(x, 1, ar.n, ar.nu);
  return out;
}

}  // namespace

Diagram random_diagram(std::uint64_t seed, int n_moves) {
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  Diagram g = builder_monomial(uniform(1, 3), uniform(0, 3), uniform(1, 4), uniform(1, 4));
  int counter = 0;
  for (int move = 0; move < n_moves; ++move) {
    const std::int64_t kind = uniform(0, 9);
    const std::string name = g.fresh_name("r" + std::to_string(++counter));
    if (kind < 4 && g.edge_count() > 0) {
      g = insert_mediant(g, EdgeId{static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(g.edge_count()) - 1))}, name);
    } else if (kind < 8) {
      g = insert_arrow_mediant(g, ArrowId{static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(g.arrow_count()) - 1))}, name);
    } else {
      const NodeId v{static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(g.node_count()) - 1))};
      g.add_arrow(v, 1, uniform(0, 3), uniform(1, 4));
    }
  }
  return g;
}

}  // namespace spliceq

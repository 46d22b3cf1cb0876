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

// Decorated trees with arrowheads: the diagram data model, validation,
// linking numbers, multiplicities and per-edge splice data.

#ifndef SPLICEQ_DIAGRAM_HPP
#define SPLICEQ_DIAGRAM_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace spliceq {

enum class NodeId : std::size_t {};
enum class EdgeId : std::size_t {};
enum class ArrowId : std::size_t {};

constexpr std::size_t idx(NodeId id) { return static_cast<std::size_t>(id); }
constexpr std::size_t idx(EdgeId id) { return static_cast<std::size_t>(id); }
constexpr std::size_t idx(ArrowId id) { return static_cast<std::size_t>(id); }

/// Multiplicity of f (N) and of the form plus one (nu) along a divisor.
struct Mult {
  std::int64_t n = 0;
  std::int64_t nu = 0;
  friend bool operator==(const Mult&, const Mult&) = default;
};

struct Node {
  std::string name;
  std::optional<Mult> cache;
};

struct Edge {
  NodeId u;
  NodeId v;
  std::int64_t du = 1;  // decoration at the u end
  std::int64_t dv = 1;  // decoration at the v end
};

/// A strict-transform branch: f-multiplicity n and form value nu in one
/// record. A pure f-branch is (n, 1), a pure form branch is (0, nu).
struct Arrow {
  NodeId node;
  std::int64_t dec = 1;
  std::int64_t n = 0;
  std::int64_t nu = 1;
};

class Diagram {
 public:
  NodeId add_node(std::string name, std::optional<Mult> cache = std::nullopt);
  EdgeId add_edge(NodeId u, NodeId v, std::int64_t du, std::int64_t dv);
  ArrowId add_arrow(NodeId node, std::int64_t dec, std::int64_t n, std::int64_t nu);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }

  const Node& node(NodeId id) const { return nodes_.at(idx(id)); }
  Node& node(NodeId id) { return nodes_.at(idx(id)); }
  const Edge& edge(EdgeId id) const { return edges_.at(idx(id)); }
  const Arrow& arrow(ArrowId id) const { return arrows_.at(idx(id)); }
  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  std::optional<NodeId> find_node(const std::string& name) const;
  NodeId require_node(const std::string& name) const;
  /// The edge joining the two nodes, in either orientation.
  std::optional<EdgeId> find_edge(NodeId a, NodeId b) const;

  const std::vector<EdgeId>& edges_at(NodeId v) const { return node_edges_.at(idx(v)); }
  const std::vector<ArrowId>& arrows_at(NodeId v) const { return node_arrows_.at(idx(v)); }
  NodeId other_end(EdgeId e, NodeId v) const;
  /// Decoration of edge e at its endpoint v.
  std::int64_t near_decoration(EdgeId e, NodeId v) const;
  /// Product of all decorations at v (edge ends and arrowheads).
  std::int64_t decoration_product(NodeId v) const;
  /// Product of decorations at v other than the one of edge e.
  std::int64_t outer_product(NodeId v, EdgeId e) const;
  std::int64_t edge_determinant(EdgeId e) const;

  /// True when every arrowhead carries decoration 1.
  bool is_standard() const;
  bool has_all_caches() const;
  void clear_caches();

  /// Unused name derived from base.
  std::string fresh_name(const std::string& base) const;

 private:
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<EdgeId>> node_edges_;
  std::vector<std::vector<ArrowId>> node_arrows_;
  std::map<std::string, NodeId> by_name_;
};

/// Copy keeping the flagged items (names and caches preserved). Edges and
/// arrows at dropped nodes are dropped too. Ids are renumbered densely.
Diagram filtered(const Diagram& g, const std::vector<bool>& keep_nodes, const std::vector<bool>& keep_edges,
                 const std::vector<bool>& keep_arrows);

// ---------------------------------------------------------------------------
// Validation

enum class Severity { error, warning };

struct Issue {
  Severity severity = Severity::error;
  std::string kind;     // short machine tag, e.g. "coprimality"
  std::string message;  // human text with the location
};

std::vector<Issue> validate(const Diagram& g);
bool is_valid(const Diagram& g);
/// Throws validation_error listing every error-level issue.
void require_valid(const Diagram& g);

// ---------------------------------------------------------------------------
// Valency, linking numbers, multiplicities

enum class ValencyKind { plain, with_f_arrows, full };
int valency(const Diagram& g, NodeId v, ValencyKind kind);

using Target = std::variant<NodeId, ArrowId>;

/// Product of the decorations adjacent to the path from source to target
/// but not on it. For source == target this is every decoration at source.
std::int64_t linking(const Diagram& g, NodeId source, Target target);
/// Same, with the path starting on edge e; e's own decorations never count.
std::int64_t linking_from_edge(const Diagram& g, EdgeId e, Target target);

using MultTable = std::vector<Mult>;  // indexed by NodeId

/// Linking-number formulas for N and nu. Requires a standard diagram.
MultTable compute_multiplicities(const Diagram& g);
/// Computes, verifies any present caches (cache_mismatch) and writes them.
Diagram with_multiplicities(const Diagram& g);
/// Cached values of every node; throws missing_cache otherwise.
MultTable cached_multiplicities(const Diagram& g);

// ---------------------------------------------------------------------------
// Splice data

struct SideData {
  std::int64_t m = 0;  // f-weight of the side
  std::int64_t i = 0;  // form weight of the side
  friend bool operator==(const SideData&, const SideData&) = default;
};

/// Weights of the two sides of edge e = (u, v): `left` is the u side.
struct SpliceData {
  SideData left;
  SideData right;
  friend bool operator==(const SpliceData&, const SpliceData&) = default;
};

/// Nodes on the endpoint's side after deleting edge e.
std::vector<NodeId> side_nodes(const Diagram& g, EdgeId e, NodeId endpoint);

/// Linking-number formulas. Requires a standard diagram.
SpliceData splice_data(const Diagram& g, EdgeId e);
/// Solves the endpoint relations N = d*M_own + D*M_other from cached values.
SpliceData splice_data_from_caches(const Diagram& g, EdgeId e);

// ---------------------------------------------------------------------------
// Cone vectors

struct Vec2 {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const Vec2&, const Vec2&) = default;
  friend auto operator<=>(const Vec2&, const Vec2&) = default;
};

std::int64_t det(Vec2 a, Vec2 b);

/// (near decoration, outer product) at the u end of e, swapped at the v end,
/// so that det(cone_vector(e, u), cone_vector(e, v)) = q_e.
Vec2 cone_vector(const Diagram& g, EdgeId e, NodeId endpoint);
/// (dec, outer product) of the arrow's node; the arrowhead end is (0, 1).
Vec2 arrow_cone_vector(const Diagram& g, ArrowId a);

}  // namespace spliceq

#endif  // SPLICEQ_DIAGRAM_HPP

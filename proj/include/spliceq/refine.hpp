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


// Smooth cone subdivisions, edge and arrow refinement, reduction and
// comparison of diagrams up to renaming.

#ifndef SPLICEQ_REFINE_HPP
#define SPLICEQ_REFINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spliceq/diagram.hpp"

namespace spliceq {

/// Rays w_0 .. w_(m+1), endpoints included.
struct Subdivision {
  std::vector<Vec2> rays;
  std::size_t interior_count() const { return rays.size() < 2 ? 0 : rays.size() - 2; }
  friend bool operator==(const Subdivision&, const Subdivision&) = default;
};

/// Hirzebruch-Jung chain between u and v. Throws non_primitive_input or
/// negative_determinant (det(u, v) < 1).
Subdivision smooth_subdivide_minimal(Vec2 u, Vec2 v);

/// b_j with w_(j-1) + w_(j+1) = b_j w_j for each interior ray; throws
/// invalid_argument if some b_j is not an integer.
std::vector<std::int64_t> chain_b_values(const Subdivision& s);

/// Empty when s is a smooth chain from u to v with primitive rays and all
/// b_j >= 1 (>= 2 when minimal is set); otherwise a description of the defect.
std::string subdivision_defect(const Subdivision& s, Vec2 u, Vec2 v, bool minimal);

/// Adds the mediant w_gap + w_(gap+1) between two consecutive rays.
Subdivision insert_mediant(const Subdivision& s, std::size_t gap);

/// Cone of an edge from its u end to its v end.
Subdivision edge_cone(const Diagram& g, EdgeId e);
/// Cone of an arrowhead, from (dec, outer product) to (0, 1).
Subdivision arrow_cone(const Diagram& g, ArrowId a);

/// Inserts one node per interior ray (default: minimal chain). Inserted
/// nodes get interpolated caches when both endpoints are cached.
Diagram refine_edge(const Diagram& g, EdgeId e, const std::optional<Subdivision>& sub = std::nullopt);
/// Subdivides an arrowhead cone; the node must be cached (missing_cache).
Diagram refine_arrow(const Diagram& g, ArrowId a, const std::optional<Subdivision>& sub = std::nullopt);

bool is_realizable(const Diagram& g);
/// Minimal refinement of every edge with q > 1 and every decorated arrow,
/// with caches on all nodes, checked against the linking-number formulas.
Diagram realizable_refine(const Diagram& g);

/// Removes arrowless nodes with exactly two node-edges.
Diagram reduce(const Diagram& g);

/// String identifying the diagram up to node renaming and edge orientation.
std::string canonical_form(const Diagram& g, bool with_caches = false);
bool equal_up_to_renaming(const Diagram& a, const Diagram& b, bool with_caches = false);

}  // namespace spliceq

#endif  // SPLICEQ_REFINE_HPP

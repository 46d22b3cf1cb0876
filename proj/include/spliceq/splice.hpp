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


// Splitting a diagram along an edge and checking the splicing identity.

#ifndef SPLICEQ_SPLICE_HPP
#define SPLICEQ_SPLICE_HPP

#include <cstdint>

#include "spliceq/algebra.hpp"
#include "spliceq/diagram.hpp"
#include "spliceq/zeta.hpp"

namespace spliceq {

/// (M, i) collapsed onto the right end, (M', i') onto the left end.
struct SpliceQuad {
  std::int64_t m = 0;
  std::int64_t m2 = 0;
  std::int64_t i = 0;
  std::int64_t i2 = 0;
  friend bool operator==(const SpliceQuad&, const SpliceQuad&) = default;
};

struct SpliceResult {
  Diagram left;   // u side of the edge plus the v endpoint with a new arrow
  Diagram right;  // v side plus the u endpoint with a new arrow
  SpliceQuad data;
};

/// Standard copy of g carrying verified caches: decorated arrows are refined
/// using cached values.
Diagram prepare_standard(const Diagram& g);

/// Throws not_an_edge when the two nodes are not adjacent.
EdgeId require_edge(const Diagram& g, const std::string& a, const std::string& b);

SpliceResult splice(const Diagram& g, EdgeId e);

/// (L-1)^2 T^(M+M') / ((L^i - T^M)(L^i' - T^M')).
ZetaExpr correction_term(const SpliceQuad& q);
/// 1 / ((M s + i)(M' s + i')).
RatFuncS correction_term_top(const SpliceQuad& q);

bool verify_splice_motivic(const Diagram& g, EdgeId e);
bool verify_splice_top(const Diagram& g, EdgeId e);

}  // namespace spliceq

#endif  // SPLICEQ_SPLICE_HPP

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


// Motivic, topological and twisted topological zeta functions of diagrams.

#ifndef SPLICEQ_ZETA_HPP
#define SPLICEQ_ZETA_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "spliceq/algebra.hpp"
#include "spliceq/diagram.hpp"

namespace spliceq {

/// (nu, N) standing for the factor T^N / (L^nu - T^N).
struct ZetaFactor {
  std::int64_t nu = 0;
  std::int64_t n = 0;
  friend auto operator<=>(const ZetaFactor&, const ZetaFactor&) = default;
};

/// Finite sum of c(L) * prod T^N / (L^nu - T^N), keyed by the sorted factor list.
class ZetaExpr {
 public:
  using Key = std::vector<ZetaFactor>;

  /// Adds c * prod over factors; throws degenerate_denominator on (0, 0).
  void add_term(const LaurentPoly& c, Key factors);
  ZetaExpr& operator+=(const ZetaExpr& o);
  ZetaExpr& operator-=(const ZetaExpr& o);
  friend ZetaExpr operator+(ZetaExpr a, const ZetaExpr& b) { return a += b; }
  friend ZetaExpr operator-(ZetaExpr a, const ZetaExpr& b) { return a -= b; }

  const std::map<Key, LaurentPoly>& terms() const { return terms_; }
  /// Exact: sum of terms over a common denominator has zero numerator.
  bool is_zero() const;
  /// Value equality (not structural).
  friend bool operator==(const ZetaExpr& a, const ZetaExpr& b) { return (a - b).is_zero(); }

  /// Numerator and denominator factor multiplicities over a common denominator.
  std::pair<Poly2, std::map<ZetaFactor, int>> cleared() const;

  /// One term per line: "(c) * T^k / ((L^nu - T^N)*...)".
  std::string to_string() const;

 private:
  std::map<Key, LaurentPoly> terms_;
};

/// Terms on an already realizable diagram with caches on every node.
ZetaExpr motivic_zeta_of_realizable(const Diagram& r);
/// Refines minimally first.
ZetaExpr motivic_zeta(const Diagram& g);

RatFuncS top_zeta_of_realizable(const Diagram& r, std::int64_t order = 1);
RatFuncS top_zeta(const Diagram& g);
RatFuncS twisted_top_zeta(const Diagram& g, std::int64_t order);

/// chi_top of Z at T = L^-n, term by term. Throws pole_at_one.
BigRat specialize_chi_top(const ZetaExpr& z, std::int64_t n);

std::vector<Pole> poles(const RatFuncS& r);
/// (nu, N) pairs of nodes and arrowheads with N >= 1 in the minimal realizable refinement.
std::set<ZetaFactor> candidate_poles_motivic(const Diagram& g);

}  // namespace spliceq

#endif  // SPLICEQ_ZETA_HPP

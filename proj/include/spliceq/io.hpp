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


// Line-oriented .sd text format, example builders and a random generator.
//
//   node <id> [N=<int> nu=<int>]
//   edge <id1> <id2> <d1> <d2>
//   arrow <id> <dec> <N> <nu>
//   # comment

#ifndef SPLICEQ_IO_HPP
#define SPLICEQ_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "spliceq/diagram.hpp"

namespace spliceq {

/// Parses and validates; parse_error messages start with "line:column:".
Diagram parse_sd(const std::string& text);
/// Parses without validating.
Diagram parse_sd_unchecked(const std::string& text);
/// Canonical form: nodes sorted by name, edges by endpoint names, arrows by node.
std::string write_sd(const Diagram& g);

/// One node carrying arrowheads (M, i) and (M', i'), both decorated 1.
Diagram builder_monomial(std::int64_t m, std::int64_t m2, std::int64_t i, std::int64_t i2);
/// The cusp y^2 = x^3 with the form x^a y^b dx^dy: nodes n1, n2 (centre), n3.
Diagram builder_cusp(std::int64_t a, std::int64_t b);
/// The diagram of (y^3 - x^4)^5 + x^2 y^15: nodes n1..n5, f-arrow at n4.
Diagram builder_nv_example2(std::int64_t i1, std::int64_t i2, std::int64_t i3, std::int64_t k);
/// Two nodes joined by an edge (d at vl, d2 at vr); vl carries an arrow decorated
/// big with (M', i'), vr one decorated big2 with (M, i). Caches are the toric values.
Diagram builder_gamma_tilde(std::int64_t d, std::int64_t big, std::int64_t d2, std::int64_t big2,
                            std::int64_t m, std::int64_t m2, std::int64_t i, std::int64_t i2);

/// Names accepted by builtin_example, e.g. cusp, cusp-x2y4, nv2, nv2-1-1-1-1, monomial-2-3-1-1.
std::vector<std::string> bundled_example_names();
Diagram builtin_example(const std::string& name);

/// A valid standard diagram obtained from a small monomial diagram by random
/// blow-up moves and arrow attachments.
Diagram random_diagram(std::uint64_t seed, int n_moves);

}  // namespace spliceq

#endif  // SPLICEQ_IO_HPP

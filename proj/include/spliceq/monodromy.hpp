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


// Monodromy zeta function, eigenvalues, the allowed-form star condition and
// the pole/eigenvalue reporter.

#ifndef SPLICEQ_MONODROMY_HPP
#define SPLICEQ_MONODROMY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "spliceq/algebra.hpp"
#include "spliceq/diagram.hpp"

namespace spliceq {

enum class EigenSource { h0, h1 };

struct EigenvalueClass {
  BigRat q;  // in [0, 1), standing for exp(2 pi i q)
  std::int64_t multiplicity = 0;
  EigenSource source = EigenSource::h1;
};

/// prod (t^N_v - 1)^(delta'_v - 2) over nodes of the standard form.
CycloProduct monodromy_zeta(const Diagram& g);
/// t^d - 1 with d the gcd of the f-branch multiplicities.
CycloProduct delta0(const Diagram& g);
/// monodromy_zeta * delta0; throws non_polynomial_delta1 on a negative class.
CycloProduct delta1(const Diagram& g);

/// Classes with positive multiplicity in delta1 (h1) and roots of delta0 (h0),
/// sorted by q then source.
std::vector<EigenvalueClass> eigenvalues(const Diagram& g);
bool is_eigenvalue(const Diagram& g, const BigRat& q);

/// s mod 1 in [0, 1).
BigRat eigen_class(const BigRat& s);

struct StarRecord {
  std::string node;
  int n = 0;  // legs
  int r = 0;  // f-arrowheads at the node
  std::vector<std::pair<std::int64_t, std::int64_t>> legs;  // (d_l, i_l)
  int divisible = 0;
  int equal = 0;
  bool passes = true;
};

struct AllowedReport {
  bool allowed = true;
  bool arrows_ok = true;
  std::vector<StarRecord> stars;
};

AllowedReport is_allowed(const Diagram& g);

struct PoleRecord {
  BigRat pole;
  int multiplicity = 0;
  BigRat eigen_class;
  bool is_eigenvalue = false;
};

struct McSection {
  std::int64_t order = 1;  // 1 is the untwisted topological zeta function
  RatFuncS zeta;
  std::vector<PoleRecord> poles;
  bool all_eigenvalues = true;
};

struct McReport {
  std::vector<McSection> sections;
  AllowedReport allowed;
  std::vector<EigenvalueClass> eigenvalues;
};

/// Divisors in [2, max_order] of the node N-values, ascending.
std::vector<std::int64_t> auto_twist_orders(const Diagram& g, std::int64_t max_order = 1000);
/// Order 1 always comes first; other orders follow in the given order.
McReport mc_report(const Diagram& g, const std::vector<std::int64_t>& twisted_orders);

struct Example2Tuple {
  std::int64_t i1, i2, i3, k;
};

struct Example2Verdict {
  bool target_pole = false;    // some pole of Z^(330) lies in class 1/110
  bool all_eigen_60 = true;    // every pole of Z^(60) induces an eigenvalue
};

Example2Verdict example2_conditions(const Example2Tuple& t);

struct Example2Search {
  std::vector<Example2Tuple> hits_a;      // a pole of Z^(330) in class 1/110
  std::vector<Example2Tuple> hits_both;   // ... and every Z^(60) pole an eigenvalue
  std::size_t examined = 0;
  bool congruence_necessary = true;       // every hit of (a) has 2 i1 + 3 i2 = 3 mod 6
};

struct Example2Box {
  std::int64_t i_lo = 1, i_hi = 6;     // range of i1 and i2
  std::int64_t i3_lo = 1, i3_hi = 10;
  std::int64_t k_lo = 0, k_hi = 9;
};

/// i1, i2 in [1, 6], i3 in [1, 10], k in [0, 9]: all residues of the box
/// {0..5}^2 x {0..9}^2 with the degenerate zero entries shifted by a period.
Example2Box example2_residue_box();
/// i1, i2 in [1, 66], i3 in [1, 5], k in [0, 1]: every residue class the
/// Z^(330) pole class depends on.
Example2Box example2_extended_box();

Example2Search example2_search(const Example2Box& box);

}  // namespace spliceq

#endif  // SPLICEQ_MONODROMY_HPP

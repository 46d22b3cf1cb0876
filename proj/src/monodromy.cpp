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


#include "spliceq/monodromy.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "spliceq/error.hpp"
#include "spliceq/io.hpp"
#include "spliceq/refine.hpp"
#include "spliceq/splice.hpp"
#include "spliceq/zeta.hpp"

namespace spliceq {

namespace {

bool has_f_arrow(const Diagram& g) {
  return std::any_of(g.arrows().begin(), g.arrows().end(), [](const Arrow& a) { return a.n >= 1; });
}

void require_f_arrow(const Diagram& g) {
  if (!has_f_arrow(g)) fail(ErrorCode::no_f_arrow, "diagram has no arrowhead with N >= 1");
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t k = 1; k * k <= n; ++k) {
    if (n % k != 0) continue;
    out.push_back(k);
    if (k != n / k) out.push_back(n / k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Denominators m such that some exponent key is a multiple of m.
std::set<std::int64_t> class_denominators(const CycloProduct& p) {
  std::set<std::int64_t> out;
  for (const auto& [n, e] : p.exponents())
    for (std::int64_t m : divisors(n)) out.insert(m);
  return out;
}

// A class whose exponential is a primitive m-th root of unity.
BigRat primitive_class(std::int64_t m) { return make_rat(m == 1 ? 0 : 1, m); }

std::int64_t gcd_of_f_arrows(const Diagram& g) {
  std::int64_t d = 0;
  for (const Arrow& a : g.arrows())
    if (a.n >= 1) d = gcd64(d, a.n);
  return d;
}

}  // namespace

CycloProduct monodromy_zeta(const Diagram& g) {
  require_f_arrow(g);
  const Diagram s = prepare_standard(g);
  CycloProduct out;
  for (std::size_t k = 0; k < s.node_count(); ++k) {
    const NodeId v{k};
    const std::int64_t n = s.node(v).cache->n;
    if (n < 1) fail(ErrorCode::invalid_argument, "node '" + s.node(v).name + "' has N = 0");
    out.add(n, valency(s, v, ValencyKind::with_f_arrows) - 2);
  }
  return out;
}

CycloProduct delta0(const Diagram& g) {
  require_f_arrow(g);
  CycloProduct out;
  out.add(gcd_of_f_arrows(g), 1);
  return out;
}

CycloProduct delta1(const Diagram& g) {
  CycloProduct out = monodromy_zeta(g) + delta0(g);
  for (std::int64_t m : class_denominators(out)) {
    const std::int64_t mult = cyclo_multiplicity(out, primitive_class(m));
    if (mult < 0)
      fail(ErrorCode::non_polynomial_delta1,
           "delta1 has multiplicity " + std::to_string(mult) + " at primitive " + std::to_string(m) + "-th roots");
  }
  return out;
}

BigRat eigen_class(const BigRat& s) {
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
  BigRat out = s - BigRat(fl);
  out.canonicalize();
  return out;
}

std::vector<EigenvalueClass> eigenvalues(const Diagram& g) {
  const CycloProduct d1 = delta1(g);
  std::vector<EigenvalueClass> out;
  for (std::int64_t m : class_denominators(d1)) {
    const std::int64_t mult = cyclo_multiplicity(d1, primitive_class(m));
    if (mult <= 0) continue;
    for (std::int64_t k = 0; k < m; ++k)
      if (gcd64(k, m) == 1) out.push_back({make_rat(k, m), mult, EigenSource::h1});
  }
  const std::int64_t d = gcd_of_f_arrows(g);
  for (std::int64_t k = 0; k < d; ++k) out.push_back({make_rat(k, d), 1, EigenSource::h0});
  std::sort(out.begin(), out.end(), [](const EigenvalueClass& a, const EigenvalueClass& b) {
    if (a.q != b.q) return a.q < b.q;
    return a.source < b.source;
  });
  return out;
}

namespace {

bool is_eigen_class(const CycloProduct& d1, std::int64_t d, const BigRat& q) {
  const BigRat c = eigen_class(q);
  if (cyclo_multiplicity(d1, c) > 0) return true;
  return BigInt(d) % c.get_den() == 0;
}

}  // namespace

bool is_eigenvalue(const Diagram& g, const BigRat& q) {
  return is_eigen_class(delta1(g), gcd_of_f_arrows(g), q);
}

AllowedReport is_allowed(const Diagram& g) {
  AllowedReport rep;
  for (const Arrow& a : g.arrows())
    if (a.n == 0 && a.nu == 0) rep.arrows_ok = false;
  if (!rep.arrows_ok) {
    rep.allowed = false;
    return rep;
  }
  const Diagram red = reduce(prepare_standard(g));
  for (std::size_t k = 0; k < red.node_count(); ++k) {
    const NodeId v{k};
    StarRecord st;
    st.node = red.node(v).name;
    for (EdgeId e : red.edges_at(v)) {
      const SpliceData sd = splice_data(red, e);
      const SideData& far = red.edge(e).u == v ? sd.right : sd.left;
      st.legs.emplace_back(red.near_decoration(e, v), far.i);
    }
    for (ArrowId a : red.arrows_at(v))
      if (red.arrow(a).n >= 1) ++st.r;
    st.n = static_cast<int>(st.legs.size());
    for (const auto& [d, i] : st.legs) {
      if (i % d == 0) ++st.divisible;
      if (i == d) ++st.equal;
    }
    const int threshold = st.n + st.r - 2;
    st.passes = st.divisible < threshold || st.equal >= threshold;
    if (!st.passes) rep.allowed = false;
    rep.stars.push_back(std::move(st));
  }
  return rep;
}

std::vector<std::int64_t> auto_twist_orders(const Diagram& g, std::int64_t max_order) {
  const Diagram s = prepare_standard(g);
  std::set<std::int64_t> out;
  for (const Node& n : s.nodes())
    for (std::int64_t m : divisors(n.cache->n))
      if (m > 1 && m <= max_order) out.insert(m);
  return {out.begin(), out.end()};
}

McReport mc_report(const Diagram& g, const std::vector<std::int64_t>& twisted_orders) {
  McReport rep;
  const CycloProduct d1 = delta1(g);
  const std::int64_t d = gcd_of_f_arrows(g);
  rep.eigenvalues = eigenvalues(g);
  rep.allowed = is_allowed(g);
  const Diagram r = realizable_refine(g);
  std::vector<std::int64_t> orders{1};
  for (std::int64_t e : twisted_orders) {
    if (e < 1) fail(ErrorCode::invalid_argument, "twist order must be positive");
    if (e != 1) orders.push_back(e);
  }
  for (std::int64_t e : orders) {
    McSection sec;
    sec.order = e;
    sec.zeta = top_zeta_of_realizable(r, e);
    for (const Pole& p : sec.zeta.poles()) {
      PoleRecord pr{p.value, p.multiplicity, eigen_class(p.value), false};
      pr.is_eigenvalue = is_eigen_class(d1, d, pr.eigen_class);
      if (!pr.is_eigenvalue) sec.all_eigenvalues = false;
      sec.poles.push_back(std::move(pr));
    }
    rep.sections.push_back(std::move(sec));
  }
  return rep;
}

Example2Verdict example2_conditions(const Example2Tuple& t) {
  const Diagram g = builder_nv_example2(t.i1, t.i2, t.i3, t.k);
  const Diagram r = realizable_refine(g);
  const CycloProduct d1 = delta1(g);
  const std::int64_t d = gcd_of_f_arrows(g);
  const BigRat target = make_rat(1, 110);
  Example2Verdict v;
  for (const Pole& p : top_zeta_of_realizable(r, 330).poles())
    if (eigen_class(p.value) == target) v.target_pole = true;
  for (const Pole& p : top_zeta_of_realizable(r, 60).poles())
    if (!is_eigen_class(d1, d, p.value)) v.all_eigen_60 = false;
  return v;
}

Example2Box example2_residue_box() { return {}; }

Example2Box example2_extended_box() { return {1, 66, 1, 5, 0, 1}; }

Example2Search example2_search(const Example2Box& box) {
  Example2Search out;
  for (std::int64_t i1 = box.i_lo; i1 <= box.i_hi; ++i1)
    for (std::int64_t i2 = box.i_lo; i2 <= box.i_hi; ++i2)
      for (std::int64_t i3 = box.i3_lo; i3 <= box.i3_hi; ++i3)
        for (std::int64_t k = box.k_lo; k <= box.k_hi; ++k) {
          const Example2Tuple t{i1, i2, i3, k};
          const Example2Verdict v = example2_conditions(t);
          ++out.examined;
          if (!v.target_pole) continue;
          out.hits_a.push_back(t);
          if (((2 * i1 + 3 * i2) % 6 + 6) % 6 != 3) out.congruence_necessary = false;
          if (v.all_eigen_60) out.hits_both.push_back(t);
        }
  return out;
}

}  // namespace spliceq

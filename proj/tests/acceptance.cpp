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


// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "oracles.hpp"
#include "spliceq/error.hpp"
#include "spliceq/io.hpp"
#include "spliceq/monodromy.hpp"
#include "spliceq/refine.hpp"
#include "spliceq/splice.hpp"
#include "spliceq/zeta.hpp"

using namespace spliceq;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Checker {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (!cond && out_.ok) {
      out_.ok = false;
      out_.detail = what;
    }
  }
  Outcome finish(const std::string& summary) {
    if (out_.ok) out_.detail = summary + " (" + std::to_string(checks_) + " checks)";
    return out_;
  }

 private:
  Outcome out_;
  int checks_ = 0;
};

BigRat rat(long a, long b) { return make_rat(a, b); }

LaurentPoly l_minus_one_squared() {
  return LaurentPoly::monomial(1, 2) - LaurentPoly::monomial(2, 1) + LaurentPoly(BigInt(1));
}

bool all_trivial_form(const Diagram& g) {
  for (const Arrow& a : g.arrows())
    if (a.nu != 1) return false;
  return true;
}

Outcome criterion1() {
  Checker c;
  const Diagram g = builder_nv_example2(1, 1, 1, 1);
  const CycloProduct expected(std::map<std::int64_t, std::int64_t>{{330, 1}, {60, 1}, {66, -1}, {15, -1}, {20, -1}});
  c.expect(monodromy_zeta(g) == expected, "zeta = " + monodromy_zeta(g).to_string());
  c.expect(is_eigenvalue(g, rat(1, 110)), "1/110 is not an eigenvalue");
  return c.finish("zeta = " + expected.to_string() + ", 1/110 is an eigenvalue");
}

Outcome criterion2() {
  Checker c;
  const Diagram a = builder_cusp(2, 4), b = builder_cusp(3, 3);
  const RatFuncS za = twisted_top_zeta(a, 6), zb = twisted_top_zeta(b, 6);
  c.expect(za == RatFuncS::term(-1, {{6, 21}}), "Z^(6)(x2y4) = " + za.to_string());
  const auto pa = za.poles();
  c.expect(pa.size() == 1 && pa[0].value == rat(-7, 2), "pole of Z^(6)(x2y4)");
  c.expect(eigen_class(rat(-7, 2)) == rat(1, 2), "class of -7/2");
  c.expect(!is_eigenvalue(a, rat(1, 2)), "1/2 is an eigenvalue of the cusp");
  const McReport rep = mc_report(a, {6});
  c.expect(rep.sections.size() == 2 && !rep.sections[1].all_eigenvalues, "mc_report flags the pole");
  c.expect(is_allowed(a).allowed, "x2y4 not allowed");
  c.expect(zb == RatFuncS::term(-1, {{6, 20}}), "Z^(6)(x3y3) = " + zb.to_string());
  c.expect(!is_allowed(b).allowed, "x3y3 allowed");
  return c.finish("x2y4: -1/(6s+21), pole -7/2 in class 1/2 not an eigenvalue, allowed; x3y3: -1/(6s+20), not allowed");
}

Outcome criterion3() {
  Checker c;
  int fixed = 0;
  for (const Diagram& g : {builder_cusp(2, 4), builder_cusp(3, 3), builder_cusp(0, 0), builder_nv_example2(1, 1, 1, 1)}) {
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
      const EdgeId e{k};
      const std::string name = g.node(g.edge(e).u).name + "-" + g.node(g.edge(e).v).name;
      c.expect(verify_splice_motivic(g, e), "motivic splice fails on " + name);
      c.expect(verify_splice_top(g, e), "top splice fails on " + name);
      ++fixed;
    }
  }
  std::mt19937 rng(20260101);
  int random_done = 0;
  for (std::uint64_t seed = 1; random_done < 200; ++seed) {
    const Diagram g = random_diagram(seed, 3 + static_cast<int>(seed % 4));
    if (g.edge_count() == 0) continue;
    const EdgeId e{std::uniform_int_distribution<std::size_t>(0, g.edge_count() - 1)(rng)};
    c.expect(verify_splice_motivic(g, e), "motivic splice fails, seed " + std::to_string(seed));
    c.expect(verify_splice_top(g, e), "top splice fails, seed " + std::to_string(seed));
    ++random_done;
  }
  return c.finish(std::to_string(fixed) + " example edges and " + std::to_string(random_done) +
                  " random diagrams x 1 edge");
}

Outcome criterion4() {
  Checker c;
  const Diagram g = builder_cusp(0, 0);
  const RatFuncS z = top_zeta(g);
  // partial fractions 10/(6s+5) - 1/(s+1) of the resolution sum
  const RatFuncS expected = RatFuncS::term(10, {{6, 5}}) - RatFuncS::term(1, {{1, 1}});
  c.expect(z == expected, "Z_top = " + z.to_string());
  c.expect(z.to_string() == "(4*s + 5) / ((1*s + 1)*(6*s + 5))", "rendering " + z.to_string());
  const auto p = z.poles();
  c.expect(p.size() == 2 && p[0].value == rat(-1, 1) && p[1].value == rat(-5, 6), "poles");
  for (const auto& pole : p) c.expect(is_eigenvalue(g, eigen_class(pole.value)), "pole class not an eigenvalue");
  return c.finish("(4s+5)/((s+1)(6s+5)), poles -1, -5/6 with classes 0, 1/6 both eigenvalues");
}

Outcome criterion5() {
  Checker c;
  const Diagram g = with_multiplicities(builder_cusp(4, 5));
  const auto oracle_values = oracle::cusp_blowup_oracle(4, 5);
  const std::vector<std::pair<std::string, Mult>> expected{{"n1", {2, 11}}, {"n2", {6, 28}}, {"n3", {3, 17}}};
  std::vector<std::pair<std::int64_t, std::int64_t>> frozen;
  for (const auto& [name, m] : expected) {
    const Mult got = *g.node(g.require_node(name)).cache;
    c.expect(got == m, name + " has (" + std::to_string(got.n) + "," + std::to_string(got.nu) + ")");
    frozen.emplace_back(m.n, m.nu);
  }
  std::sort(frozen.begin(), frozen.end());
  auto oracle_sorted = oracle_values;
  std::sort(oracle_sorted.begin(), oracle_sorted.end());
  c.expect(oracle_sorted == frozen, "chart oracle disagrees");
  return c.finish("(2,11), (6,28), (3,17) from linking numbers and from the chart oracle");
}

Outcome criterion6() {
  Checker c;
  for (std::int64_t m = 1; m <= 6; ++m)
    for (std::int64_t m2 = 1; m2 <= 6; ++m2)
      for (std::int64_t i = 1; i <= 6; ++i)
        for (std::int64_t i2 = 1; i2 <= 6; ++i2) {
          const Diagram g = builder_monomial(m, m2, i, i2);
          ZetaExpr expected;
          expected.add_term(l_minus_one_squared(), {{i, m}, {i2, m2}});
          const std::string tag = std::to_string(m) + "," + std::to_string(m2) + "," + std::to_string(i) + "," +
                                  std::to_string(i2);
          c.expect(motivic_zeta(g) == expected, "motivic mismatch at " + tag);
          c.expect(top_zeta(g) == RatFuncS::term(1, {{m, i}, {m2, i2}}), "top mismatch at " + tag);
        }
  return c.finish("all 1296 monomial diagrams");
}

Outcome criterion7() {
  Checker c;
  std::vector<std::pair<std::string, Diagram>> diagrams;
  for (const auto& name : bundled_example_names()) diagrams.emplace_back(name, builtin_example(name));
  for (std::uint64_t seed = 1; seed <= 100; ++seed)
    diagrams.emplace_back("random seed " + std::to_string(seed), random_diagram(seed, 2 + static_cast<int>(seed % 5)));
  for (const auto& [name, g] : diagrams) {
    const ZetaExpr z = motivic_zeta(g);
    const RatFuncS t = top_zeta(g);
    for (std::int64_t n = 1; n <= 3; ++n)
      c.expect(specialize_chi_top(z, n) == t.eval(n), name + " at n = " + std::to_string(n));
  }
  return c.finish(std::to_string(bundled_example_names().size()) + " bundled and 100 generated diagrams, n = 1, 2, 3");
}

Outcome criterion8() {
  Checker c;
  std::mt19937 rng(8);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Diagram g = random_diagram(1000 + seed, 2 + static_cast<int>(seed % 5));
    const std::string tag = "seed " + std::to_string(1000 + seed);
    const ZetaExpr zm = motivic_zeta(g);
    const RatFuncS zt = top_zeta(g);
    const CycloProduct mz = monodromy_zeta(g);
    const Diagram red = reduce(g);
    std::vector<std::int64_t> orders{2, 3};
    const Diagram std_g = with_multiplicities(g);
    orders.push_back(std_g.node(NodeId{0}).cache->n);
    std::vector<RatFuncS> tw;
    for (std::int64_t e : orders) tw.push_back(twisted_top_zeta(g, e));
    for (int rep = 0; rep < 3; ++rep) {
      // edges and arrow cones subdivided, then edges only
      for (bool arrows : {true, false}) {
        const Diagram r = testing_helpers::random_realizable_refinement(g, rng, 1 + rep, arrows);
        const std::string what = tag + (arrows ? " (edges and arrows)" : " (edges)");
        c.expect(is_realizable(r), what + ": refinement not realizable");
        c.expect(motivic_zeta_of_realizable(r) == zm, what + ": motivic changed");
        c.expect(top_zeta_of_realizable(r, 1) == zt, what + ": top changed");
        for (std::size_t k = 0; k < orders.size(); ++k)
          c.expect(top_zeta_of_realizable(r, orders[k]) == tw[k], what + ": twisted changed");
        c.expect(monodromy_zeta(r) == mz, what + ": monodromy zeta changed");
        if (!arrows) c.expect(equal_up_to_renaming(reduce(r), red), what + ": reduce(refine) != reduce");
      }
      c.expect(equal_up_to_renaming(reduce(realizable_refine(g)), red), tag + ": reduce(realizable_refine) != reduce");
    }
  }
  return c.finish("100 generated diagrams x 3 non-minimal subdivisions of edges and arrow cones, reduce identity on edge subdivisions");
}

Outcome criterion9() {
  Checker c;
  const Example2Search box = example2_search(example2_residue_box());
  c.expect(box.examined == 3600, "box size");
  c.expect(box.hits_both.empty(), "a tuple meets both conditions in the box");
  c.expect(box.congruence_necessary, "congruence violated in the box");
  const Example2Search wide = example2_search(example2_extended_box());
  c.expect(!wide.hits_a.empty(), "condition (a) never holds");
  c.expect(wide.hits_both.empty(), "a tuple meets both conditions in the extended box");
  c.expect(wide.congruence_necessary, "congruence violated on an (a) tuple");
  return c.finish("residue box: " + std::to_string(box.examined) + " tuples, " + std::to_string(box.hits_a.size()) +
                  " with (a), none with (a) and (b); all residues: " + std::to_string(wide.examined) + " tuples, " +
                  std::to_string(wide.hits_a.size()) + " with (a), all with 2 i1 + 3 i2 = 3 mod 6, none with (b)");
}

Outcome criterion10() {
  Checker c;
  int used = 0;
  for (const auto& name : bundled_example_names()) {
    const Diagram g = builtin_example(name);
    if (!all_trivial_form(g)) continue;
    ++used;
    c.expect(is_allowed(g).allowed, name + ": dx^dy not allowed");
    c.expect(mc_report(g, {}).sections.at(0).all_eigenvalues, name + ": a Z_top pole induces no eigenvalue");
  }
  c.expect(used >= 3, "too few bundled diagrams with trivial form");
  return c.finish(std::to_string(used) + " bundled diagrams with trivial form");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"nv2 monodromy zeta", criterion1},   {"twisted counterexample", criterion2},
      {"splicing identity", criterion3},          {"classical cusp", criterion4},
      {"multiplicity oracle", criterion5},       {"monomial identity", criterion6},
      {"avatar identity", criterion7},           {"refinement invariance", criterion8},
      {"nv2 impossibility search", criterion9}, {"allowed baseline", criterion10},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << k + 1 << " (" << criteria[k].first << "): " << o.detail
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}

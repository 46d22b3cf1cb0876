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


#include "doctest.h"
#include "oracles.hpp"
#include "spliceq/diagram.hpp"
#include "spliceq/error.hpp"
#include "spliceq/io.hpp"

using namespace spliceq;

namespace {

ArrowId f_arrow(const Diagram& g) {
  for (std::size_t k = 0; k < g.arrow_count(); ++k)
    if (g.arrows()[k].n >= 1) return ArrowId{k};
  FAIL("no f-arrow");
  return ArrowId{0};
}

bool has_kind(const std::vector<Issue>& issues, const std::string& kind) {
  for (const auto& i : issues)
    if (i.kind == kind && i.severity == Severity::error) return true;
  return false;
}

Mult mult_of(const Diagram& g, const MultTable& t, const char* name) { return t[idx(g.require_node(name))]; }

}  // namespace

TEST_CASE("validation of example diagrams") {
  CHECK(is_valid(builder_cusp(4, 5)));
  CHECK(is_valid(builder_cusp(0, 0)));
  CHECK(is_valid(builder_monomial(2, 3, 1, 1)));
  CHECK(is_valid(builder_nv_example2(1, 1, 1, 1)));

  Diagram bad;
  const NodeId a = bad.add_node("a"), b = bad.add_node("b");
  bad.add_edge(a, b, 2, 2);
  bad.add_arrow(a, 4, 1, 1);
  bad.add_arrow(b, 1, 0, 1);
  CHECK(has_kind(validate(bad), "coprimality"));

  Diagram cyc;
  const NodeId x = cyc.add_node("x"), y = cyc.add_node("y");
  cyc.add_edge(x, y, 1, 1);
  cyc.add_edge(x, y, 1, 1);
  CHECK(has_kind(validate(cyc), "tree"));

  Diagram split;
  split.add_node("p");
  split.add_node("q");
  CHECK(has_kind(validate(split), "tree"));
  CHECK(has_kind(validate(Diagram()), "empty"));

  Diagram zero;
  zero.add_arrow(zero.add_node("z"), 1, 0, 0);
  CHECK(has_kind(validate(zero), "arrow"));

  Diagram neg;  // q = 1*1 - 2*3 < 1
  const NodeId c = neg.add_node("c"), d = neg.add_node("d");
  neg.add_edge(c, d, 1, 1);
  neg.add_arrow(c, 2, 1, 1);
  neg.add_arrow(d, 3, 1, 1);
  CHECK(has_kind(validate(neg), "determinant"));
  CHECK_THROWS_AS(require_valid(neg), Error);

  Diagram warn;
  warn.add_arrow(warn.add_node("w"), 1, 1, 0);
  CHECK(is_valid(warn));
  CHECK(validate(warn).size() == 1);
}

TEST_CASE("valencies") {
  const Diagram cusp = builder_cusp(0, 0);
  const NodeId centre = cusp.require_node("n2"), leaf = cusp.require_node("n3");
  CHECK(valency(cusp, centre, ValencyKind::plain) == 2);
  CHECK(valency(cusp, centre, ValencyKind::with_f_arrows) == 3);
  CHECK(valency(cusp, centre, ValencyKind::full) == 3);
  CHECK(valency(cusp, leaf, ValencyKind::plain) == 1);
  CHECK(valency(cusp, leaf, ValencyKind::with_f_arrows) == 1);
  CHECK(valency(cusp, leaf, ValencyKind::full) == 2);
  const Diagram nv = builder_nv_example2(1, 1, 1, 1);
  CHECK(valency(nv, nv.require_node("n4"), ValencyKind::with_f_arrows) == 3);
}

TEST_CASE("linking numbers") {
  const Diagram cusp = builder_cusp(0, 0);
  CHECK(linking(cusp, cusp.require_node("n2"), f_arrow(cusp)) == 6);
  const Diagram mono = builder_monomial(1, 1, 1, 1);
  CHECK(linking(mono, NodeId{0}, NodeId{0}) == 1);
  const Diagram nv = builder_nv_example2(1, 1, 1, 1);
  CHECK(linking(nv, nv.require_node("n4"), f_arrow(nv)) == 330);
  CHECK(linking(nv, nv.require_node("n4"), nv.require_node("n4")) == 330);

  const EdgeId cusp_e = *cusp.find_edge(cusp.require_node("n2"), cusp.require_node("n3"));
  CHECK(linking_from_edge(cusp, cusp_e, f_arrow(cusp)) == 3);
  const EdgeId nv_e = *nv.find_edge(nv.require_node("n3"), nv.require_node("n4"));
  CHECK(linking_from_edge(nv, nv_e, f_arrow(nv)) == 5);
  // arrowhead at the far end with no siblings
  const EdgeId leaf_e = *cusp.find_edge(cusp.require_node("n1"), cusp.require_node("n2"));
  CHECK(linking_from_edge(cusp, leaf_e, ArrowId{1}) == 1);
}

TEST_CASE("linking numbers are symmetric") {
  std::vector<Diagram> ds{builder_cusp(4, 5), builder_nv_example2(2, 3, 4, 5)};
  for (std::uint64_t seed = 1; seed <= 40; ++seed) ds.push_back(random_diagram(seed, 12));
  for (const Diagram& g : ds)
    for (std::size_t a = 0; a < g.node_count(); ++a)
      for (std::size_t b = 0; b < g.node_count(); ++b)
        CHECK(linking(g, NodeId{a}, NodeId{b}) == linking(g, NodeId{b}, NodeId{a}));
}

TEST_CASE("multiplicities match the three blow-up chart oracle") {
  for (std::int64_t a = 0; a <= 5; ++a)
    for (std::int64_t b = 0; b <= 5; ++b) {
      const Diagram g = builder_cusp(a, b);
      const MultTable t = compute_multiplicities(g);
      const auto oracle_values = oracle::cusp_blowup_oracle(a, b);
      const char* names[] = {"n1", "n3", "n2"};  // E1, E2, E3
      for (int k = 0; k < 3; ++k) {
        CHECK(mult_of(g, t, names[k]).n == oracle_values[k].first);
        CHECK(mult_of(g, t, names[k]).nu == oracle_values[k].second);
      }
    }
  const Diagram g = builder_cusp(4, 5);
  const MultTable t = compute_multiplicities(g);
  CHECK(mult_of(g, t, "n1") == Mult{2, 11});
  CHECK(mult_of(g, t, "n2") == Mult{6, 28});
  CHECK(mult_of(g, t, "n3") == Mult{3, 17});
}

TEST_CASE("multiplicities of the monomial and the nv2 diagram") {
  for (std::int64_t m = 0; m <= 3; ++m)
    for (std::int64_t i = 1; i <= 3; ++i) {
      const Diagram g = builder_monomial(m, 2, i, 5);
      CHECK(compute_multiplicities(g)[0] == Mult{m + 2, i + 5});
    }
  const Diagram nv = builder_nv_example2(1, 1, 1, 1);
  const MultTable t = compute_multiplicities(nv);
  CHECK(mult_of(nv, t, "n1").n == 20);
  CHECK(mult_of(nv, t, "n2").n == 15);
  CHECK(mult_of(nv, t, "n3").n == 60);
  CHECK(mult_of(nv, t, "n4").n == 330);
  CHECK(mult_of(nv, t, "n5").n == 66);
  CHECK(mult_of(nv, t, "n3").nu == 7);
  CHECK(mult_of(nv, t, "n4").nu == 41);
}

TEST_CASE("multiplicity caches") {
  Diagram g = with_multiplicities(builder_cusp(0, 0));
  CHECK(g.has_all_caches());
  CHECK(cached_multiplicities(g) == compute_multiplicities(g));
  g.node(g.require_node("n2")).cache = Mult{6, 6};
  CHECK_THROWS_AS((void)with_multiplicities(g), Error);
  CHECK_THROWS_AS((void)cached_multiplicities(builder_cusp(0, 0)), Error);
  const Diagram dec = builder_gamma_tilde(2, 3, 5, 3, 2, 3, 1, 1);
  try {
    compute_multiplicities(dec);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::decorated_arrow_present);
  }
}

TEST_CASE("splice data of the nv2 edge") {
  for (std::int64_t i1 = 1; i1 <= 3; ++i1)
    for (std::int64_t i2 = 1; i2 <= 3; ++i2)
      for (std::int64_t i3 = 1; i3 <= 2; ++i3)
        for (std::int64_t k = 0; k <= 2; ++k) {
          const Diagram g = with_multiplicities(builder_nv_example2(i1, i2, i3, k));
          const EdgeId e = *g.find_edge(g.require_node("n3"), g.require_node("n4"));
          const SpliceData s = splice_data(g, e);
          CHECK(s.right == SideData{5, i3 + 5 * k - 5});
          CHECK(s.left == SideData{0, 4 * i1 + 3 * i2 - 12});
          CHECK(splice_data_from_caches(g, e) == s);
        }
  const Diagram g = builder_nv_example2(1, 1, 1, 1);
  const EdgeId e = *g.find_edge(g.require_node("n3"), g.require_node("n4"));
  CHECK(splice_data(g, e).right == SideData{5, 1});
  CHECK(splice_data(g, e).left == SideData{0, -5});
}

TEST_CASE("splice data of a cusp leaf") {
  const Diagram g = builder_cusp(0, 0);
  const EdgeId e = *g.find_edge(g.require_node("n2"), g.require_node("n3"));
  CHECK(splice_data(g, e).right == SideData{0, 1});
}

TEST_CASE("cone vectors") {
  const Diagram nv = builder_nv_example2(1, 1, 1, 1);
  const NodeId n3 = nv.require_node("n3"), n4 = nv.require_node("n4");
  const EdgeId e = *nv.find_edge(n3, n4);
  CHECK(cone_vector(nv, e, n3) == Vec2{1, 12});
  CHECK(cone_vector(nv, e, n4) == Vec2{5, 66});
  CHECK(det(cone_vector(nv, e, n3), cone_vector(nv, e, n4)) == 6);
  CHECK(nv.edge_determinant(e) == 6);

  const Diagram cusp = builder_cusp(0, 0);
  const EdgeId ce = *cusp.find_edge(cusp.require_node("n1"), cusp.require_node("n2"));
  CHECK(cone_vector(cusp, ce, cusp.require_node("n1")) == Vec2{1, 1});
  CHECK(cone_vector(cusp, ce, cusp.require_node("n2")) == Vec2{2, 3});
  CHECK(cusp.edge_determinant(ce) == 1);

  const Diagram gt = builder_gamma_tilde(2, 3, 5, 3, 2, 3, 1, 1);
  CHECK(det(arrow_cone_vector(gt, ArrowId{0}), Vec2{0, 1}) == 3);
}

TEST_CASE("endpoint decomposition of multiplicities on every edge") {
  std::vector<Diagram> ds{builder_cusp(4, 5), builder_cusp(0, 0), builder_nv_example2(1, 1, 1, 1),
                          builder_nv_example2(3, 2, 7, 4)};
  for (std::uint64_t seed = 100; seed < 300; ++seed) ds.push_back(random_diagram(seed, 10));
  for (const Diagram& g : ds) {
    const MultTable t = compute_multiplicities(g);
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
      const EdgeId e{k};
      const Edge& ed = g.edge(e);
      const SpliceData s = splice_data(g, e);
      const Vec2 wu = cone_vector(g, e, ed.u), wv = cone_vector(g, e, ed.v);
      CHECK(det(wu, wv) == g.edge_determinant(e));
      // (alpha, beta) with alpha the near decoration
      CHECK(t[idx(ed.u)].n == wu.x * s.left.m + wu.y * s.right.m);
      CHECK(t[idx(ed.u)].nu == wu.x * s.left.i + wu.y * s.right.i);
      CHECK(t[idx(ed.v)].n == wv.y * s.right.m + wv.x * s.left.m);
      CHECK(t[idx(ed.v)].nu == wv.y * s.right.i + wv.x * s.left.i);
    }
  }
}

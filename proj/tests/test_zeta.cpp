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


#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "spliceq/error.hpp"
#include "spliceq/io.hpp"
#include "spliceq/refine.hpp"
#include "spliceq/zeta.hpp"

using namespace spliceq;

namespace {

LaurentPoly L(std::int64_t k = 1) { return LaurentPoly::monomial(1, k); }
LaurentPoly one() { return LaurentPoly(BigInt(1)); }

// Denef-Loeser sum for the minimal resolution of y^2 = x^3 with trivial form:
// E1 (N, nu) = (2, 2), E2 = (3, 3), E3 = (6, 5) meeting E1, E2 and the strict
// transform (1, 1).
BigRat cusp_oracle(std::int64_t s) {
  auto f = [s](std::int64_t n, std::int64_t nu) -> BigRat { return BigRat(1) / BigRat(n * s + nu); };
  return f(2, 2) + f(3, 3) - f(6, 5) + f(2, 2) * f(6, 5) + f(3, 3) * f(6, 5) + f(6, 5) * f(1, 1);
}

ZetaExpr monomial_expected(std::int64_t m, std::int64_t m2, std::int64_t i, std::int64_t i2) {
  ZetaExpr z;
  z.add_term((L() - one()) * (L() - one()), {{i, m}, {i2, m2}});
  return z;
}

ZetaExpr random_expr(std::mt19937& rng) {
  std::uniform_int_distribution<int> nu_d(-2, 5), n_d(0, 4), len(1, 3), cnt(1, 4), cf(-3, 3), ex(0, 2);
  ZetaExpr z;
  for (int t = cnt(rng); t > 0; --t) {
    ZetaExpr::Key key;
    for (int k = len(rng); k > 0; --k) {
      ZetaFactor f{nu_d(rng), n_d(rng)};
      if (f.nu == 0 && f.n == 0) f.n = 1;
      key.push_back(f);
    }
    z.add_term(LaurentPoly::monomial(BigInt(cf(rng)), ex(rng)), key);
  }
  return z;
}

}  // namespace

TEST_CASE("monomial diagram zeta functions") {
  for (std::int64_t m = 1; m <= 3; ++m)
    for (std::int64_t m2 = 1; m2 <= 3; ++m2)
      for (std::int64_t i = 1; i <= 3; ++i)
        for (std::int64_t i2 = 1; i2 <= 3; ++i2) {
          const Diagram g = builder_monomial(m, m2, i, i2);
          CHECK(motivic_zeta(g) == monomial_expected(m, m2, i, i2));
          CHECK(top_zeta(g) == RatFuncS::term(1, {{m, i}, {m2, i2}}));
        }
  CHECK(motivic_zeta(builder_monomial(1, 1, 1, 1)) != monomial_expected(1, 1, 1, 2));
}

TEST_CASE("cusp topological zeta function") {
  const RatFuncS z = top_zeta(builder_cusp(0, 0));
  CHECK(z.to_string() == "(4*s + 5) / ((1*s + 1)*(6*s + 5))");
  for (std::int64_t s = 0; s <= 8; ++s) CHECK(z.eval(s) == cusp_oracle(s));
  const auto p = poles(z);
  REQUIRE(p.size() == 2);
  CHECK(p[0].value == BigRat(-1));
  CHECK(p[1].value == BigRat(-5, 6));
  CHECK(p[0].multiplicity == 1);
}

TEST_CASE("twisted topological zeta functions") {
  CHECK(twisted_top_zeta(builder_cusp(0, 0), 1) == top_zeta(builder_cusp(0, 0)));
  CHECK(twisted_top_zeta(builder_cusp(0, 0), 2).to_string() == "2 / (6*s + 5)");
  const RatFuncS x2y4 = twisted_top_zeta(builder_cusp(2, 4), 6);
  CHECK(x2y4.to_string() == "-1 / (6*s + 21)");
  REQUIRE(poles(x2y4).size() == 1);
  CHECK(poles(x2y4)[0].value == BigRat(-7, 2));
  CHECK(twisted_top_zeta(builder_cusp(3, 3), 6).to_string() == "-1 / (6*s + 20)");
  CHECK_THROWS_AS(twisted_top_zeta(builder_cusp(0, 0), 0), Error);
  CHECK(poles(RatFuncS::constant(3)).empty());
}

TEST_CASE("chi_top specialisation") {
  CHECK(specialize_chi_top(motivic_zeta(builder_cusp(0, 0)), 1) == BigRat(9, 22));
  CHECK(specialize_chi_top(motivic_zeta(builder_monomial(1, 1, 1, 1)), 2) == BigRat(1, 9));
  ZetaExpr bad;
  bad.add_term(one(), {{-2, 1}});
  try {
    specialize_chi_top(bad, 2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::pole_at_one);
  }
  CHECK_THROWS_AS(bad.add_term(one(), {{0, 0}}), Error);
}

TEST_CASE("avatar identity on examples and generated diagrams") {
  std::vector<Diagram> ds;
  for (const auto& name : bundled_example_names()) ds.push_back(builtin_example(name));
  for (std::uint64_t seed = 1; seed <= 25; ++seed) ds.push_back(random_diagram(seed, 12));
  for (const Diagram& g : ds) {
    const ZetaExpr z = motivic_zeta(g);
    const RatFuncS t = top_zeta(g);
    for (std::int64_t n = 1; n <= 3; ++n) CHECK(specialize_chi_top(z, n) == t.eval(n));
  }
}

TEST_CASE("candidate poles") {
  CHECK(candidate_poles_motivic(builder_cusp(0, 0)) == std::set<ZetaFactor>{{2, 2}, {3, 3}, {5, 6}, {1, 1}});
  CHECK(candidate_poles_motivic(builder_monomial(2, 3, 1, 1)) == std::set<ZetaFactor>{{1, 2}, {1, 3}, {2, 5}});
}

TEST_CASE("zeta expression equality") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const ZetaExpr a = random_expr(rng);
    // c * key equals c * (L^k - 1) * (key + (k, 0))
    ZetaExpr b;
    for (const auto& [key, c] : a.terms()) {
      const std::int64_t k = 1 + trial % 3;
      ZetaExpr::Key longer = key;
      longer.push_back({k, 0});
      b.add_term(c * LaurentPoly::power_minus_one(k), longer);
    }
    CHECK(a == b);
    CHECK(b == a);
    CHECK((a - b).cleared().first.is_zero());
    ZetaExpr c = b;
    c.add_term(one(), {{1, 1}});
    CHECK(a != c);
    CHECK_FALSE((a - c).cleared().first.is_zero());
    const ZetaExpr d = random_expr(rng);
    CHECK((a == d) == (b == d));
  }
  ZetaExpr z;
  CHECK(z.is_zero());
  CHECK(z.to_string() == "0");
  z.add_term((L() - one()) * (L() - one()), {{1, 1}, {1, 1}});
  CHECK(z.to_string() == "(L^2 - 2*L + 1) * T^2 / ((L - T)*(L - T))\n");
}

TEST_CASE("zeta functions do not depend on the chosen smooth refinement") {
  std::mt19937 rng(29);
  std::vector<Diagram> ds{builder_cusp(4, 5), builder_nv_example2(1, 1, 1, 1), builder_nv_example2(2, 3, 4, 2)};
  for (std::uint64_t seed = 1; seed <= 15; ++seed) ds.push_back(reduce(random_diagram(seed, 14)));
  for (const Diagram& g : ds) {
    const Diagram minimal = realizable_refine(g);
    const ZetaExpr z = motivic_zeta_of_realizable(minimal);
    for (int rep = 0; rep < 2; ++rep) {
      const Diagram other = testing_helpers::random_realizable_refinement(g, rng, 2);
      REQUIRE(is_realizable(other));
      CHECK(compute_multiplicities(other) == cached_multiplicities(other));
      CHECK(motivic_zeta_of_realizable(other) == z);
      for (std::int64_t e : {1, 2, 3, 6})
        CHECK(top_zeta_of_realizable(other, e) == top_zeta_of_realizable(minimal, e));
    }
  }
}

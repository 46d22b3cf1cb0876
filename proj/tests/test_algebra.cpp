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
#include "oracles.hpp"
#include "spliceq/algebra.hpp"
#include "spliceq/error.hpp"

using namespace spliceq;

namespace {

LaurentPoly lp(std::initializer_list<long> coeffs, std::int64_t low = 0) {
  LaurentPoly p;
  std::int64_t e = low;
  for (long c : coeffs) p += LaurentPoly::monomial(BigInt(c), e++);
  return p;
}

Poly2 random_poly2(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5), lexp(-3, 4), texp(0, 4), count(0, 5);
  Poly2 p;
  for (int k = count(rng); k > 0; --k) p += Poly2::monomial(BigInt(coeff(rng)), lexp(rng), texp(rng));
  return p;
}

}  // namespace

TEST_CASE("eval at one cancels common factors of L - 1") {
  const LaurentPoly l_minus_1 = lp({-1, 1});
  const LaurentPoly l2_minus_1 = lp({-1, 0, 1});
  CHECK(eval_at_one_with_cancellation(l2_minus_1, l_minus_1) == BigRat(2));
  CHECK(eval_at_one_with_cancellation(l_minus_1, l2_minus_1) == BigRat(1, 2));
  CHECK(eval_at_one_with_cancellation(l_minus_1 * l_minus_1, l_minus_1) == BigRat(0));
  CHECK_THROWS_AS(eval_at_one_with_cancellation(lp({1}), l_minus_1), Error);
  try {
    eval_at_one_with_cancellation(lp({1}), l_minus_1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::pole_at_one);
  }
}

TEST_CASE("Laurent polynomials with negative exponents") {
  const LaurentPoly p = lp({1, 0, -2}, -2);  // L^-2 - 2
  CHECK(p.low() == -2);
  CHECK(p.high() == 0);
  CHECK(p.coeff(-2) == 1);
  CHECK(p.coeff(-1) == 0);
  CHECK(p.eval_at_one() == -1);
  CHECK(p * LaurentPoly::monomial(1, 2) == lp({1, 0, -2}));
  CHECK((p - p).is_zero());
  CHECK(LaurentPoly::power_minus_one(3).divide_by_l_minus_one() == lp({1, 1, 1}));
  CHECK(lp({1, -2, 1}).to_string() == "L^2 - 2*L + 1");
}

TEST_CASE("Poly2 ring laws on random inputs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly2 a = random_poly2(rng), b = random_poly2(rng), c = random_poly2(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a + b) - b == a);
  }
}

TEST_CASE("Poly2 exact division by L^nu - T^n") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> nu_d(-3, 4), n_d(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly2 a = random_poly2(rng);
    int nu = nu_d(rng), n = n_d(rng);
    if (nu == 0 && n == 0) n = 1;
    const Poly2 f = Poly2::zeta_factor(nu, n);
    Poly2 q;
    REQUIRE(f.to_string().size() > 0);
    CHECK((a * f).divide_by_zeta_factor(nu, n, q));
    CHECK(q == a);
  }
  Poly2 q;
  CHECK_FALSE(Poly2::monomial(1, 0, 1).divide_by_zeta_factor(1, 1, q));
  CHECK_THROWS_AS((void)Poly2().divide_by_zeta_factor(0, 0, q), Error);
  CHECK(Poly2::zeta_factor(2, 3).to_string() == "-T^3 + L^2");
}

TEST_CASE("RatFuncS canonical rendering") {
  RatFuncS cusp = RatFuncS::term(BigRat(1, 2), {{1, 1}}) + RatFuncS::term(BigRat(1, 3), {{6, 5}});
  // Partial fractions of (4s+5)/((s+1)(6s+5)), residues by hand: -1/(s+1) + 10/(6s+5).
  RatFuncS expected = RatFuncS::term(10, {{6, 5}}) - RatFuncS::term(1, {{1, 1}});
  CHECK(expected.to_string() == "(4*s + 5) / ((1*s + 1)*(6*s + 5))");
  CHECK(RatFuncS::term(-1, {{6, 21}}).to_string() == "-1 / (6*s + 21)");
  CHECK(RatFuncS::term(2, {{6, 5}}).to_string() == "2 / (6*s + 5)");
  CHECK(RatFuncS::constant(0).to_string() == "0");
  CHECK(RatFuncS::constant(BigRat(3, 4)).to_string() == "3 / 4");
  CHECK(cusp != expected);
  CHECK(RatFuncS::term(1, {{2, 2}}) == RatFuncS::term(BigRat(1, 2), {{1, 1}}));
}

TEST_CASE("RatFuncS poles and evaluation") {
  const RatFuncS r = RatFuncS::term(10, {{6, 5}}) - RatFuncS::term(1, {{1, 1}});
  const auto poles = r.poles();
  REQUIRE(poles.size() == 2);
  CHECK(poles[0].value == BigRat(-1));
  CHECK(poles[1].value == BigRat(-5, 6));
  CHECK(r.eval(1) == BigRat(9, 22));
  CHECK(RatFuncS::constant(5).poles().empty());
  CHECK_THROWS_AS((void)r.eval(-1), Error);
  // cancellation: (s+1)/((s+1)(s+2)) = 1/(s+2)
  RatFuncS c = RatFuncS::term(1, {{1, 2}}) + RatFuncS::term(0, {{1, 1}});
  CHECK(c.poles().size() == 1);
  CHECK_THROWS_AS((void)RatFuncS::term(1, {{0, 0}}), Error);
}

TEST_CASE("RatFuncS sums agree with pointwise rational arithmetic") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> n_d(0, 6), nu_d(-4, 9), len(1, 3), cnt(1, 6), cf(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::pair<BigRat, std::vector<LinearFactor>>> terms;
    for (int t = cnt(rng); t > 0; --t) {
      std::vector<LinearFactor> fs;
      for (int k = len(rng); k > 0; --k) {
        LinearFactor f{n_d(rng), nu_d(rng)};
        if (f.n == 0 && f.nu == 0) f.nu = 1;
        fs.push_back(f);
      }
      terms.push_back({BigRat(cf(rng)), fs});
    }
    RatFuncS sum;
    for (const auto& [c, fs] : terms) sum += RatFuncS::term(c, fs);
    // idempotence of re-expansion
    RatFuncS again = sum + RatFuncS();
    again += sum;
    again -= sum;
    CHECK(again == sum);
    CHECK((sum - sum).is_zero());
    for (std::int64_t s = 10; s < 14; ++s) {
      BigRat direct = 0;
      for (const auto& [c, fs] : terms) {
        BigRat v = c;
        for (const auto& f : fs) v /= BigRat(f.n * s + f.nu);
        direct += v;
      }
      CHECK(sum.eval(s) == direct);
    }
    // canonical: numerator content coprime to scale, factors primitive
    BigInt content = 0;
    for (const auto& c : sum.numerator()) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (!sum.is_zero()) {
      BigInt g;
      mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), sum.scale().get_mpz_t());
      CHECK(g == 1);
    }
    for (const auto& [f, m] : sum.factors()) {
      CHECK(f.n >= 1);
      CHECK(gcd64(f.n, f.nu) == 1);
      CHECK(m >= 1);
    }
  }
}

TEST_CASE("cyclotomic multiplicity examples") {
  const CycloProduct z({{6, 1}, {2, -1}, {3, -1}});
  CHECK(cyclo_multiplicity(z, BigRat(1, 6)) == 1);
  CHECK(cyclo_multiplicity(z, BigRat(1, 2)) == 0);
  CycloProduct d1 = z;
  d1.add(1, 1);
  CHECK(cyclo_multiplicity(d1, BigRat(0)) == 0);
  CHECK(d1.exponents().size() == 4);
  d1.add(1, -1);
  CHECK(d1 == z);
  CHECK(z.to_string() == "(t^6 - 1) / ((t^2 - 1)*(t^3 - 1))");
  CHECK(CycloProduct().to_string() == "1");
}

TEST_CASE("cyclotomic multiplicity agrees with brute-force expansion") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> n_d(1, 30), e_d(1, 2), cnt(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::map<std::int64_t, std::int64_t> exps;
    for (int k = cnt(rng); k > 0; --k) exps[n_d(rng)] += e_d(rng);
    const CycloProduct p(exps);
    const auto expanded = oracle::expand_cyclo_product(exps);
    for (std::int64_t den = 1; den <= 30; ++den)
      for (std::int64_t num = 0; num < den; ++num) {
        if (gcd64(num, den) != 1) continue;
        CHECK(cyclo_multiplicity(p, BigRat(num, den)) == oracle::vanishing_order_at_root(expanded, den));
      }
  }
}

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

// Exact arithmetic substrate: big integers and rationals (GMP), Laurent
// polynomials in L, sparse polynomials in (L, T), rational functions in s
// with factored linear denominators, and cyclotomic products.

#ifndef SPLICEQ_ALGEBRA_HPP
#define SPLICEQ_ALGEBRA_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace spliceq {

using BigInt = mpz_class;
/// Always kept canonical (reduced, positive denominator).
using BigRat = mpq_class;

std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t gcd64(std::int64_t a, std::int64_t b);

BigRat make_rat(const BigInt& num, const BigInt& den);
std::string to_string(const BigRat& q);

// ---------------------------------------------------------------------------
// LaurentPoly: integer Laurent polynomial in L, dense with an exponent offset.

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(BigInt constant);
  /// coeff * L^exp
  static LaurentPoly monomial(BigInt coeff, std::int64_t exp);
  /// L^exp - 1
  static LaurentPoly power_minus_one(std::int64_t exp);

  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t low() const { return low_; }
  std::int64_t high() const { return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
  /// Coefficient of L^exp (zero outside the stored range).
  BigInt coeff(std::int64_t exp) const;
  BigInt eval_at_one() const;
  /// Exact division by (L - 1); the caller guarantees eval_at_one() == 0.
  LaurentPoly divide_by_l_minus_one() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Human form in the variable L, e.g. "L^2 - 2*L + 1".
  std::string to_string() const;

 private:
  void trim();
  std::int64_t low_ = 0;
  std::vector<BigInt> coeffs_;  // coeffs_[k] multiplies L^(low_ + k)
};

/// Divides num and den by (L - 1) while both vanish at 1, then returns
/// num(1)/den(1). Throws pole_at_one when only the denominator vanishes.
BigRat eval_at_one_with_cancellation(LaurentPoly num, LaurentPoly den);

// ---------------------------------------------------------------------------
// Poly2: sparse integer polynomial in L (Laurent) and T (T-exponents >= 0).

struct Monomial2 {
  std::int64_t l = 0;
  std::int64_t t = 0;
  friend auto operator<=>(const Monomial2&, const Monomial2&) = default;
};

class Poly2 {
 public:
  using Terms = std::map<Monomial2, BigInt>;

  Poly2() = default;
  static Poly2 monomial(BigInt coeff, std::int64_t l_exp, std::int64_t t_exp);
  /// L^nu - T^n
  static Poly2 zeta_factor(std::int64_t nu, std::int64_t n);
  /// Lifts c(L) * T^t_exp.
  static Poly2 from_laurent(const LaurentPoly& c, std::int64_t t_exp);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

  /// Exact quotient by (L^nu - T^n) when it divides, else false.
  bool divide_by_zeta_factor(std::int64_t nu, std::int64_t n, Poly2& quotient) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial2& m, const BigInt& c);
  Terms terms_;  // lexicographic on (L-exp, T-exp), no zero coefficients
};

// ---------------------------------------------------------------------------
// RatFuncS: rational function in s with linear-factor denominators.
//
// Canonical form: num(s) / (scale * prod (N s + nu)^m) with
//   * every factor primitive, N >= 1,
//   * num an integer polynomial whose content is coprime to scale >= 1,
//   * num not vanishing at any -nu/N of a retained factor.
// The representation is unique, so structural equality is value equality.

struct LinearFactor {
  std::int64_t n = 0;   // coefficient of s
  std::int64_t nu = 0;  // constant term
  friend auto operator<=>(const LinearFactor&, const LinearFactor&) = default;
};

struct Pole {
  BigRat value;
  int multiplicity = 0;
};

class RatFuncS {
 public:
  RatFuncS() = default;
  static RatFuncS constant(const BigRat& c);
  /// c / prod (n_i s + nu_i); throws degenerate_denominator on (0,0).
  static RatFuncS term(const BigRat& c, const std::vector<LinearFactor>& factors);

  bool is_zero() const { return num_.empty(); }
  const std::vector<BigInt>& numerator() const { return num_; }
  const BigInt& scale() const { return scale_; }
  const std::map<LinearFactor, int>& factors() const { return den_; }

  RatFuncS& operator+=(const RatFuncS& o);
  RatFuncS& operator-=(const RatFuncS& o);
  friend RatFuncS operator+(RatFuncS a, const RatFuncS& b) { return a += b; }
  friend RatFuncS operator-(RatFuncS a, const RatFuncS& b) { return a -= b; }
  RatFuncS operator-() const;
  friend bool operator==(const RatFuncS&, const RatFuncS&) = default;

  /// Value at an integer point; throws pole_at_one if a factor vanishes there.
  BigRat eval(std::int64_t s) const;
  /// Surviving poles -nu/N in ascending order.
  std::vector<Pole> poles() const;

  /// e.g. "(4*s + 5) / ((1*s + 1)*(6*s + 5))"
  std::string to_string() const;

 private:
  static RatFuncS from_parts(std::vector<BigRat> num, std::map<LinearFactor, int> den);
  std::vector<BigInt> num_;  // num_[k] multiplies s^k
  BigInt scale_ = 1;
  std::map<LinearFactor, int> den_;
};

// ---------------------------------------------------------------------------
// CycloProduct: n -> e_n standing for prod (t^n - 1)^(e_n).

class CycloProduct {
 public:
  CycloProduct() = default;
  explicit CycloProduct(const std::map<std::int64_t, std::int64_t>& exps);

  void add(std::int64_t n, std::int64_t e);
  CycloProduct& operator+=(const CycloProduct& o);
  friend CycloProduct operator+(CycloProduct a, const CycloProduct& b) { return a += b; }
  friend bool operator==(const CycloProduct&, const CycloProduct&) = default;

  const std::map<std::int64_t, std::int64_t>& exponents() const { return exps_; }
  bool empty() const { return exps_.empty(); }
  /// e.g. "(t^6 - 1) / ((t^2 - 1)*(t^3 - 1))"
  std::string to_string() const;

 private:
  std::map<std::int64_t, std::int64_t> exps_;
};

/// Order of vanishing of the product at exp(2 pi i q), q in [0, 1) reduced.
std::int64_t cyclo_multiplicity(const CycloProduct& p, const BigRat& q);

}  // namespace spliceq

#endif  // SPLICEQ_ALGEBRA_HPP

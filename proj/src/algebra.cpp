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

#include "spliceq/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "spliceq/error.hpp"

namespace spliceq {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::pole_at_one: return "PoleAtOne";
    case ErrorCode::decorated_arrow_present: return "DecoratedArrowPresent";
    case ErrorCode::cache_mismatch: return "CacheMismatch";
    case ErrorCode::non_primitive_input: return "NonPrimitiveInput";
    case ErrorCode::negative_determinant: return "NegativeDeterminant";
    case ErrorCode::non_integral_interpolation: return "NonIntegralInterpolation";
    case ErrorCode::missing_cache: return "MissingCache";
    case ErrorCode::degenerate_denominator: return "DegenerateDenominator";
    case ErrorCode::not_an_edge: return "NotAnEdge";
    case ErrorCode::no_f_arrow: return "NoFArrow";
    case ErrorCode::non_polynomial_delta1: return "NonPolynomialDelta1";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::validation_error: return "ValidationError";
    case ErrorCode::degenerate_branch: return "DegenerateBranch";
    case ErrorCode::overflow: return "Overflow";
  }
  return "Unknown";
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::overflow, "integer overflow in multiplication");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::overflow, "integer overflow in addition");
  return r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

BigRat make_rat(const BigInt& num, const BigInt& den) {
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigRat& q) { return q.get_str(); }

namespace {

std::string signed_join(const std::vector<std::pair<BigInt, std::string>>& parts) {
  // parts: (coefficient, rendered monomial without coefficient or "")
  std::ostringstream out;
  bool first = true;
  for (const auto& [c, mono] : parts) {
    BigInt a = abs(c);
    std::string body = a.get_str();
    if (!mono.empty()) body = a == 1 ? mono : body + "*" + mono;
    if (first) {
      out << (sgn(c) < 0 ? "-" : "") << body;
      first = false;
    } else {
      out << (sgn(c) < 0 ? " - " : " + ") << body;
    }
  }
  return first ? "0" : out.str();
}

std::string power(const char* var, std::int64_t e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(BigInt constant) : low_(0) {
  coeffs_.push_back(std::move(constant));
  trim();
}

LaurentPoly LaurentPoly::monomial(BigInt coeff, std::int64_t exp) {
  LaurentPoly p;
  p.low_ = exp;
  p.coeffs_.push_back(std::move(coeff));
  p.trim();
  return p;
}

LaurentPoly LaurentPoly::power_minus_one(std::int64_t exp) {
  return monomial(1, exp) - LaurentPoly(1);
}

BigInt LaurentPoly::coeff(std::int64_t exp) const {
  if (coeffs_.empty() || exp < low_ || exp > high()) return 0;
  return coeffs_[static_cast<std::size_t>(exp - low_)];
}

BigInt LaurentPoly::eval_at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

LaurentPoly LaurentPoly::divide_by_l_minus_one() const {
  if (coeffs_.empty()) return {};
  // (L - 1) * sum q_j L^(low+j) has coefficient q_(j-1) - q_j at L^(low+j).
  LaurentPoly q;
  q.low_ = low_;
  q.coeffs_.resize(coeffs_.size() - 1);
  BigInt prev = 0;
  for (std::size_t j = 0; j + 1 < coeffs_.size(); ++j) {
    q.coeffs_[j] = prev - coeffs_[j];
    prev = q.coeffs_[j];
  }
  q.trim();
  return q;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const std::int64_t lo = std::min(low_, o.low_);
  const std::int64_t hi = std::max(high(), o.high());
  std::vector<BigInt> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[static_cast<std::size_t>(low_ - lo) + k] += coeffs_[k];
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) out[static_cast<std::size_t>(o.low_ - lo) + k] += o.coeffs_[k];
  low_ = lo;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPoly r;
  r.low_ = checked_add(a.low_, b.low_);
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

void LaurentPoly::trim() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  while (coeffs_.back() == 0) coeffs_.pop_back();
  if (first > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    low_ += static_cast<std::int64_t>(first);
  }
}

std::string LaurentPoly::to_string() const {
  std::vector<std::pair<BigInt, std::string>> parts;
  for (std::int64_t e = high(); !coeffs_.empty() && e >= low_; --e) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(e - low_)];
    if (c != 0) parts.emplace_back(c, power("L", e));
  }
  return signed_join(parts);
}

BigRat eval_at_one_with_cancellation(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) fail(ErrorCode::invalid_argument, "denominator is identically zero");
  if (num.is_zero()) return 0;
  while (num.eval_at_one() == 0 && den.eval_at_one() == 0) {
    num = num.divide_by_l_minus_one();
    den = den.divide_by_l_minus_one();
  }
  const BigInt d = den.eval_at_one();
  if (d == 0) fail(ErrorCode::pole_at_one, "denominator vanishes at L = 1 after cancellation");
  return make_rat(num.eval_at_one(), d);
}

// ---------------------------------------------------------------------------
// Poly2

void Poly2::add_term(const Monomial2& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly2 Poly2::monomial(BigInt coeff, std::int64_t l_exp, std::int64_t t_exp) {
  if (t_exp < 0) fail(ErrorCode::invalid_argument, "negative T exponent");
  Poly2 p;
  p.add_term({l_exp, t_exp}, coeff);
  return p;
}

Poly2 Poly2::zeta_factor(std::int64_t nu, std::int64_t n) {
  return monomial(1, nu, 0) - monomial(1, 0, n);
}

Poly2 Poly2::from_laurent(const LaurentPoly& c, std::int64_t t_exp) {
  Poly2 p;
  for (std::int64_t e = c.low(); !c.is_zero() && e <= c.high(); ++e) p.add_term({e, t_exp}, c.coeff(e));
  return p;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      r.add_term({checked_add(ma.l, mb.l), checked_add(ma.t, mb.t)}, ca * cb);
  return r;
}

namespace {

// Exact division of a Laurent polynomial by (L^k - 1), k > 0.
bool divide_by_power_minus_one(const LaurentPoly& p, std::int64_t k, LaurentPoly& q) {
  q = LaurentPoly();
  if (p.is_zero()) return true;
  const std::int64_t lo = p.low();
  const std::int64_t hi = p.high();
  if (hi - lo < k) return false;
  // p_j = q_(j-k) - q_j, indices relative to lo.
  const std::int64_t qlen = hi - lo - k + 1;
  std::vector<BigInt> qc(static_cast<std::size_t>(qlen));
  for (std::int64_t j = 0; j < qlen; ++j) {
    BigInt prev = j >= k ? qc[static_cast<std::size_t>(j - k)] : BigInt(0);
    qc[static_cast<std::size_t>(j)] = prev - p.coeff(lo + j);
  }
  for (std::int64_t j = 0; j < qlen; ++j) q += LaurentPoly::monomial(qc[static_cast<std::size_t>(j)], lo + j);
  return q * LaurentPoly::power_minus_one(k) == p;
}

}  // namespace

bool Poly2::divide_by_zeta_factor(std::int64_t nu, std::int64_t n, Poly2& quotient) const {
  if (n == 0 && nu == 0) fail(ErrorCode::degenerate_denominator, "factor L^0 - T^0 is zero");
  std::map<std::int64_t, LaurentPoly> rows;
  for (const auto& [m, c] : terms_) rows[m.t] += LaurentPoly::monomial(c, m.l);

  quotient = Poly2();
  if (n == 0) {
    // L^nu - 1, constant in T.
    const std::int64_t k = nu > 0 ? nu : -nu;
    for (const auto& [t, row] : rows) {
      LaurentPoly q;
      if (!divide_by_power_minus_one(row, k, q)) return false;
      // L^nu - 1 = -L^nu (L^-nu - 1) when nu < 0
      if (nu < 0) q = -(q * LaurentPoly::monomial(1, k));
      quotient += from_laurent(q, t);
    }
    return true;
  }

  // Long division by (T^n - L^nu) in T, then negate.
  std::map<std::int64_t, LaurentPoly> quot;
  const LaurentPoly shift = LaurentPoly::monomial(1, nu);
  while (!rows.empty()) {
    auto top = std::prev(rows.end());
    if (top->second.is_zero()) {
      rows.erase(top);
      continue;
    }
    if (top->first < n) return false;
    const std::int64_t t = top->first;
    LaurentPoly c = std::move(top->second);
    rows.erase(top);
    rows[t - n] += c * shift;
    quot[t - n] += c;
  }
  for (const auto& [t, c] : quot) quotient -= from_laurent(c, t);
  return true;
}

std::string Poly2::to_string() const {
  std::vector<std::pair<BigInt, std::string>> parts;
  for (const auto& [m, c] : terms_) {
    std::string mono = power("L", m.l);
    const std::string tp = power("T", m.t);
    if (!tp.empty()) mono = mono.empty() ? tp : mono + "*" + tp;
    parts.emplace_back(c, mono);
  }
  return signed_join(parts);
}

// ---------------------------------------------------------------------------
// RatFuncS

namespace {

using QPoly = std::vector<BigRat>;

void qtrim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qmul_linear(const QPoly& p, const LinearFactor& f) {
  if (p.empty()) return {};
  QPoly r(p.size() + 1, BigRat(0));
  for (std::size_t k = 0; k < p.size(); ++k) {
    r[k] += p[k] * BigRat(f.nu);
    r[k + 1] += p[k] * BigRat(f.n);
  }
  qtrim(r);
  return r;
}

BigRat qeval(const QPoly& p, const BigRat& x) {
  BigRat acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// p / (n s + nu), assuming exact divisibility.
QPoly qdiv_linear(const QPoly& p, const LinearFactor& f) {
  const std::size_t d = p.size() - 1;
  QPoly b(d, BigRat(0));
  BigRat carry = p[d];
  for (std::size_t k = d; k-- > 0;) {
    b[k] = carry / BigRat(f.n);
    carry = p[k] - BigRat(f.nu) * b[k];
  }
  return b;
}

}  // namespace

RatFuncS RatFuncS::constant(const BigRat& c) { return from_parts({c}, {}); }

RatFuncS RatFuncS::term(const BigRat& c, const std::vector<LinearFactor>& factors) {
  BigRat coeff = c;
  std::map<LinearFactor, int> den;
  for (LinearFactor f : factors) {
    if (f.n == 0 && f.nu == 0) fail(ErrorCode::degenerate_denominator, "linear factor 0*s + 0");
    if (f.n == 0) {
      coeff /= BigRat(f.nu);
      continue;
    }
    if (f.n < 0) {
      f = {-f.n, -f.nu};
      coeff = -coeff;
    }
    const std::int64_t g = gcd64(f.n, f.nu);
    coeff /= BigRat(g);
    ++den[{f.n / g, f.nu / g}];
  }
  return from_parts({coeff}, std::move(den));
}

RatFuncS RatFuncS::from_parts(std::vector<BigRat> num, std::map<LinearFactor, int> den) {
  qtrim(num);
  RatFuncS r;
  if (num.empty()) return r;
  for (auto it = den.begin(); it != den.end();) {
    const BigRat root = make_rat(-it->first.nu, it->first.n);
    while (it->second > 0 && num.size() > 1 && qeval(num, root) == 0) {
      num = qdiv_linear(num, it->first);
      --it->second;
    }
    it = it->second == 0 ? den.erase(it) : std::next(it);
  }
  BigInt lcm_den = 1;
  for (const auto& c : num) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> ints;
  BigInt g = 0;
  for (const auto& c : num) {
    BigInt v = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (sgn(ints.back()) < 0) g = -g;
  const BigRat content = make_rat(g, lcm_den);
  r.num_.reserve(ints.size());
  for (const auto& v : ints) r.num_.push_back(BigInt(v / g) * content.get_num());
  r.scale_ = content.get_den();
  r.den_ = std::move(den);
  return r;
}

RatFuncS RatFuncS::operator-() const {
  RatFuncS r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

RatFuncS& RatFuncS::operator+=(const RatFuncS& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  std::map<LinearFactor, int> den = den_;
  for (const auto& [f, m] : o.den_) den[f] = std::max(den[f], m);
  auto lift = [&den](const RatFuncS& x) {
    QPoly p;
    for (const auto& c : x.num_) p.push_back(make_rat(c, x.scale_));
    for (const auto& [f, m] : den) {
      auto it = x.den_.find(f);
      const int have = it == x.den_.end() ? 0 : it->second;
      for (int k = have; k < m; ++k) p = qmul_linear(p, f);
    }
    return p;
  };
  QPoly a = lift(*this);
  QPoly b = lift(o);
  if (a.size() < b.size()) a.resize(b.size(), BigRat(0));
  for (std::size_t k = 0; k < b.size(); ++k) a[k] += b[k];
  return *this = from_parts(std::move(a), std::move(den));
}

RatFuncS& RatFuncS::operator-=(const RatFuncS& o) { return *this += -o; }

BigRat RatFuncS::eval(std::int64_t s) const {
  BigRat num = 0;
  for (auto it = num_.rbegin(); it != num_.rend(); ++it) num = num * s + *it;
  BigInt den = scale_;
  for (const auto& [f, m] : den_) {
    const BigInt v = BigInt(f.n) * s + f.nu;
    if (v == 0) fail(ErrorCode::pole_at_one, "evaluation at a pole s = " + std::to_string(s));
    for (int k = 0; k < m; ++k) den *= v;
  }
  return num / BigRat(den);
}

std::vector<Pole> RatFuncS::poles() const {
  std::vector<Pole> out;
  for (const auto& [f, m] : den_) out.push_back({make_rat(-f.nu, f.n), m});
  std::sort(out.begin(), out.end(), [](const Pole& a, const Pole& b) { return a.value < b.value; });
  return out;
}

namespace {

std::string render_linear(const BigInt& n, const BigInt& nu) {
  std::string s = "(" + n.get_str() + "*s";
  if (nu > 0) s += " + " + nu.get_str();
  if (nu < 0) s += " - " + BigInt(-nu).get_str();
  return s + ")";
}

}  // namespace

std::string RatFuncS::to_string() const {
  std::vector<std::pair<BigInt, std::string>> parts;
  for (std::size_t k = num_.size(); k-- > 0;)
    if (num_[k] != 0) parts.emplace_back(num_[k], power("s", static_cast<std::int64_t>(k)));
  std::string num = signed_join(parts);
  if (parts.size() > 1) num = "(" + num + ")";

  std::vector<std::string> pieces;
  bool scaled = scale_ == 1;
  for (const auto& [f, m] : den_) {
    int rest = m;
    if (!scaled) {
      pieces.push_back(render_linear(scale_ * f.n, scale_ * f.nu));
      scaled = true;
      --rest;
    }
    if (rest == 1) pieces.push_back(render_linear(f.n, f.nu));
    if (rest > 1) pieces.push_back(render_linear(f.n, f.nu) + "^" + std::to_string(rest));
  }
  if (!scaled) pieces.push_back(scale_.get_str());
  if (pieces.empty()) return num;
  std::string den;
  for (std::size_t k = 0; k < pieces.size(); ++k) den += (k ? "*" : "") + pieces[k];
  if (pieces.size() > 1) den = "(" + den + ")";
  return num + " / " + den;
}

// ---------------------------------------------------------------------------
// CycloProduct

CycloProduct::CycloProduct(const std::map<std::int64_t, std::int64_t>& exps) {
  for (const auto& [n, e] : exps) add(n, e);
}

void CycloProduct::add(std::int64_t n, std::int64_t e) {
  if (n < 1) fail(ErrorCode::invalid_argument, "cyclotomic index must be positive");
  if (e == 0) return;
  auto& slot = exps_[n];
  slot += e;
  if (slot == 0) exps_.erase(n);
}

CycloProduct& CycloProduct::operator+=(const CycloProduct& o) {
  for (const auto& [n, e] : o.exps_) add(n, e);
  return *this;
}

std::string CycloProduct::to_string() const {
  auto factor = [](std::int64_t n, std::int64_t e) {
    std::string s = n == 1 ? "(t - 1)" : "(t^" + std::to_string(n) + " - 1)";
    if (e > 1) s += "^" + std::to_string(e);
    return s;
  };
  std::vector<std::string> up, down;
  for (const auto& [n, e] : exps_) (e > 0 ? up : down).push_back(factor(n, e > 0 ? e : -e));
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "*" : "") + v[k];
    return s;
  };
  std::string num = up.empty() ? "1" : join(up);
  if (up.size() > 1) num = "(" + num + ")";
  if (down.empty()) return num;
  std::string den = join(down);
  if (down.size() > 1) den = "(" + den + ")";
  return num + " / " + den;
}

std::int64_t cyclo_multiplicity(const CycloProduct& p, const BigRat& q) {
  if (q < 0 || q >= 1) fail(ErrorCode::invalid_argument, "eigenvalue class must lie in [0, 1)");
  const BigInt den = q.get_den();
  std::int64_t total = 0;
  for (const auto& [n, e] : p.exponents())
    if (BigInt(n) % den == 0) total += e;
  return total;
}

}  // namespace spliceq

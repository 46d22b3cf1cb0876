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


#include "spliceq/zeta.hpp"

#include <algorithm>
#include <cstdint>

#include "spliceq/error.hpp"
#include "spliceq/refine.hpp"

namespace spliceq {

namespace {

LaurentPoly l_minus(std::int64_t k) { return LaurentPoly::monomial(1, 1) - LaurentPoly(BigInt(k)); }

Poly2 factor_poly(const ZetaFactor& f) { return Poly2::zeta_factor(f.nu, f.n); }

std::string render_factor(const ZetaFactor& f) {
  const std::string l = f.nu == 0 ? "1" : f.nu == 1 ? "L" : "L^" + std::to_string(f.nu);
  const std::string t = f.n == 0 ? "1" : f.n == 1 ? "T" : "T^" + std::to_string(f.n);
  return "(" + l + " - " + t + ")";
}

}  // namespace

void ZetaExpr::add_term(const LaurentPoly& c, Key factors) {
  for (const ZetaFactor& f : factors)
    if (f.nu == 0 && f.n == 0) fail(ErrorCode::degenerate_denominator, "zeta factor with (N, nu) = (0, 0)");
  if (c.is_zero()) return;
  std::sort(factors.begin(), factors.end());
  auto [it, inserted] = terms_.try_emplace(std::move(factors), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ZetaExpr& ZetaExpr::operator+=(const ZetaExpr& o) {
  for (const auto& [k, c] : o.terms_) add_term(c, k);
  return *this;
}

ZetaExpr& ZetaExpr::operator-=(const ZetaExpr& o) {
  for (const auto& [k, c] : o.terms_) add_term(-c, k);
  return *this;
}

std::pair<Poly2, std::map<ZetaFactor, int>> ZetaExpr::cleared() const {
  Poly2 num;
  std::map<ZetaFactor, int> den;
  // Greedy order: next is the term introducing the fewest new denominator
  // factors, so groups that sum to zero complete early and cancel.
  std::vector<const std::pair<const Key, LaurentPoly>*> pending;
  for (const auto& t : terms_) pending.push_back(&t);
  while (!pending.empty()) {
    std::size_t best = 0;
    std::size_t best_new = SIZE_MAX;
    for (std::size_t k = 0; k < pending.size() && best_new > 0; ++k) {
      std::map<ZetaFactor, int> mine;
      std::size_t fresh = 0;
      for (const ZetaFactor& f : pending[k]->first) {
        auto it = den.find(f);
        if (++mine[f] > (it == den.end() ? 0 : it->second)) ++fresh;
      }
      if (fresh < best_new) {
        best_new = fresh;
        best = k;
      }
    }
    const auto& [key, c] = *pending[best];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));

    std::map<ZetaFactor, int> mine;
    std::int64_t t_exp = 0;
    for (const ZetaFactor& f : key) {
      ++mine[f];
      t_exp = checked_add(t_exp, f.n);
    }
    Poly2 term = Poly2::from_laurent(c, t_exp);
    for (const auto& [f, m] : mine) {
      int& have = den[f];
      for (; have < m; ++have) num = num * factor_poly(f);
    }
    for (const auto& [f, m] : den) {
      auto it = mine.find(f);
      for (int k = it == mine.end() ? 0 : it->second; k < m; ++k) term = term * factor_poly(f);
    }
    num += term;
    if (num.is_zero()) {
      den.clear();
      continue;
    }
    // Cancel whole factors while they divide the running numerator.
    for (auto dit = den.begin(); dit != den.end();) {
      Poly2 q;
      while (dit->second > 0 && num.divide_by_zeta_factor(dit->first.nu, dit->first.n, q)) {
        num = std::move(q);
        --dit->second;
      }
      dit = dit->second == 0 ? den.erase(dit) : std::next(dit);
    }
  }
  return {num, den};
}

bool ZetaExpr::is_zero() const { return terms_.empty() || cleared().first.is_zero(); }

std::string ZetaExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    std::int64_t t_exp = 0;
    std::string den;
    for (const ZetaFactor& f : key) {
      t_exp += f.n;
      den += (den.empty() ? "" : "*") + render_factor(f);
    }
    std::string line = "(" + c.to_string() + ")";
    if (t_exp == 1) line += " * T";
    if (t_exp > 1) line += " * T^" + std::to_string(t_exp);
    if (!key.empty()) line += " / " + (key.size() > 1 ? "(" + den + ")" : den);
    out += line + "\n";
  }
  return out;
}

namespace {

ZetaFactor factor_of(const Mult& m) { return {m.nu, m.n}; }

const Mult& cache_of(const Diagram& r, NodeId v) {
  const auto& c = r.node(v).cache;
  if (!c) fail(ErrorCode::missing_cache, "node " + r.node(v).name + " has no cached multiplicities");
  return *c;
}

void require_realizable(const Diagram& r) {
  if (!is_realizable(r)) fail(ErrorCode::invalid_argument, "diagram is not realizable; refine it first");
}

bool divides(std::int64_t e, std::int64_t n) { return n % e == 0; }

}  // namespace

ZetaExpr motivic_zeta_of_realizable(const Diagram& r) {
  require_realizable(r);
  ZetaExpr z;
  const LaurentPoly sq = l_minus(1) * l_minus(1);
  for (std::size_t k = 0; k < r.node_count(); ++k) {
    const NodeId v{k};
    const std::int64_t d = valency(r, v, ValencyKind::full);
    z.add_term(l_minus(1) * (LaurentPoly::monomial(1, 1) + LaurentPoly(BigInt(1 - d))), {factor_of(cache_of(r, v))});
  }
  for (const Edge& e : r.edges()) z.add_term(sq, {factor_of(cache_of(r, e.u)), factor_of(cache_of(r, e.v))});
  for (const Arrow& a : r.arrows()) z.add_term(sq, {factor_of(cache_of(r, a.node)), ZetaFactor{a.nu, a.n}});
  return z;
}

ZetaExpr motivic_zeta(const Diagram& g) { return motivic_zeta_of_realizable(realizable_refine(g)); }

RatFuncS top_zeta_of_realizable(const Diagram& r, std::int64_t order) {
  if (order < 1) fail(ErrorCode::invalid_argument, "twist order must be >= 1");
  require_realizable(r);
  auto lin = [](const Mult& m) { return LinearFactor{m.n, m.nu}; };
  RatFuncS sum;
  for (std::size_t k = 0; k < r.node_count(); ++k) {
    const NodeId v{k};
    const Mult& m = cache_of(r, v);
    if (!divides(order, m.n)) continue;
    sum += RatFuncS::term(BigRat(2 - valency(r, v, ValencyKind::full)), {lin(m)});
  }
  for (const Edge& e : r.edges()) {
    const Mult &a = cache_of(r, e.u), &b = cache_of(r, e.v);
    if (divides(order, a.n) && divides(order, b.n)) sum += RatFuncS::term(1, {lin(a), lin(b)});
  }
  for (const Arrow& ar : r.arrows()) {
    const Mult& a = cache_of(r, ar.node);
    if (divides(order, a.n) && divides(order, ar.n)) sum += RatFuncS::term(1, {lin(a), LinearFactor{ar.n, ar.nu}});
  }
  return sum;
}

RatFuncS top_zeta(const Diagram& g) { return top_zeta_of_realizable(realizable_refine(g), 1); }

RatFuncS twisted_top_zeta(const Diagram& g, std::int64_t order) {
  return top_zeta_of_realizable(realizable_refine(g), order);
}

BigRat specialize_chi_top(const ZetaExpr& z, std::int64_t n) {
  if (n < 1) fail(ErrorCode::invalid_argument, "specialization point must be >= 1");
  // T^N / (L^nu - T^N) at T = L^-n is 1 / (L^(nu + nN) - 1) = 1 / ((L - 1) [nu + nN]_L).
  BigRat total = 0;
  for (const auto& [key, c] : z.terms()) {
    BigInt scale = 1;
    LaurentPoly den(BigInt(1));
    for (const ZetaFactor& f : key) {
      const std::int64_t m = checked_add(f.nu, checked_mul(n, f.n));
      if (m == 0) fail(ErrorCode::pole_at_one, "factor L^0 - 1 vanishes identically at T = L^-" + std::to_string(n));
      scale *= m;
      den = den * l_minus(1);
    }
    total += eval_at_one_with_cancellation(c, den) / BigRat(scale);
  }
  return total;
}

std::vector<Pole> poles(const RatFuncS& r) { return r.poles(); }

std::set<ZetaFactor> candidate_poles_motivic(const Diagram& g) {
  const Diagram r = realizable_refine(g);
  std::set<ZetaFactor> out;
  for (const Node& n : r.nodes())
    if (n.cache->n >= 1) out.insert(factor_of(*n.cache));
  for (const Arrow& a : r.arrows())
    if (a.n >= 1) out.insert({a.nu, a.n});
  return out;
}

}  // namespace spliceq

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


#include "spliceq/spliceq.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "spliceq/error.hpp"
#include "spliceq/io.hpp"
#include "spliceq/monodromy.hpp"
#include "spliceq/refine.hpp"
#include "spliceq/splice.hpp"
#include "spliceq/zeta.hpp"

struct spliceq_diagram {
  spliceq::Diagram g;
};

namespace {

using namespace spliceq;

thread_local std::string last_error;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NullArgument : std::runtime_error {
  using std::runtime_error::runtime_error;
};

spliceq_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::invalid_argument: return SPLICEQ_ERR_INVALID_ARGUMENT;
    case ErrorCode::pole_at_one: return SPLICEQ_ERR_POLE_AT_ONE;
    case ErrorCode::decorated_arrow_present: return SPLICEQ_ERR_DECORATED_ARROW;
    case ErrorCode::cache_mismatch: return SPLICEQ_ERR_CACHE_MISMATCH;
    case ErrorCode::non_primitive_input: return SPLICEQ_ERR_NON_PRIMITIVE;
    case ErrorCode::negative_determinant: return SPLICEQ_ERR_NEGATIVE_DETERMINANT;
    case ErrorCode::non_integral_interpolation: return SPLICEQ_ERR_NON_INTEGRAL_INTERPOLATION;
    case ErrorCode::missing_cache: return SPLICEQ_ERR_MISSING_CACHE;
    case ErrorCode::degenerate_denominator: return SPLICEQ_ERR_DEGENERATE_DENOMINATOR;
    case ErrorCode::not_an_edge: return SPLICEQ_ERR_NOT_AN_EDGE;
    case ErrorCode::no_f_arrow: return SPLICEQ_ERR_NO_F_ARROW;
    case ErrorCode::non_polynomial_delta1: return SPLICEQ_ERR_NON_POLYNOMIAL_DELTA1;
    case ErrorCode::parse_error: return SPLICEQ_ERR_PARSE;
    case ErrorCode::validation_error: return SPLICEQ_ERR_VALIDATION;
    case ErrorCode::degenerate_branch: return SPLICEQ_ERR_DEGENERATE_BRANCH;
    case ErrorCode::overflow: return SPLICEQ_ERR_OVERFLOW;
  }
  return SPLICEQ_ERR_INTERNAL;
}

template <class F>
spliceq_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return SPLICEQ_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const IoError& e) {
    last_error = e.what();
    return SPLICEQ_ERR_IO;
  } catch (const NullArgument& e) {
    last_error = e.what();
    return SPLICEQ_ERR_NULL_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SPLICEQ_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SPLICEQ_ERR_INTERNAL;
  }
}

template <class T>
void need(const T* p, const char* what) {
  if (p == nullptr) throw NullArgument(std::string("null argument: ") + what);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

spliceq_diagram* wrap(Diagram g) { return new spliceq_diagram{std::move(g)}; }

// Expressions lose their cosmetic spaces in machine records.
std::string compact(const std::string& s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\n' && c != '\t') out += c;
  return out;
}

// Free text in machine records: whitespace and '%' are percent-encoded.
std::string encode(const std::string& s) {
  static const char* hex = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '%') {
      out += '%';
      out += hex[c >> 4];
      out += hex[c & 15];
    } else {
      out += static_cast<char>(c);
    }
  }
  return out;
}

std::string yes(bool b) { return b ? "true" : "false"; }

std::string rat_str(const BigRat& q) { return spliceq::to_string(q); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Diagram load(const std::string& source, bool validate_it) {
  static const std::string prefix = "example:";
  if (source.rfind(prefix, 0) == 0) return builtin_example(source.substr(prefix.size()));
  const std::string text = read_file(source);
  return validate_it ? parse_sd(text) : parse_sd_unchecked(text);
}

// Multiplicities of a diagram: recomputed when standard, cached otherwise.
MultTable node_mults(const Diagram& g) {
  if (g.is_standard()) return compute_multiplicities(g);
  return cached_multiplicities(g);
}

std::string source_name(EigenSource s) { return s == EigenSource::h0 ? "h0" : "h1"; }

std::string render_validate(const Diagram& g, spliceq_format fmt, bool& valid) {
  const std::vector<Issue> issues = validate(g);
  int errors = 0, warnings = 0;
  for (const Issue& i : issues) (i.severity == Severity::error ? errors : warnings)++;
  valid = errors == 0;
  std::ostringstream out;
  if (fmt == SPLICEQ_MACHINE) {
    out << "validate valid=" << yes(valid) << " errors=" << errors << " warnings=" << warnings << "\n";
    for (const Issue& i : issues)
      out << "issue severity=" << (i.severity == Severity::error ? "error" : "warning") << " kind=" << i.kind
          << " message=" << encode(i.message) << "\n";
  } else {
    for (const Issue& i : issues)
      out << (i.severity == Severity::error ? "error" : "warning") << " [" << i.kind << "] " << i.message << "\n";
    out << (valid ? "valid" : "invalid") << "\n";
  }
  return out.str();
}

std::string render_mults(const Diagram& g, spliceq_format fmt) {
  require_valid(g);
  const MultTable t = node_mults(g);
  std::vector<std::pair<std::string, Mult>> rows;
  for (std::size_t k = 0; k < g.node_count(); ++k) rows.emplace_back(g.nodes()[k].name, t[k]);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::ostringstream out;
  for (const auto& [name, m] : rows) {
    if (fmt == SPLICEQ_MACHINE)
      out << "node name=" << name << " N=" << m.n << " nu=" << m.nu << "\n";
    else
      out << name << ": N = " << m.n << ", nu = " << m.nu << "\n";
  }
  return out.str();
}

void render_rat(std::ostringstream& out, const RatFuncS& z, spliceq_format fmt, const std::string& kind,
                std::int64_t order) {
  if (fmt == SPLICEQ_MACHINE) {
    out << "zeta kind=" << kind << " order=" << order << " value=" << compact(z.to_string()) << "\n";
    for (const Pole& p : z.poles())
      out << "pole value=" << rat_str(p.value) << " multiplicity=" << p.multiplicity << "\n";
  } else {
    out << z.to_string() << "\n";
  }
}

std::string render_zeta(const Diagram& g, spliceq_zeta_kind kind, std::int64_t order, spliceq_format fmt) {
  std::ostringstream out;
  switch (kind) {
    case SPLICEQ_ZETA_MOTIVIC: {
      const ZetaExpr z = motivic_zeta(g);
      if (fmt == SPLICEQ_MACHINE) {
        out << "zeta kind=motivic terms=" << z.terms().size() << "\n";
        std::istringstream lines(z.to_string());
        for (std::string line; std::getline(lines, line);)
          if (!line.empty()) out << "term value=" << compact(line) << "\n";
      } else {
        out << z.to_string();
      }
      break;
    }
    case SPLICEQ_ZETA_TOP:
      render_rat(out, top_zeta(g), fmt, "top", 1);
      break;
    case SPLICEQ_ZETA_TWISTED:
      if (order < 1) fail(ErrorCode::invalid_argument, "twist order must be positive");
      render_rat(out, twisted_top_zeta(g, order), fmt, "twisted", order);
      break;
    default:
      fail(ErrorCode::invalid_argument, "unknown zeta kind");
  }
  return out.str();
}

std::string render_monodromy(const Diagram& g, spliceq_format fmt) {
  const CycloProduct z = monodromy_zeta(g), d0 = delta0(g), d1 = delta1(g);
  const std::vector<EigenvalueClass> ev = eigenvalues(g);
  std::ostringstream out;
  if (fmt == SPLICEQ_MACHINE) {
    out << "monodromy_zeta value=" << compact(z.to_string()) << "\n";
    for (const auto& [n, e] : z.exponents()) out << "factor n=" << n << " e=" << e << "\n";
    out << "delta0 value=" << compact(d0.to_string()) << "\n";
    out << "delta1 value=" << compact(d1.to_string()) << "\n";
    for (const auto& c : ev)
      out << "eigenvalue q=" << rat_str(c.q) << " multiplicity=" << c.multiplicity
          << " source=" << source_name(c.source) << "\n";
  } else {
    out << "zeta:   " << z.to_string() << "\n";
    out << "delta0: " << d0.to_string() << "\n";
    out << "delta1: " << d1.to_string() << "\n";
    out << "eigenvalues (q for exp(2 pi i q)):\n";
    for (const auto& c : ev)
      out << "  " << rat_str(c.q) << "  " << source_name(c.source) << " x" << c.multiplicity << "\n";
  }
  return out.str();
}

std::string legs_str(const StarRecord& st, bool machine) {
  std::string s;
  for (const auto& [d, i] : st.legs) {
    if (!s.empty()) s += machine ? "," : " ";
    s += machine ? std::to_string(d) + ":" + std::to_string(i) : "(" + std::to_string(d) + "," + std::to_string(i) + ")";
  }
  return s.empty() && machine ? "-" : s;
}

void render_allowed_into(std::ostringstream& out, const AllowedReport& rep, spliceq_format fmt) {
  if (fmt == SPLICEQ_MACHINE) {
    out << "allowed value=" << yes(rep.allowed) << " arrows_ok=" << yes(rep.arrows_ok) << "\n";
    for (const auto& st : rep.stars)
      out << "star node=" << st.node << " n=" << st.n << " r=" << st.r << " legs=" << legs_str(st, true)
          << " divisible=" << st.divisible << " equal=" << st.equal << " passes=" << yes(st.passes) << "\n";
  } else {
    out << "allowed: " << (rep.allowed ? "yes" : "no") << "\n";
    if (!rep.arrows_ok) out << "  an arrowhead carries (N, nu) = (0, 0)\n";
    for (const auto& st : rep.stars)
      out << "  " << st.node << ": n=" << st.n << " r=" << st.r << " legs (d,i): " << legs_str(st, false)
          << "; divisible " << st.divisible << ", equal " << st.equal << ", threshold " << st.n + st.r - 2
          << (st.passes ? "  ok" : "  FAILS") << "\n";
  }
}

std::string render_mc(const McReport& rep, spliceq_format fmt) {
  std::ostringstream out;
  render_allowed_into(out, rep.allowed, fmt);
  if (fmt == SPLICEQ_MACHINE) {
    for (const auto& c : rep.eigenvalues)
      out << "eigenvalue q=" << rat_str(c.q) << " multiplicity=" << c.multiplicity
          << " source=" << source_name(c.source) << "\n";
    for (const auto& sec : rep.sections) {
      out << "section order=" << sec.order << " zeta=" << compact(sec.zeta.to_string())
          << " all_eigenvalues=" << yes(sec.all_eigenvalues) << "\n";
      for (const auto& p : sec.poles)
        out << "pole order=" << sec.order << " value=" << rat_str(p.pole) << " multiplicity=" << p.multiplicity
            << " class=" << rat_str(p.eigen_class) << " eigenvalue=" << yes(p.is_eigenvalue) << "\n";
    }
  } else {
    out << "eigenvalue classes:";
    std::string prev;
    for (const auto& c : rep.eigenvalues) {
      const std::string q = rat_str(c.q);
      if (q != prev) out << " " << q;
      prev = q;
    }
    out << "\n";
    for (const auto& sec : rep.sections) {
      out << (sec.order == 1 ? std::string("Z_top") : "Z^(" + std::to_string(sec.order) + ")") << " = "
          << sec.zeta.to_string() << "\n";
      for (const auto& p : sec.poles)
        out << "  pole " << rat_str(p.pole) << " (order " << p.multiplicity << "), class " << rat_str(p.eigen_class)
            << ": " << (p.is_eigenvalue ? "eigenvalue" : "NOT an eigenvalue") << "\n";
      out << "  " << (sec.all_eigenvalues ? "every pole induces an eigenvalue" : "some pole induces no eigenvalue")
          << "\n";
    }
  }
  return out.str();
}

std::string tuple_str(const Example2Tuple& t) {
  return "i1=" + std::to_string(t.i1) + " i2=" + std::to_string(t.i2) + " i3=" + std::to_string(t.i3) +
         " k=" + std::to_string(t.k);
}

std::string render_search(const Example2Box& box, bool extended, const Example2Search& s, spliceq_format fmt) {
  std::ostringstream out;
  if (fmt == SPLICEQ_MACHINE) {
    out << "example2_search box=" << (extended ? "extended" : "residue") << " examined=" << s.examined
        << " hits_a=" << s.hits_a.size() << " hits_both=" << s.hits_both.size()
        << " congruence_necessary=" << yes(s.congruence_necessary) << "\n";
    for (const auto& t : s.hits_a) out << "hit_a " << tuple_str(t) << "\n";
    for (const auto& t : s.hits_both) out << "hit_both " << tuple_str(t) << "\n";
  } else {
    out << "box: i1, i2 in " << box.i_lo << ".." << box.i_hi << ", i3 in " << box.i3_lo << ".." << box.i3_hi
        << ", k in " << box.k_lo << ".." << box.k_hi << " (" << s.examined << " diagrams)\n";
    out << "(a) a pole of Z^(330) in class 1/110: " << s.hits_a.size() << " tuples\n";
    out << "(a) and (b) every pole of Z^(60) an eigenvalue: " << s.hits_both.size() << " tuples\n";
    out << "2 i1 + 3 i2 = 3 mod 6 on every (a) tuple: " << (s.congruence_necessary ? "yes" : "no") << "\n";
    for (const auto& t : s.hits_both) out << "  " << tuple_str(t) << "\n";
  }
  return out.str();
}

}  // namespace

extern "C" {

const char* spliceq_version(void) { return "0.1.0"; }

const char* spliceq_status_name(spliceq_status status) {
  switch (status) {
    case SPLICEQ_OK: return "ok";
    case SPLICEQ_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case SPLICEQ_ERR_POLE_AT_ONE: return "pole_at_one";
    case SPLICEQ_ERR_DECORATED_ARROW: return "decorated_arrow_present";
    case SPLICEQ_ERR_CACHE_MISMATCH: return "cache_mismatch";
    case SPLICEQ_ERR_NON_PRIMITIVE: return "non_primitive_input";
    case SPLICEQ_ERR_NEGATIVE_DETERMINANT: return "negative_determinant";
    case SPLICEQ_ERR_NON_INTEGRAL_INTERPOLATION: return "non_integral_interpolation";
    case SPLICEQ_ERR_MISSING_CACHE: return "missing_cache";
    case SPLICEQ_ERR_DEGENERATE_DENOMINATOR: return "degenerate_denominator";
    case SPLICEQ_ERR_NOT_AN_EDGE: return "not_an_edge";
    case SPLICEQ_ERR_NO_F_ARROW: return "no_f_arrow";
    case SPLICEQ_ERR_NON_POLYNOMIAL_DELTA1: return "non_polynomial_delta1";
    case SPLICEQ_ERR_PARSE: return "parse_error";
    case SPLICEQ_ERR_VALIDATION: return "validation_error";
    case SPLICEQ_ERR_DEGENERATE_BRANCH: return "degenerate_branch";
    case SPLICEQ_ERR_OVERFLOW: return "overflow";
    case SPLICEQ_ERR_IO: return "io_error";
    case SPLICEQ_ERR_NULL_ARGUMENT: return "null_argument";
    case SPLICEQ_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* spliceq_last_error(void) { return last_error.c_str(); }

void spliceq_string_free(char* s) { std::free(s); }

void spliceq_diagram_free(spliceq_diagram* g) { delete g; }

spliceq_status spliceq_diagram_parse(const char* text, int validate_it, spliceq_diagram** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = wrap(validate_it ? parse_sd(text) : parse_sd_unchecked(text));
  });
}

spliceq_status spliceq_diagram_load(const char* source, int validate_it, spliceq_diagram** out) {
  return guarded([&] {
    need(source, "source");
    need(out, "out");
    *out = wrap(load(source, validate_it != 0));
  });
}

spliceq_status spliceq_diagram_example(const char* name, spliceq_diagram** out) {
  return guarded([&] {
    need(name, "name");
    need(out, "out");
    *out = wrap(builtin_example(name));
  });
}

spliceq_status spliceq_diagram_random(uint64_t seed, int moves, spliceq_diagram** out) {
  return guarded([&] {
    need(out, "out");
    if (moves < 0) fail(ErrorCode::invalid_argument, "moves must be non-negative");
    *out = wrap(random_diagram(seed, moves));
  });
}

spliceq_status spliceq_diagram_write(const spliceq_diagram* g, char** out) {
  return guarded([&] {
    need(g, "diagram");
    need(out, "out");
    *out = dup(write_sd(g->g));
  });
}

spliceq_status spliceq_diagram_counts(const spliceq_diagram* g, size_t* nodes, size_t* edges, size_t* arrows) {
  return guarded([&] {
    need(g, "diagram");
    if (nodes) *nodes = g->g.node_count();
    if (edges) *edges = g->g.edge_count();
    if (arrows) *arrows = g->g.arrow_count();
  });
}

spliceq_status spliceq_example_names(char** out) {
  return guarded([&] {
    need(out, "out");
    std::string s;
    for (const auto& n : bundled_example_names()) s += n + "\n";
    *out = dup(s);
  });
}

spliceq_status spliceq_validate(const spliceq_diagram* g, spliceq_format fmt, int* valid, char** report) {
  return guarded([&] {
    need(g, "diagram");
    bool ok = false;
    const std::string text = render_validate(g->g, fmt, ok);
    if (valid) *valid = ok ? 1 : 0;
    if (report) *report = dup(text);
  });
}

spliceq_status spliceq_multiplicities(const spliceq_diagram* g, spliceq_format fmt, char** out) {
  return guarded([&] {
    need(g, "diagram");
    need(out, "out");
    *out = dup(render_mults(g->g, fmt));
  });
}

spliceq_status spliceq_refine(const spliceq_diagram* g, spliceq_diagram** out) {
  return guarded([&] {
    need(g, "diagram");
    need(out, "out");
    *out = wrap(realizable_refine(g->g));
  });
}

spliceq_status spliceq_reduce(const spliceq_diagram* g, spliceq_diagram** out) {
  return guarded([&] {
    need(g, "diagram");
    need(out, "out");
    require_valid(g->g);
    *out = wrap(reduce(g->g));
  });
}

spliceq_status spliceq_zeta(const spliceq_diagram* g, spliceq_zeta_kind kind, int64_t order, spliceq_format fmt,
                            char** out) {
  return guarded([&] {
    need(g, "diagram");
    need(out, "out");
    *out = dup(render_zeta(g->g, kind, order, fmt));
  });
}

spliceq_status spliceq_splice(const spliceq_diagram* g, const char* a, const char* b, spliceq_diagram** left,
                              spliceq_diagram** right, int64_t data[4]) {
  return guarded([&] {
    need(g, "diagram");
    need(a, "a");
    need(b, "b");
    need(left, "left");
    need(right, "right");
    SpliceResult r = splice(g->g, require_edge(g->g, a, b));
    if (data) {
      data[0] = r.data.m;
      data[1] = r.data.m2;
      data[2] = r.data.i;
      data[3] = r.data.i2;
    }
    *left = wrap(std::move(r.left));
    *right = wrap(std::move(r.right));
  });
}

spliceq_status spliceq_verify_splice(const spliceq_diagram* g, const char* a, const char* b, int* motivic_ok,
                                     int* top_ok) {
  return guarded([&] {
    need(g, "diagram");
    need(a, "a");
    need(b, "b");
    const EdgeId e = require_edge(g->g, a, b);
    if (motivic_ok) *motivic_ok = verify_splice_motivic(g->g, e) ? 1 : 0;
    if (top_ok) *top_ok = verify_splice_top(g->g, e) ? 1 : 0;
  });
}

spliceq_status spliceq_verify_all_splices(const spliceq_diagram* g, spliceq_format fmt, int* all_ok, char** report) {
  return guarded([&] {
    need(g, "diagram");
    require_valid(g->g);
    std::vector<std::pair<std::string, std::string>> edges;
    for (const Edge& e : g->g.edges()) {
      std::string u = g->g.node(e.u).name, v = g->g.node(e.v).name;
      edges.emplace_back(u, v);
    }
    std::sort(edges.begin(), edges.end());
    bool ok = true;
    std::ostringstream out;
    for (const auto& [u, v] : edges) {
      const EdgeId e = require_edge(g->g, u, v);
      const bool m = verify_splice_motivic(g->g, e), t = verify_splice_top(g->g, e);
      ok = ok && m && t;
      if (fmt == SPLICEQ_MACHINE)
        out << "verify_splice u=" << u << " v=" << v << " motivic=" << yes(m) << " top=" << yes(t) << "\n";
      else
        out << u << " -- " << v << ": motivic " << (m ? "holds" : "FAILS") << ", top " << (t ? "holds" : "FAILS")
            << "\n";
    }
    if (all_ok) *all_ok = ok ? 1 : 0;
    if (report) *report = dup(out.str());
  });
}

spliceq_status spliceq_monodromy(const spliceq_diagram* g, spliceq_format fmt, char** out) {
  return guarded([&] {
    need(g, "diagram");
    need(out, "out");
    require_valid(g->g);
    *out = dup(render_monodromy(g->g, fmt));
  });
}

spliceq_status spliceq_is_eigenvalue(const spliceq_diagram* g, int64_t num, int64_t den, int* out) {
  return guarded([&] {
    need(g, "diagram");
    need(out, "out");
    if (den == 0) fail(ErrorCode::invalid_argument, "zero denominator");
    *out = is_eigenvalue(g->g, make_rat(num, den)) ? 1 : 0;
  });
}

spliceq_status spliceq_allowed(const spliceq_diagram* g, spliceq_format fmt, int* allowed, char** out) {
  return guarded([&] {
    need(g, "diagram");
    const AllowedReport rep = is_allowed(g->g);
    if (allowed) *allowed = rep.allowed ? 1 : 0;
    if (out) {
      std::ostringstream s;
      render_allowed_into(s, rep, fmt);
      *out = dup(s.str());
    }
  });
}

spliceq_status spliceq_mc_report(const spliceq_diagram* g, const int64_t* orders, size_t n_orders, int auto_orders,
                                 int64_t max_order, spliceq_format fmt, char** out) {
  return guarded([&] {
    need(g, "diagram");
    need(out, "out");
    if (n_orders > 0) need(orders, "orders");
    require_valid(g->g);
    std::vector<std::int64_t> list(orders, orders + n_orders);
    if (auto_orders)
      for (std::int64_t e : auto_twist_orders(g->g, max_order)) list.push_back(e);
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    *out = dup(render_mc(mc_report(g->g, list), fmt));
  });
}

spliceq_status spliceq_example2_search(int extended, spliceq_format fmt, int* none_found, char** out) {
  return guarded([&] {
    const Example2Box box = extended ? example2_extended_box() : example2_residue_box();
    const Example2Search s = example2_search(box);
    if (none_found) *none_found = s.hits_both.empty() ? 1 : 0;
    if (out) *out = dup(render_search(box, extended != 0, s, fmt));
  });
}

}  // extern "C"

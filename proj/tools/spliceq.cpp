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


// Command-line front end over the C interface.
//
// Exit codes: 0 success, 1 a verification came out false, 2 bad input.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spliceq/spliceq.h"

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;

struct CliFailure {
  int code;
};

struct DiagramDeleter {
  void operator()(spliceq_diagram* g) const { spliceq_diagram_free(g); }
};
using DiagramPtr = std::unique_ptr<spliceq_diagram, DiagramDeleter>;

struct StringDeleter {
  void operator()(char* s) const { spliceq_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

void check(spliceq_status st) {
  if (st == SPLICEQ_OK) return;
  std::cerr << "error (" << spliceq_status_name(st) << "): " << spliceq_last_error() << "\n";
  throw CliFailure{kInputError};
}

DiagramPtr load(const std::string& source, bool validate) {
  spliceq_diagram* g = nullptr;
  check(spliceq_diagram_load(source.c_str(), validate ? 1 : 0, &g));
  return DiagramPtr(g);
}

void print(char* s) {
  CString owned(s);
  std::cout << owned.get();
}

void print_sd(const spliceq_diagram* g) {
  char* s = nullptr;
  check(spliceq_diagram_write(g, &s));
  print(s);
}

void print_sd_prefixed(const spliceq_diagram* g, const std::string& prefix) {
  char* s = nullptr;
  check(spliceq_diagram_write(g, &s));
  CString owned(s);
  std::istringstream lines(owned.get());
  for (std::string line; std::getline(lines, line);)
    if (!line.empty() && line[0] != '#') std::cout << prefix << line << "\n";
}

std::vector<std::int64_t> parse_orders(const std::string& text, bool& use_auto) {
  use_auto = false;
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item == "auto") {
      use_auto = true;
      continue;
    }
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      std::cerr << "error: bad twist order '" << item << "'\n";
      throw CliFailure{kInputError};
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spliceq: exact zeta functions, splicing and monodromy checks for decorated diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  bool machine = false;
  app.add_flag("--machine", machine, "Machine-readable records (tag key=value ...)");

  std::string input;
  const std::string input_help = "Diagram file (.sd) or example:<name>";

  auto* validate = app.add_subcommand("validate", "Check diagram invariants");
  validate->add_option("input", input, input_help)->required();

  auto* mult = app.add_subcommand("mult", "Multiplicities (N, nu) of every node");
  mult->add_option("input", input, input_help)->required();

  auto* refine = app.add_subcommand("refine", "Realizable refinement");
  refine->add_option("input", input, input_help)->required();

  auto* reduce = app.add_subcommand("reduce", "Remove valency-two nodes without arrowheads");
  reduce->add_option("input", input, input_help)->required();

  std::string kind = "top";
  std::int64_t order = 1;
  auto* zeta = app.add_subcommand("zeta", "Motivic, topological or twisted topological zeta function");
  zeta->add_option("input", input, input_help)->required();
  zeta->add_option("--kind", kind, "motivic, top or twisted")
      ->check(CLI::IsMember({"motivic", "top", "twisted"}));
  zeta->add_option("--order", order, "Twist order e for --kind twisted")->check(CLI::PositiveNumber);

  std::vector<std::string> edge;
  auto* splice_cmd = app.add_subcommand("splice", "Split the diagram along an edge");
  splice_cmd->add_option("input", input, input_help)->required();
  splice_cmd->add_option("--edge", edge, "Endpoint names of the edge")->expected(2)->required();

  auto* verify = app.add_subcommand("verify-splice", "Check the splicing identity (every edge by default)");
  verify->add_option("input", input, input_help)->required();
  verify->add_option("--edge", edge, "Endpoint names of one edge")->expected(2);

  auto* mono = app.add_subcommand("monodromy", "Monodromy zeta function and eigenvalues");
  mono->add_option("input", input, input_help)->required();

  auto* allowed = app.add_subcommand("allowed", "Star condition for the form data");
  allowed->add_option("input", input, input_help)->required();

  std::string orders_text;
  std::int64_t max_order = 1000;
  std::string search;
  auto* mc = app.add_subcommand("mc-check", "Report poles, their classes and eigenvalue verdicts");
  mc->add_option("input", input, input_help);
  mc->add_option("--twisted-orders", orders_text, "Comma-separated twist orders, or auto");
  mc->add_option("--max-order", max_order, "Bound for auto orders")->check(CLI::PositiveNumber);
  mc->add_option("--example2-search", search, "Run the nv2 form-parameter search over a box")
      ->check(CLI::IsMember({"residue", "extended"}));

  std::string example_name;
  auto* example = app.add_subcommand("example", "Print a built-in example (list names without argument)");
  example->add_option("name", example_name, "Example name");

  std::uint64_t seed = 1;
  int moves = 4;
  auto* gen = app.add_subcommand("gen", "Print a random valid diagram");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--moves", moves, "Number of random moves")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  const spliceq_format fmt = machine ? SPLICEQ_MACHINE : SPLICEQ_HUMAN;
  try {
    if (*validate) {
      DiagramPtr g = load(input, false);
      int valid = 0;
      char* report = nullptr;
      check(spliceq_validate(g.get(), fmt, &valid, &report));
      print(report);
      return valid ? kOk : kFalse;
    }
    if (*mult) {
      DiagramPtr g = load(input, true);
      char* out = nullptr;
      check(spliceq_multiplicities(g.get(), fmt, &out));
      print(out);
      return kOk;
    }
    if (*refine || *reduce) {
      DiagramPtr g = load(input, true);
      spliceq_diagram* r = nullptr;
      check(*refine ? spliceq_refine(g.get(), &r) : spliceq_reduce(g.get(), &r));
      DiagramPtr owned(r);
      print_sd(owned.get());
      return kOk;
    }
    if (*zeta) {
      DiagramPtr g = load(input, true);
      const spliceq_zeta_kind k =
          kind == "motivic" ? SPLICEQ_ZETA_MOTIVIC : kind == "top" ? SPLICEQ_ZETA_TOP : SPLICEQ_ZETA_TWISTED;
      if (k != SPLICEQ_ZETA_TWISTED && order != 1) {
        std::cerr << "error: --order applies to --kind twisted only\n";
        return kInputError;
      }
      char* out = nullptr;
      check(spliceq_zeta(g.get(), k, order, fmt, &out));
      print(out);
      return kOk;
    }
    if (*splice_cmd) {
      DiagramPtr g = load(input, true);
      spliceq_diagram *left = nullptr, *right = nullptr;
      std::int64_t data[4] = {0, 0, 0, 0};
      check(spliceq_splice(g.get(), edge[0].c_str(), edge[1].c_str(), &left, &right, data));
      DiagramPtr l(left), r(right);
      if (machine) {
        std::cout << "splice_data m=" << data[0] << " m2=" << data[1] << " i=" << data[2] << " i2=" << data[3]
                  << "\n";
        print_sd_prefixed(l.get(), "left ");
        print_sd_prefixed(r.get(), "right ");
      } else {
        std::cout << "# splice data: M = " << data[0] << ", M' = " << data[1] << ", i = " << data[2]
                  << ", i' = " << data[3] << "\n# side of " << edge[0] << "\n";
        print_sd(l.get());
        std::cout << "# side of " << edge[1] << "\n";
        print_sd(r.get());
      }
      return kOk;
    }
    if (*verify) {
      DiagramPtr g = load(input, true);
      if (edge.empty()) {
        int ok = 0;
        char* report = nullptr;
        check(spliceq_verify_all_splices(g.get(), fmt, &ok, &report));
        print(report);
        return ok ? kOk : kFalse;
      }
      int m = 0, t = 0;
      check(spliceq_verify_splice(g.get(), edge[0].c_str(), edge[1].c_str(), &m, &t));
      if (machine)
        std::cout << "verify_splice u=" << edge[0] << " v=" << edge[1] << " motivic=" << (m ? "true" : "false")
                  << " top=" << (t ? "true" : "false") << "\n";
      else
        std::cout << edge[0] << " -- " << edge[1] << ": motivic " << (m ? "holds" : "FAILS") << ", top "
                  << (t ? "holds" : "FAILS") << "\n";
      return m && t ? kOk : kFalse;
    }
    if (*mono) {
      DiagramPtr g = load(input, true);
      char* out = nullptr;
      check(spliceq_monodromy(g.get(), fmt, &out));
      print(out);
      return kOk;
    }
    if (*allowed) {
      DiagramPtr g = load(input, true);
      int ok = 0;
      char* out = nullptr;
      check(spliceq_allowed(g.get(), fmt, &ok, &out));
      print(out);
      return kOk;
    }
    if (*mc) {
      if (!search.empty()) {
        int none = 0;
        char* out = nullptr;
        check(spliceq_example2_search(search == "extended" ? 1 : 0, fmt, &none, &out));
        print(out);
        return kOk;
      }
      if (input.empty()) {
        std::cerr << "error: mc-check needs an input diagram or --example2-search\n";
        return kInputError;
      }
      bool use_auto = false;
      const std::vector<std::int64_t> orders = parse_orders(orders_text, use_auto);
      DiagramPtr g = load(input, true);
      char* out = nullptr;
      check(spliceq_mc_report(g.get(), orders.data(), orders.size(), use_auto ? 1 : 0, max_order, fmt, &out));
      print(out);
      return kOk;
    }
    if (*example) {
      if (example_name.empty()) {
        char* names = nullptr;
        check(spliceq_example_names(&names));
        print(names);
        return kOk;
      }
      spliceq_diagram* g = nullptr;
      check(spliceq_diagram_example(example_name.c_str(), &g));
      DiagramPtr owned(g);
      print_sd(owned.get());
      return kOk;
    }
    if (*gen) {
      spliceq_diagram* g = nullptr;
      check(spliceq_diagram_random(seed, moves, &g));
      DiagramPtr owned(g);
      print_sd(owned.get());
      return kOk;
    }
  } catch (const CliFailure& f) {
    return f.code;
  }
  return kInputError;
}

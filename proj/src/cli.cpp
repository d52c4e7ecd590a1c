#include "cysp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cysp/bounds.hpp"
#include "cysp/constructions.hpp"
#include "cysp/json_io.hpp"
#include "cysp/report.hpp"
#include "cysp/sat.hpp"
#include "cysp/search.hpp"
#include "cysp/verifier.hpp"

namespace cysp::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Element> parse_element_list(const std::string& text) {
  std::vector<Element> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("--A: '" + item + "' is not an integer");
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string format_elements(const AbelianGroup& g, const std::vector<Element>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += element_to_json(g, xs[i]).dump();
  }
  return out + "}";
}

void print_coloring(std::ostream& out, const Coloring& c) {
  out << c.group().name() << "  A = " << format_elements(c.group(), c.set_a())
      << "  B = " << format_elements(c.group(), c.set_b()) << "\n";
}

struct Flags {
  bool json = false;

  std::string algebra;
  int n = 0;
  std::string group;
  std::string a_list;
  std::string input;
  bool all = false;
  bool up_to_automorphism = false;
  int limit = kDefaultExhaustiveLimit;
  int lo = 3;
  int hi = kDefaultExhaustiveLimit;
  std::uint64_t seed = 0;
  long long iters = 10000;
  std::string dimacs;
  bool symmetry_break = false;
  int max = 40;
};

int cmd_verify(const Flags& f, std::ostream& out) {
  const Algebra& algebra = algebra_by_name(f.algebra);
  std::optional<Coloring> coloring;
  if (!f.input.empty()) {
    json j;
    try {
      j = json::parse(read_file(f.input));
    } catch (const json::parse_error& e) {
      throw UsageError(std::string("--input: ") + e.what());
    }
    coloring = coloring_from_json(j);
  } else {
    if (f.a_list.empty()) throw UsageError("verify needs --A (with --n or --group) or --input");
    if (f.n > 0 && !f.group.empty()) throw UsageError("give either --n or --group, not both");
    if (f.n <= 0 && f.group.empty()) throw UsageError("verify needs --n or --group");
    AbelianGroup g = f.group.empty() ? AbelianGroup::cyclic(f.n) : AbelianGroup::parse(f.group);
    std::vector<Element> a;
    for (Element x : parse_element_list(f.a_list)) {
      if (!g.is_cyclic())
        throw UsageError("--A lists residues of a cyclic group; use --input for products");
      a.push_back(x);
    }
    coloring.emplace(g, a);
  }
  std::vector<Violation> violations = verify(algebra, *coloring);
  if (f.json) {
    json vs = json::array();
    for (const Violation& v : violations) vs.push_back(to_json(v, coloring->group()));
    out << json{{"algebra", algebra.name()},
                {"coloring", to_json(*coloring)},
                {"valid", violations.empty()},
                {"violations", vs}}
               .dump(2)
        << "\n";
  } else if (violations.empty()) {
    out << "valid\n";
  } else {
    out << "invalid (" << violations.size() << " violations)\n";
    for (const Violation& v : violations) out << "  " << describe(v) << "\n";
  }
  return violations.empty() ? kExitOk : kExitNegative;
}

int cmd_construct(const Flags& f, std::ostream& out) {
  const Algebra& algebra = algebra_by_name(f.algebra);
  if (!f.group.empty()) {
    if (algebra.name() != "4_7") throw UsageError("--group is only supported for 4_7");
    AbelianGroup g = AbelianGroup::parse(f.group);
    if (!abelian_4_7_representable(g).representable) {
      out << "NoConstruction\n";
      return kExitNegative;
    }
    Coloring c = construct_4_7_abelian(g);
    out << to_json(c).dump(f.json ? 2 : -1) << "\n";
    return kExitOk;
  }
  if (f.n < 1) throw UsageError("construct needs a positive n");
  ConstructionResult r = construct(algebra, f.n);
  if (const Coloring* c = std::get_if<Coloring>(&r)) {
    out << to_json(*c).dump(f.json ? 2 : -1) << "\n";
    return kExitOk;
  }
  if (f.json)
    out << json{{"result", sentinel_name(r)}}.dump(2) << "\n";
  else
    out << sentinel_name(r) << "\n";
  return kExitNegative;
}

int cmd_search(const Flags& f, std::ostream& out) {
  const Algebra& algebra = algebra_by_name(f.algebra);
  if (f.n < 1) throw UsageError("search needs --n");
  if (f.all || f.up_to_automorphism) {
    std::vector<PairClassMask> masks =
        find_all_masks(algebra, f.n, f.up_to_automorphism, f.limit);
    if (f.json) {
      json list = json::array();
      for (const PairClassMask& m : masks) list.push_back(to_json(m));
      out << json{{"algebra", algebra.name()}, {"n", f.n}, {"count", masks.size()},
                  {"representations", list}}
                 .dump(2)
          << "\n";
    } else {
      out << masks.size() << " representation(s) of " << algebra.name() << " over Z/" << f.n
          << (f.up_to_automorphism ? " up to automorphism" : "") << "\n";
      for (const PairClassMask& m : masks) {
        out << "  mask " << m.bits << "  ";
        print_coloring(out, expand(m));
      }
    }
    return masks.empty() ? kExitNegative : kExitOk;
  }
  if (f.n > f.limit) throw UsageError("--n exceeds --limit; use random or solve");
  if (f.limit > kMaxExhaustiveLimit) throw UsageError("--limit is capped at 64");
  std::optional<Coloring> found = find_representation(algebra, AbelianGroup::cyclic(f.n));
  if (f.json) {
    out << json{{"algebra", algebra.name()}, {"n", f.n}, {"exists", found.has_value()},
                {"coloring", found ? to_json(*found) : json(nullptr)}}
               .dump(2)
        << "\n";
  } else if (found) {
    out << "representation found: ";
    print_coloring(out, *found);
  } else {
    out << "no representation\n";
  }
  return found ? kExitOk : kExitNegative;
}

int cmd_spectrum(const Flags& f, std::ostream& out) {
  const Algebra& algebra = algebra_by_name(f.algebra);
  std::vector<int> values = spectrum(algebra, f.lo, f.hi, f.limit);
  if (f.json)
    out << json{{"algebra", algebra.name()}, {"lo", f.lo}, {"hi", f.hi}, {"spectrum", values}}
               .dump(2)
        << "\n";
  else
    out << "CySp(" << algebra.name() << ") on [" << f.lo << ", " << f.hi
        << "] = " << format_set(values) << "\n";
  return kExitOk;
}

int cmd_random(const Flags& f, std::ostream& out) {
  const Algebra& algebra = algebra_by_name(f.algebra);
  if (f.n < 1) throw UsageError("random needs --n");
  if (f.iters < 1) throw UsageError("--iters must be positive");
  std::optional<Coloring> found = random_search(algebra, f.n, f.iters, f.seed);
  if (f.json) {
    out << json{{"algebra", algebra.name()}, {"n", f.n}, {"seed", f.seed}, {"iters", f.iters},
                {"found", found.has_value()},
                {"coloring", found ? to_json(*found) : json(nullptr)}}
               .dump(2)
        << "\n";
  } else if (found) {
    out << "found: ";
    print_coloring(out, *found);
  } else {
    out << "NotFound after " << f.iters << " samples\n";
  }
  return found ? kExitOk : kExitNegative;
}

int cmd_cnf(const Flags& f, std::ostream& out) {
  const Algebra& algebra = algebra_by_name(f.algebra);
  if (f.n < 3) throw UsageError("cnf needs n >= 3");
  auto [formula, vm] = encode(algebra, f.n, {f.symmetry_break});
  std::string text = emit_dimacs(formula, &vm);
  if (f.dimacs.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(f.dimacs);
  if (!file) throw UsageError("cannot write " + f.dimacs);
  file << text;
  if (f.json)
    out << json{{"path", f.dimacs}, {"vars", formula.num_vars},
                {"clauses", formula.clauses.size()}}
               .dump(2)
        << "\n";
  else
    out << "wrote " << f.dimacs << " (" << formula.num_vars << " vars, "
        << formula.clauses.size() << " clauses)\n";
  return kExitOk;
}

int cmd_solve(const Flags& f, std::ostream& out) {
  const Algebra& algebra = algebra_by_name(f.algebra);
  if (f.n < 3) throw UsageError("solve needs n >= 3");
  auto [formula, vm] = encode(algebra, f.n, {f.symmetry_break});
  SolverStats stats;
  std::optional<Model> model = solve(formula, &stats);
  std::optional<Coloring> coloring;
  if (model) coloring = decode(*model, vm);
  if (f.json) {
    out << json{{"algebra", algebra.name()}, {"n", f.n}, {"sat", model.has_value()},
                {"coloring", coloring ? to_json(*coloring) : json(nullptr)},
                {"decisions", stats.decisions}, {"conflicts", stats.conflicts}}
               .dump(2)
        << "\n";
  } else if (coloring) {
    out << "SAT: ";
    print_coloring(out, *coloring);
  } else {
    out << "UNSAT\n";
  }
  return model ? kExitOk : kExitNegative;
}

int cmd_bounds(const Flags& f, std::ostream& out) {
  if (f.max < 3) throw UsageError("--max must be at least 3");
  const int threshold = union_bound_threshold();
  if (f.json) {
    json rows = json::array();
    for (int n = 3; n <= f.max; ++n) {
      BoundReport r = union_bound(n);
      rows.push_back({{"n", n}, {"p_value", r.p_value}, {"below_one", r.below_one}});
    }
    out << json{{"rows", rows}, {"union_bound_threshold", threshold}}.dump(2) << "\n";
    return kExitOk;
  }
  out << std::setw(5) << "n" << std::setw(16) << "3(n-1)(3/4)^((n-2)/2)" << std::setw(12)
      << "below_one" << "\n";
  for (int n = 3; n <= f.max; ++n) {
    BoundReport r = union_bound(n);
    out << std::setw(5) << n << std::setw(21) << std::setprecision(6) << r.p_value
        << std::setw(12) << (r.below_one ? "yes" : "no") << "\n";
  }
  out << "least n with union bound below 1 (random 7_7 colorings succeed with positive "
         "probability; not the representability threshold): "
      << threshold << "\n";
  return kExitOk;
}

int cmd_report(const Flags& f, std::ostream& out) {
  ReportOptions options;
  options.limit = f.limit;
  options.seed = f.seed;
  options.iters = f.iters;
  options.sat_limit = std::max(options.sat_limit, f.limit);
  SpectrumReport report = build_report(f.lo, f.hi, options);
  if (f.json) {
    out << to_json(report).dump(2) << "\n";
    return report.ok() ? kExitOk : kExitNegative;
  }
  std::size_t width = 10;
  for (const AlgebraRow& row : report.rows)
    width = std::max(width, format_set(row.computed_set()).size() + 2);
  out << "Cyclic spectra on [" << f.lo << ", " << f.hi << "]\n";
  out << std::left << std::setw(7) << "" << std::setw(16) << "Spec" << std::setw(30)
      << "Cyclic Spec" << std::setw(static_cast<int>(width)) << "computed" << "diff\n";
  for (const AlgebraRow& row : report.rows) {
    const Algebra& a = algebra_by_name(row.algebra);
    out << std::setw(7) << row.algebra << std::setw(16) << spec_text(a) << std::setw(30)
        << cyclic_spec_text(a) << std::setw(static_cast<int>(width)) << format_set(row.computed_set())
        << (row.diff.empty() ? "none" : format_set(row.diff)) << "\n";
  }
  out << "\nmethods used:\n";
  for (const AlgebraRow& row : report.rows) {
    std::array<int, 4> counts{};
    for (const ReportCell& c : row.cells) ++counts[static_cast<int>(c.method)];
    out << "  " << row.algebra << ":";
    for (Method m : {Method::Construction, Method::Exhaustive, Method::Sat, Method::Random})
      if (counts[static_cast<int>(m)])
        out << " " << to_string(m) << "=" << counts[static_cast<int>(m)];
    out << "\n";
  }
  out << (report.ok() ? "all rows match\n" : "MISMATCH\n");
  return report.ok() ? kExitOk : kExitNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic-group spectra of the symmetric integral relation algebras on three atoms",
               "cysp"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_flag("--json", f.json, "Print JSON instead of tables");

  auto algebra_arg = [&](CLI::App* sub) {
    sub->add_option("algebra", f.algebra, "Algebra name, 1_7 ... 7_7")->required();
  };

  auto* verify_cmd = app.add_subcommand("verify", "Check a coloring");
  algebra_arg(verify_cmd);
  verify_cmd->add_option("--n", f.n, "Cyclic group order");
  verify_cmd->add_option("--group", f.group, "Group, e.g. Z/8 or 4x3");
  verify_cmd->add_option("--A", f.a_list, "Comma-separated elements colored a");
  verify_cmd->add_option("--input", f.input, "Coloring JSON file ('-' for stdin)");

  auto* construct_cmd = app.add_subcommand("construct", "Closed-form representation");
  algebra_arg(construct_cmd);
  construct_cmd->add_option("n", f.n, "Cyclic group order");
  construct_cmd->add_option("--group", f.group, "Abelian group (4_7 only), e.g. 3x3");

  auto* search_cmd = app.add_subcommand("search", "Exhaustive search over Z/n");
  algebra_arg(search_cmd);
  search_cmd->add_option("--n", f.n, "Cyclic group order")->required();
  search_cmd->add_flag("--all", f.all, "List every representation");
  search_cmd->add_flag("--up-to-automorphism", f.up_to_automorphism,
                       "List one representative per unit-multiplication orbit");
  search_cmd->add_option("--limit", f.limit, "Exhaustive cap on n");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Exhaustive cyclic spectrum on a range");
  algebra_arg(spectrum_cmd);
  spectrum_cmd->add_option("--lo", f.lo, "Smallest n");
  spectrum_cmd->add_option("--hi", f.hi, "Largest n");
  spectrum_cmd->add_option("--limit", f.limit, "Exhaustive cap on n");

  auto* random_cmd = app.add_subcommand("random", "Random colorings of Z/n");
  algebra_arg(random_cmd);
  random_cmd->add_option("--n", f.n, "Cyclic group order")->required();
  random_cmd->add_option("--seed", f.seed, "Generator seed")->required();
  random_cmd->add_option("--iters", f.iters, "Number of samples");

  auto* cnf_cmd = app.add_subcommand("cnf", "Write the DIMACS encoding");
  algebra_arg(cnf_cmd);
  cnf_cmd->add_option("n", f.n, "Cyclic group order")->required();
  cnf_cmd->add_option("--dimacs", f.dimacs, "Output path (stdout when omitted)");
  cnf_cmd->add_flag("--symmetry-break", f.symmetry_break, "Force pair class 1 to color b");

  auto* solve_cmd = app.add_subcommand("solve", "Decide representability with the DPLL solver");
  algebra_arg(solve_cmd);
  solve_cmd->add_option("n", f.n, "Cyclic group order")->required();
  solve_cmd->add_flag("--symmetry-break", f.symmetry_break, "Force pair class 1 to color b");

  auto* bounds_cmd = app.add_subcommand("bounds", "Union bound table and threshold");
  bounds_cmd->add_option("--max", f.max, "Largest n in the table");

  auto* report_cmd = app.add_subcommand("report", "Recompute the cyclic spectrum table");
  report_cmd->add_option("--lo", f.lo, "Smallest n");
  report_cmd->add_option("--hi", f.hi, "Largest n");
  report_cmd->add_option("--limit", f.limit, "Exhaustive cap on n");
  report_cmd->add_option("--seed", f.seed, "Seed for random search beyond the SAT cap");
  report_cmd->add_option("--iters", f.iters, "Samples for random search");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (verify_cmd->parsed()) return cmd_verify(f, out);
    if (construct_cmd->parsed()) return cmd_construct(f, out);
    if (search_cmd->parsed()) return cmd_search(f, out);
    if (spectrum_cmd->parsed()) return cmd_spectrum(f, out);
    if (random_cmd->parsed()) return cmd_random(f, out);
    if (cnf_cmd->parsed()) return cmd_cnf(f, out);
    if (solve_cmd->parsed()) return cmd_solve(f, out);
    if (bounds_cmd->parsed()) return cmd_bounds(f, out);
    if (report_cmd->parsed()) return cmd_report(f, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cysp::cli

#include "cysp/report.hpp"

#include <stdexcept>

#include "cysp/constructions.hpp"
#include "cysp/group.hpp"
#include "cysp/sat.hpp"

namespace cysp {

bool expected_cyclic_spec(const Algebra& algebra, int n) {
  const std::string& name = algebra.name();
  if (name == "1_7") return n == 4;
  if (name == "2_7" || name == "3_7") return n >= 6 && n % 2 == 0;
  if (name == "4_7") return n >= 9 && !is_prime(n) && !(n % 2 == 0 && is_prime(n / 2));
  if (name == "5_7") return n == 5;
  if (name == "6_7") return n == 8 || n >= 11;
  if (name == "7_7") return n >= 12;
  throw std::invalid_argument("no table entry for algebra " + name);
}

std::string_view spec_text(const Algebra& algebra) {
  const std::string& name = algebra.name();
  if (name == "1_7") return "{4}";
  if (name == "2_7") return "{n >= 6}";
  if (name == "3_7") return "{2k : k >= 3}";
  if (name == "4_7") return "{n >= 9}";
  if (name == "5_7") return "{5}";
  if (name == "6_7") return "{n >= 8}";
  return "{n >= 9}";
}

std::string_view cyclic_spec_text(const Algebra& algebra) {
  const std::string& name = algebra.name();
  if (name == "1_7") return "{4}";
  if (name == "2_7") return "{2k : k >= 3}";
  if (name == "3_7") return "{2k : k >= 3}";
  if (name == "4_7") return "{n >= 9} \\ {p, 2p : p prime}";
  if (name == "5_7") return "{5}";
  if (name == "6_7") return "{8} u {n >= 11}";
  return "{n >= 12}";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Construction: return "construction";
    case Method::Exhaustive: return "exhaustive";
    case Method::Sat: return "sat";
    case Method::Random: return "random";
  }
  return "?";
}

std::vector<int> AlgebraRow::computed_set() const {
  std::vector<int> out;
  for (const ReportCell& c : cells)
    if (c.computed) out.push_back(c.n);
  return out;
}

bool SpectrumReport::ok() const {
  for (const AlgebraRow& r : rows)
    if (!r.diff.empty()) return false;
  return true;
}

ReportCell evaluate_cell(const Algebra& algebra, int n, const ReportOptions& options) {
  ReportCell cell;
  cell.n = n;
  cell.expected = expected_cyclic_spec(algebra, n);
  if (std::holds_alternative<Coloring>(construct(algebra, n))) {
    cell.computed = true;
    cell.method = Method::Construction;
  } else if (n <= options.limit) {
    cell.computed = exists(algebra, n, options.limit);
    cell.method = Method::Exhaustive;
  } else if (n <= options.sat_limit) {
    auto [formula, vm] = encode(algebra, n);
    std::optional<Model> model = solve(formula);
    if (model) decode(*model, vm);
    cell.computed = model.has_value();
    cell.method = Method::Sat;
  } else {
    cell.computed = random_search(algebra, n, options.iters, options.seed).has_value();
    cell.method = Method::Random;
  }
  return cell;
}

AlgebraRow report_row(const Algebra& algebra, int lo, int hi, const ReportOptions& options) {
  AlgebraRow row;
  row.algebra = algebra.name();
  for (int n = lo; n <= hi; ++n) {
    row.cells.push_back(evaluate_cell(algebra, n, options));
    if (row.cells.back().computed != row.cells.back().expected) row.diff.push_back(n);
  }
  return row;
}

SpectrumReport build_report(int lo, int hi, const ReportOptions& options) {
  if (lo < 1 || lo > hi) throw std::invalid_argument("report: need 1 <= lo <= hi");
  SpectrumReport report{lo, hi, {}};
  for (const Algebra& a : catalog()) report.rows.push_back(report_row(a, lo, hi, options));
  return report;
}

std::string format_set(const std::vector<int>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size();) {
    std::size_t j = i;
    while (j + 1 < values.size() && values[j + 1] == values[j] + 1) ++j;
    if (i) out += ", ";
    out += std::to_string(values[i]);
    if (j >= i + 2) {
      out += ".." + std::to_string(values[j]);
    } else if (j == i + 1) {
      out += ", " + std::to_string(values[j]);
    }
    i = j + 1;
  }
  return out + "}";
}

}  // namespace cysp

#pragma once

// Recomputes the cyclic spectrum of every catalog algebra over a range and
// compares it with the closed-form predicates of the summary table.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cysp/algebra.hpp"
#include "cysp/search.hpp"

namespace cysp {

// Closed-form cyclic spectrum membership:
//   1_7 {4}; 2_7, 3_7 even n >= 6; 4_7 n >= 9, not p or 2p for a prime p
//   (n composite); 5_7 {5}; 6_7 {8} u {n >= 11}; 7_7 n >= 12.
bool expected_cyclic_spec(const Algebra& algebra, int n);

// Static table text: the full spectrum and the cyclic spectrum.
std::string_view spec_text(const Algebra& algebra);
std::string_view cyclic_spec_text(const Algebra& algebra);

enum class Method { Construction, Exhaustive, Sat, Random };

std::string_view to_string(Method m);

struct ReportOptions {
  int limit = kDefaultExhaustiveLimit;  // exhaustive search up to this n
  int sat_limit = 64;                   // then SAT up to this n, random beyond
  std::uint64_t seed = 1;
  long long iters = 10000;
};

struct ReportCell {
  int n = 0;
  bool expected = false;
  bool computed = false;
  Method method = Method::Exhaustive;
};

struct AlgebraRow {
  std::string algebra;
  std::vector<ReportCell> cells;
  std::vector<int> diff;  // n where computed != expected

  std::vector<int> computed_set() const;
};

struct SpectrumReport {
  int lo = 0;
  int hi = 0;
  std::vector<AlgebraRow> rows;

  bool ok() const;
};

// One cell, using the cheapest applicable method: a closed-form construction,
// else exhaustive search (n <= limit), else SAT (n <= sat_limit), else random
// search with the given seed.
ReportCell evaluate_cell(const Algebra& algebra, int n, const ReportOptions& options);

AlgebraRow report_row(const Algebra& algebra, int lo, int hi, const ReportOptions& options);

// Throws std::invalid_argument unless 1 <= lo <= hi.
SpectrumReport build_report(int lo, int hi, const ReportOptions& options = {});

// Compact set notation, e.g. "{8, 11..40}".
std::string format_set(const std::vector<int>& values);

}  // namespace cysp

#pragma once

// Propositional encoding of "algebra is representable over Z/nZ", DIMACS
// text I/O, and a small DPLL solver.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cysp/algebra.hpp"
#include "cysp/verifier.hpp"

namespace cysp {

using Literal = int;  // nonzero; negative means negated
using Clause = std::vector<Literal>;

struct CnfFormula {
  int num_vars = 0;
  std::vector<Clause> clauses;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

// Every literal names a variable in [1, num_vars], no clause is empty and no
// clause holds both x and -x.
bool is_well_formed(const CnfFormula& f);

// Auxiliary variable: "x is colored c1 and y is colored c2", one of the
// witnesses for the need (c1, c2) of z colored c3.
struct AuxVar {
  int var = 0;
  Element z = 0;
  Color z_color = Color::A;
  Need need{Color::A, Color::A};
  Element x = 0;
  Element y = 0;
};

struct VarMap {
  std::string algebra;
  int n = 0;
  int num_base = 0;  // variable i in [1, num_base] is pair class {i, n - i}; true = a
  std::vector<AuxVar> aux;

  // Variable of the pair class containing nonzero x.
  int base_var(Element x) const { return x <= n / 2 ? x : n - x; }
};

struct EncodeOptions {
  // Adds the unit clause "pair class 1 is colored b". This is a search
  // heuristic, not an equivalence: it can remove every model when all
  // representations color 1 with a.
  bool symmetry_break = false;
};

// Satisfiable iff algebra has a representation over Z/n. Throws
// std::invalid_argument for n < 3.
std::pair<CnfFormula, VarMap> encode(const Algebra& algebra, int n, EncodeOptions options = {});

// "p cnf V C" header and one " 0"-terminated line per clause. When a VarMap
// is given, "c " comment lines describing it precede the header.
std::string emit_dimacs(const CnfFormula& f, const VarMap* vm = nullptr);

// Reads DIMACS CNF, skipping comment lines. Throws std::invalid_argument on
// malformed input.
CnfFormula parse_dimacs(std::string_view text);

// values[v] for v in [1, num_vars]; values[0] unused.
struct Model {
  std::vector<bool> values;

  bool operator[](int var) const { return values[var]; }
  bool satisfies(Literal lit) const { return lit > 0 ? values[lit] : !values[-lit]; }
};

bool satisfies(const Model& model, const CnfFormula& f);

struct SolverStats {
  long long decisions = 0;
  long long propagations = 0;
  long long conflicts = 0;
};

// DPLL with two-watched-literal unit propagation and chronological
// backtracking. Decisions take the lowest unassigned variable, false first.
// Returns a model satisfying every clause, or std::nullopt when unsatisfiable.
std::optional<Model> solve(const CnfFormula& f, SolverStats* stats = nullptr);

// Reads the base variables of a model into a coloring of Z/n. Throws
// std::logic_error when the coloring does not verify.
Coloring decode(const Model& model, const VarMap& vm);

}  // namespace cysp

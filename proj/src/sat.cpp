#include "cysp/sat.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cysp {

bool is_well_formed(const CnfFormula& f) {
  if (f.num_vars < 0) return false;
  for (const Clause& c : f.clauses) {
    if (c.empty()) return false;
    for (Literal l : c) {
      if (l == 0 || std::abs(l) > f.num_vars) return false;
      if (std::find(c.begin(), c.end(), -l) != c.end()) return false;
    }
  }
  return true;
}

namespace {

// Literal order inside a clause: by variable, negative first.
void normalize(Clause& c) {
  std::sort(c.begin(), c.end(), [](Literal a, Literal b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
    return a < b;
  });
  c.erase(std::unique(c.begin(), c.end()), c.end());
}

bool tautology(const Clause& c) {
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] == -c[i - 1]) return true;
  return false;
}

}  // namespace

std::pair<CnfFormula, VarMap> encode(const Algebra& algebra, int n, EncodeOptions options) {
  if (n < 3) throw std::invalid_argument("encode requires n >= 3");
  VarMap vm;
  vm.algebra = algebra.name();
  vm.n = n;
  vm.num_base = n / 2;
  CnfFormula f;
  f.num_vars = vm.num_base;

  auto lit = [&](Element x, Color c) {
    int v = vm.base_var(x);
    return c == Color::A ? v : -v;
  };

  // Absent cycles: no x + y = z may carry a forbidden color pattern.
  std::set<Clause> seen;
  for (Element x = 1; x < n; ++x) {
    for (Element y = x; y < n; ++y) {
      Element z = (x + y) % n;
      if (z == 0) continue;
      for (Color cx : kColors)
        for (Color cy : kColors)
          for (Color cz : kColors) {
            if (!algebra.is_forbidden(cycle_of(cx, cy, cz))) continue;
            Clause c{-lit(x, cx), -lit(y, cy), -lit(z, cz)};
            normalize(c);
            if (tautology(c)) continue;
            if (seen.insert(c).second) f.clauses.push_back(std::move(c));
          }
    }
  }

  // Needs: z colored c3 implies some witnessing pair. z ranges over pair
  // class representatives; -z has the mirrored witnesses.
  for (Element z = 1; z <= n / 2; ++z) {
    for (Color c3 : kColors) {
      for (const Need& need : needs_of(algebra, c3)) {
        Clause requirement{-lit(z, c3)};
        for (Element x = 1; x < n; ++x) {
          Element y = ((z - x) % n + n) % n;
          if (y == 0 || y < x) continue;
          std::vector<std::pair<Color, Color>> patterns{{need.first, need.second}};
          if (need.first != need.second && x != y) patterns.emplace_back(need.second, need.first);
          for (auto [cx, cy] : patterns) {
            Literal lx = lit(x, cx), ly = lit(y, cy);
            if (lx == -ly) continue;
            int aux = ++f.num_vars;
            vm.aux.push_back({aux, z, c3, need, x, y});
            f.clauses.push_back({-aux, lx});
            if (ly != lx) f.clauses.push_back({-aux, ly});
            requirement.push_back(aux);
          }
        }
        normalize(requirement);
        f.clauses.push_back(std::move(requirement));
      }
    }
  }

  // Both atoms nonempty.
  Clause some_a, some_b;
  for (int v = 1; v <= vm.num_base; ++v) {
    some_a.push_back(v);
    some_b.push_back(-v);
  }
  f.clauses.push_back(std::move(some_a));
  f.clauses.push_back(std::move(some_b));

  if (options.symmetry_break) f.clauses.push_back({-1});
  return {std::move(f), std::move(vm)};
}

std::string emit_dimacs(const CnfFormula& f, const VarMap* vm) {
  std::ostringstream out;
  if (vm) {
    out << "c cysp representability of " << vm->algebra << " over Z/" << vm->n << "\n";
    out << "c base variables 1.." << vm->num_base
        << ": variable i is the pair class {i, n-i}, true = a\n";
    for (const AuxVar& a : vm->aux)
      out << "c aux " << a.var << " z=" << a.z << " color=" << to_string(a.z_color)
          << " need=" << to_string(a.need) << " x=" << a.x << " y=" << a.y << "\n";
  }
  out << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
  for (const Clause& c : f.clauses) {
    for (Literal l : c) out << l << " ";
    out << "0\n";
  }
  return out.str();
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  CnfFormula f;
  long long declared = -1;
  Clause current;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == 'c' || line[start] == '%') continue;
    std::istringstream tokens(line.substr(start));
    if (line[start] == 'p') {
      std::string p, cnf;
      if (declared >= 0 || !(tokens >> p >> cnf >> f.num_vars >> declared) || cnf != "cnf" ||
          f.num_vars < 0 || declared < 0)
        throw std::invalid_argument("malformed DIMACS header: " + line);
      continue;
    }
    if (declared < 0) throw std::invalid_argument("DIMACS clause before header");
    long long value;
    while (tokens >> value) {
      if (value == 0) {
        if (current.empty()) throw std::invalid_argument("empty clause in DIMACS input");
        f.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (std::llabs(value) > f.num_vars)
        throw std::invalid_argument("literal " + std::to_string(value) + " exceeds num_vars");
      current.push_back(static_cast<Literal>(value));
    }
    if (!tokens.eof()) throw std::invalid_argument("non-numeric token in DIMACS clause: " + line);
  }
  if (declared < 0) throw std::invalid_argument("missing DIMACS header");
  if (!current.empty()) throw std::invalid_argument("unterminated DIMACS clause");
  if (static_cast<long long>(f.clauses.size()) != declared)
    throw std::invalid_argument("DIMACS header declares " + std::to_string(declared) +
                                " clauses, found " + std::to_string(f.clauses.size()));
  return f;
}

bool satisfies(const Model& model, const CnfFormula& f) {
  if (static_cast<int>(model.values.size()) != f.num_vars + 1) return false;
  for (const Clause& c : f.clauses)
    if (std::none_of(c.begin(), c.end(), [&](Literal l) { return model.satisfies(l); }))
      return false;
  return true;
}

namespace {

class Dpll {
 public:
  explicit Dpll(const CnfFormula& f) : num_vars_(f.num_vars), value_(f.num_vars + 1, kUnset) {
    watches_.resize(2 * (static_cast<std::size_t>(num_vars_) + 1));
    for (const Clause& c : f.clauses) {
      Clause copy = c;
      normalize(copy);
      if (tautology(copy)) continue;
      if (copy.size() == 1) {
        units_.push_back(copy[0]);
        continue;
      }
      int idx = static_cast<int>(clauses_.size());
      watches_[code(copy[0])].push_back(idx);
      watches_[code(copy[1])].push_back(idx);
      clauses_.push_back(std::move(copy));
    }
  }

  std::optional<Model> run(SolverStats& stats) {
    for (Literal u : units_) {
      if (value_of(u) == kFalse) return std::nullopt;
      if (value_of(u) == kUnset) assign(u);
    }
    struct Decision {
      std::size_t trail_size;
      Literal lit;
      bool flipped;
    };
    std::vector<Decision> decisions;
    int cursor = 1;
    while (true) {
      if (!propagate(stats)) {
        ++stats.conflicts;
        while (!decisions.empty() && decisions.back().flipped) {
          undo(decisions.back().trail_size, cursor);
          decisions.pop_back();
        }
        if (decisions.empty()) return std::nullopt;
        Decision& d = decisions.back();
        undo(d.trail_size, cursor);
        d.flipped = true;
        d.lit = -d.lit;
        assign(d.lit);
        continue;
      }
      while (cursor <= num_vars_ && value_[cursor] != kUnset) ++cursor;
      if (cursor > num_vars_) break;
      ++stats.decisions;
      decisions.push_back({trail_.size(), -cursor, false});
      assign(-cursor);
    }
    Model m;
    m.values.assign(num_vars_ + 1, false);
    for (int v = 1; v <= num_vars_; ++v) m.values[v] = value_[v] == kTrue;
    return m;
  }

 private:
  static constexpr signed char kUnset = -1, kFalse = 0, kTrue = 1;

  static std::size_t code(Literal l) {
    return 2 * static_cast<std::size_t>(std::abs(l)) + (l < 0 ? 1 : 0);
  }

  signed char value_of(Literal l) const {
    signed char v = value_[std::abs(l)];
    if (v == kUnset) return kUnset;
    return (l > 0) == (v == kTrue) ? kTrue : kFalse;
  }

  void assign(Literal l) {
    value_[std::abs(l)] = l > 0 ? kTrue : kFalse;
    trail_.push_back(l);
  }

  void undo(std::size_t size, int& cursor) {
    while (trail_.size() > size) {
      int v = std::abs(trail_.back());
      value_[v] = kUnset;
      cursor = std::min(cursor, v);
      trail_.pop_back();
    }
    head_ = std::min(head_, trail_.size());
  }

  // False on conflict.
  bool propagate(SolverStats& stats) {
    while (head_ < trail_.size()) {
      const Literal falsified = -trail_[head_++];
      ++stats.propagations;
      std::vector<int>& watching = watches_[code(falsified)];
      std::size_t keep = 0;
      bool conflict = false;
      for (std::size_t i = 0; i < watching.size(); ++i) {
        const int idx = watching[i];
        if (conflict) {
          watching[keep++] = idx;
          continue;
        }
        Clause& c = clauses_[idx];
        if (c[0] == falsified) std::swap(c[0], c[1]);
        if (value_of(c[0]) == kTrue) {
          watching[keep++] = idx;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.size(); ++k) {
          if (value_of(c[k]) != kFalse) {
            std::swap(c[1], c[k]);
            watches_[code(c[1])].push_back(idx);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        watching[keep++] = idx;
        if (value_of(c[0]) == kFalse) {
          conflict = true;
        } else {
          assign(c[0]);
        }
      }
      watching.resize(keep);
      if (conflict) return false;
    }
    return true;
  }

  int num_vars_;
  std::vector<signed char> value_;
  std::vector<Clause> clauses_;
  std::vector<Literal> units_;
  std::vector<std::vector<int>> watches_;
  std::vector<Literal> trail_;
  std::size_t head_ = 0;
};

}  // namespace

std::optional<Model> solve(const CnfFormula& f, SolverStats* stats) {
  if (!is_well_formed(f)) throw std::invalid_argument("solve: formula is not well formed");
  SolverStats local;
  std::optional<Model> model = Dpll(f).run(stats ? *stats : local);
  if (model && !satisfies(*model, f)) throw std::logic_error("solver produced a non-model");
  return model;
}

Coloring decode(const Model& model, const VarMap& vm) {
  if (static_cast<int>(model.values.size()) <= vm.num_base)
    throw std::invalid_argument("decode: model is shorter than the base variables");
  std::vector<Element> a;
  for (Element x = 1; x < vm.n; ++x)
    if (model[vm.base_var(x)]) a.push_back(x);
  Coloring c(AbelianGroup::cyclic(vm.n), a);
  if (!verify(algebra_by_name(vm.algebra), c).empty())
    throw std::logic_error("decoded model does not verify for " + vm.algebra + " over Z/" +
                           std::to_string(vm.n));
  return c;
}

}  // namespace cysp

#pragma once

// Colorings of a group's nonzero elements and the representation check.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cysp/algebra.hpp"
#include "cysp/group.hpp"

namespace cysp {

// A candidate representation: the nonzero elements split into A and B.
// Only membership in A is stored; B is the rest of the nonzero elements.
class Coloring {
 public:
  // Throws std::invalid_argument for elements outside the group or equal to 0.
  Coloring(AbelianGroup group, std::span<const Element> set_a);

  const AbelianGroup& group() const { return group_; }
  int order() const { return group_.order(); }

  // Color of a nonzero element; std::nullopt for the identity.
  std::optional<Color> color_of(Element x) const {
    if (x == 0) return std::nullopt;
    return in_a_[x] ? Color::A : Color::B;
  }
  bool in_a(Element x) const { return x != 0 && in_a_[x]; }
  bool in_b(Element x) const { return x != 0 && !in_a_[x]; }

  std::vector<Element> set_a() const;
  std::vector<Element> set_b() const;

  // Image under x -> u*x; a bijection of Z/n when gcd(u, n) = 1.
  Coloring scaled(int u) const;

  friend bool operator==(const Coloring& l, const Coloring& r) {
    return l.group_ == r.group_ && l.in_a_ == r.in_a_;
  }

 private:
  AbelianGroup group_;
  std::vector<char> in_a_;
};

enum class ViolationKind {
  ForbiddenCycleWitnessed,
  NeedUnmet,
  EmptyAtom,
  NotSymmetric,
};

std::string_view to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  Element z = 0;
  // Absent class witnessed (ForbiddenCycleWitnessed), or the mandatory class
  // whose need is unmet (NeedUnmet). Empty for structural violations.
  std::optional<CycleClass> cycle;
  // Lexicographically least (x, y) with x + y = z; ForbiddenCycleWitnessed only.
  std::optional<std::pair<Element, Element>> witnesses;
  // The empty atom (EmptyAtom) or the color of z (NotSymmetric).
  std::optional<Color> color;

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string describe(const Violation& v);

// Every violation, sorted by (z, kind, cycle). Empty iff `coloring`
// represents `algebra`. Structural problems (asymmetry, an empty atom) are
// reported alone and suppress the cycle checks.
std::vector<Violation> verify(const Algebra& algebra, const Coloring& coloring);

// Structural violations only.
std::vector<Violation> structural_violations(const Coloring& coloring);

// Same decision as verify(...).empty(), stopping at the first failure.
bool is_representation(const Algebra& algebra, const Coloring& coloring);

// Literal sum-sets A+A, A+B, B+B compared with composition_law(algebra).
// False for structurally invalid colorings.
bool verify_by_sumsets(const Algebra& algebra, const Coloring& coloring);

}  // namespace cysp

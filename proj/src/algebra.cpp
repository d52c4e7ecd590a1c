#include "cysp/algebra.hpp"

#include <stdexcept>
#include <utility>

namespace cysp {

std::string_view to_string(Color c) { return c == Color::A ? "a" : "b"; }

std::string_view to_string(CycleClass c) {
  switch (c) {
    case CycleClass::AAA: return "aaa";
    case CycleClass::BBB: return "bbb";
    case CycleClass::ABB: return "abb";
    case CycleClass::BAA: return "baa";
  }
  return "?";
}

CycleClass cycle_of(Color x, Color y, Color z) {
  int bs = (x == Color::B) + (y == Color::B) + (z == Color::B);
  switch (bs) {
    case 0: return CycleClass::AAA;
    case 1: return CycleClass::BAA;
    case 2: return CycleClass::ABB;
    default: return CycleClass::BBB;
  }
}

int multiplicity(CycleClass cycle, Color c) {
  int bs = 0;
  switch (cycle) {
    case CycleClass::AAA: bs = 0; break;
    case CycleClass::BAA: bs = 1; break;
    case CycleClass::ABB: bs = 2; break;
    case CycleClass::BBB: bs = 3; break;
  }
  return c == Color::B ? bs : 3 - bs;
}

Algebra::Algebra(std::string name, std::vector<CycleClass> mandatory) : name_(std::move(name)) {
  for (CycleClass c : mandatory) mandatory_[static_cast<int>(c)] = true;
}

std::vector<CycleClass> Algebra::mandatory() const {
  std::vector<CycleClass> out;
  for (CycleClass c : kCycleClasses)
    if (is_mandatory(c)) out.push_back(c);
  return out;
}

std::vector<CycleClass> Algebra::forbidden() const {
  std::vector<CycleClass> out;
  for (CycleClass c : kCycleClasses)
    if (is_forbidden(c)) out.push_back(c);
  return out;
}

const std::vector<Algebra>& catalog() {
  using enum CycleClass;
  static const std::vector<Algebra> algebras{
      Algebra("1_7", {ABB}),
      Algebra("2_7", {AAA, ABB}),
      Algebra("3_7", {BBB, ABB}),
      Algebra("4_7", {AAA, BBB, ABB}),
      Algebra("5_7", {ABB, BAA}),
      Algebra("6_7", {AAA, ABB, BAA}),
      Algebra("7_7", {AAA, BBB, ABB, BAA}),
  };
  return algebras;
}

const Algebra& algebra_by_name(std::string_view name) {
  for (const Algebra& a : catalog()) {
    if (a.name() == name) return a;
    // "17" for "1_7"
    if (name.size() == 2 && name[0] == a.name()[0] && name[1] == '7') return a;
  }
  throw std::invalid_argument("unknown algebra '" + std::string(name) +
                              "' (expected one of 1_7 ... 7_7)");
}

std::string to_string(const ResultSet& r) {
  std::string out;
  auto append = [&](std::string_view part) {
    if (!out.empty()) out += " u ";
    out += part;
  };
  if (r.a) append("A");
  if (r.b) append("B");
  if (r.id) append("Id");
  return out.empty() ? "{}" : out;
}

const ResultSet& CompositionLaw::operator()(Color c1, Color c2) const {
  if (c1 != c2) return ab;
  return c1 == Color::A ? aa : bb;
}

CompositionLaw composition_law(const Algebra& algebra) {
  auto law_for = [&](Color c1, Color c2) {
    ResultSet r;
    r.id = (c1 == c2);
    r.a = algebra.is_mandatory(cycle_of(c1, c2, Color::A));
    r.b = algebra.is_mandatory(cycle_of(c1, c2, Color::B));
    return r;
  };
  return CompositionLaw{law_for(Color::A, Color::A), law_for(Color::A, Color::B),
                        law_for(Color::B, Color::B)};
}

std::string to_string(const Need& n) {
  return std::string(to_string(n.first)) + std::string(to_string(n.second));
}

std::vector<Need> needs_of(const Algebra& algebra, Color c3) {
  std::vector<Need> out;
  for (CycleClass cycle : algebra.mandatory()) {
    int with_c3 = multiplicity(cycle, c3);
    if (with_c3 == 0) continue;
    // Remove one c3; the remaining two colors form the need.
    int bs = multiplicity(cycle, Color::B) - (c3 == Color::B ? 1 : 0);
    Need need{bs == 2 ? Color::B : Color::A, bs == 0 ? Color::A : Color::B};
    out.push_back(need);
  }
  return out;
}

}  // namespace cysp

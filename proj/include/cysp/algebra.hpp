#pragma once

// Cycle structures of the seven symmetric integral relation algebras on
// three atoms (identity 1', diversity atoms a and b), and the sum-set
// composition law a coloring of a group must satisfy to represent them.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cysp {

enum class Color : std::uint8_t { A = 0, B = 1 };

inline constexpr std::array<Color, 2> kColors{Color::A, Color::B};

inline constexpr Color other(Color c) { return c == Color::A ? Color::B : Color::A; }

std::string_view to_string(Color c);

// Diversity cycles up to Peircean equivalence. With symmetric atoms a cycle
// is determined by the multiset of its three colors.
enum class CycleClass : std::uint8_t {
  AAA = 0,  // {a, a, a}
  BBB = 1,  // {b, b, b}
  ABB = 2,  // {a, b, b}
  BAA = 3,  // {b, a, a}
};

inline constexpr std::array<CycleClass, 4> kCycleClasses{
    CycleClass::AAA, CycleClass::BBB, CycleClass::ABB, CycleClass::BAA};

std::string_view to_string(CycleClass c);

// Classifies the multiset {x, y, z}.
CycleClass cycle_of(Color x, Color y, Color z);

// Number of occurrences of `c` in the multiset of `cycle`.
int multiplicity(CycleClass cycle, Color c);

class Algebra {
 public:
  Algebra(std::string name, std::vector<CycleClass> mandatory);

  const std::string& name() const { return name_; }
  bool is_mandatory(CycleClass c) const { return mandatory_[static_cast<int>(c)]; }
  bool is_forbidden(CycleClass c) const { return !is_mandatory(c); }

  // Mandatory classes in the fixed order aaa, bbb, abb, baa.
  std::vector<CycleClass> mandatory() const;
  std::vector<CycleClass> forbidden() const;

  friend bool operator==(const Algebra& a, const Algebra& b) { return a.name_ == b.name_; }

 private:
  std::string name_;
  std::array<bool, 4> mandatory_{};
};

// The seven algebras in Maddux order 1_7 ... 7_7.
const std::vector<Algebra>& catalog();

// Accepts "1_7" ... "7_7" and the aliases "17" ... "77".
// Throws std::invalid_argument for anything else.
const Algebra& algebra_by_name(std::string_view name);

// Which of {Id, A, B} a sum-set c1 + c2 must equal.
struct ResultSet {
  bool id = false;
  bool a = false;
  bool b = false;

  bool contains(Color c) const { return c == Color::A ? a : b; }
  friend bool operator==(const ResultSet&, const ResultSet&) = default;
};

std::string to_string(const ResultSet& r);

struct CompositionLaw {
  ResultSet aa;
  ResultSet ab;
  ResultSet bb;

  const ResultSet& operator()(Color c1, Color c2) const;
  friend bool operator==(const CompositionLaw&, const CompositionLaw&) = default;
};

// A diversity color c3 lies in c1 + c2 exactly when {c1, c2, c3} is
// mandatory; Id lies in c + c for both colors.
CompositionLaw composition_law(const Algebra& algebra);

// Unordered color pair with first <= second (A < B).
struct Need {
  Color first;
  Color second;

  friend bool operator==(const Need&, const Need&) = default;
};

std::string to_string(const Need& n);

// Every element colored c3 must be the sum of a pair colored (first, second)
// for each returned need. The ab/ba needs are one entry. Order follows the
// mandatory cycle order.
std::vector<Need> needs_of(const Algebra& algebra, Color c3);

}  // namespace cysp

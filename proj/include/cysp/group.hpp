#pragma once

// Finite abelian groups Z/n1 x ... x Z/nk with computed (table-free)
// arithmetic. Elements are integers in [0, order): the mixed-radix index of
// the residue tuple, first factor most significant. For a cyclic group the
// index is the canonical residue itself.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cysp {

using Element = int;

class AbelianGroup {
 public:
  // Largest order the library accepts.
  static constexpr int kMaxOrder = 4096;

  explicit AbelianGroup(std::vector<int> factors);

  static AbelianGroup cyclic(int n) { return AbelianGroup({n}); }

  // "Z/8", "8", "4x3", "Z/4xZ/3" (also 'X' and '*' as separators).
  static AbelianGroup parse(std::string_view text);

  const std::vector<int>& factors() const { return factors_; }
  int order() const { return order_; }
  bool is_cyclic() const { return factors_.size() == 1; }

  // "Z/8" for cyclic groups, "4x3" for products.
  std::string name() const;

  Element add(Element x, Element y) const;
  Element neg(Element x) const;
  Element sub(Element x, Element y) const { return add(x, neg(y)); }
  // x added to itself k times.
  Element times(Element x, int k) const;

  std::vector<int> to_tuple(Element x) const;
  Element from_tuple(const std::vector<int>& residues) const;

  bool contains(Element x) const { return x >= 0 && x < order_; }

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<int> factors_;
  std::vector<int> strides_;
  int order_ = 1;
};

struct Subgroup {
  AbelianGroup parent;
  std::vector<Element> elements;  // sorted ascending, contains 0

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(Element x) const;
};

// Subgroup with exactly d elements. For Z/n this is the multiples of n/d; for
// products d's prime powers are distributed greedily over the factors in
// order. Throws std::invalid_argument unless d divides the group order.
Subgroup subgroup_of_order(const AbelianGroup& group, int d);

// Closure, identity and negation checked by direct enumeration.
bool is_subgroup(const AbelianGroup& group, const std::vector<Element>& elements);

// u in [1, n) with gcd(u, n) = 1, ascending.
std::vector<int> units(int n);

// Partition of the group into cosets of h, identity coset first, the rest
// ordered by least element; each coset sorted.
std::vector<std::vector<Element>> cosets(const AbelianGroup& group, const Subgroup& h);

// Positive divisors of n, ascending.
std::vector<int> divisors(int n);

bool is_prime(int n);

// All factor lists of abelian groups of order n in invariant-factor form
// (n1 | n2 | ... | nk), one per isomorphism class.
std::vector<std::vector<int>> abelian_groups_of_order(int n);

}  // namespace cysp

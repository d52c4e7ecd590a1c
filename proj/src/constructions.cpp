#include "cysp/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace cysp {

namespace {

// Closed interval [lo, hi].
void append_interval(std::vector<Element>& out, int lo, int hi) {
  for (int x = lo; x <= hi; ++x) out.push_back(x);
}

std::vector<Element> complement_in(int n, const std::vector<Element>& b) {
  std::vector<char> in_b(n, 0);
  for (Element x : b) in_b[x] = 1;
  std::vector<Element> a;
  for (Element x = 1; x < n; ++x)
    if (!in_b[x]) a.push_back(x);
  return a;
}

Coloring checked(const Algebra& algebra, Coloring c) {
  if (!verify(algebra, c).empty())
    throw std::logic_error("construction for " + algebra.name() + " over " + c.group().name() +
                           " failed verification");
  return c;
}

Coloring from_a(const Algebra& algebra, int n, const std::vector<Element>& a) {
  return checked(algebra, Coloring(AbelianGroup::cyclic(n), a));
}

Coloring from_b(const Algebra& algebra, int n, const std::vector<Element>& b) {
  return from_a(algebra, n, complement_in(n, b));
}

}  // namespace

std::string_view sentinel_name(const ConstructionResult& r) {
  if (std::holds_alternative<NoConstruction>(r)) return "NoConstruction";
  if (std::holds_alternative<NoClosedForm>(r)) return "NoClosedForm";
  return "Coloring";
}

std::vector<Element> sumfree_6_7(int n) {
  if (n <= 10) throw std::invalid_argument("sumfree_6_7 requires n >= 11");
  std::vector<Element> b;
  if (n % 3 == 2) {
    int k = (n - 2) / 3;
    append_interval(b, k + 1, 2 * k + 1);
  } else if (n % 3 == 1) {
    int k = (n - 1) / 3;
    b.push_back(k);
    append_interval(b, k + 2, 2 * k - 1);
    b.push_back(2 * k + 1);
  } else if (n % 6 == 0) {
    int k = n / 6;
    append_interval(b, k, 2 * k - 1);
    append_interval(b, 4 * k + 1, 5 * k);
  } else {
    int k = (n - 3) / 6;
    append_interval(b, k, 2 * k - 1);
    append_interval(b, 4 * k + 4, 5 * k + 3);
  }
  return b;
}

std::optional<int> least_4_7_divisor(int n) {
  for (int k = 3; k <= n; ++k)
    if (n % k == 0 && n / k > 2) return k;
  return std::nullopt;
}

ConstructionResult construct(const Algebra& algebra, int n) {
  if (n < 1) throw std::invalid_argument("construct: n must be positive");
  const std::string& name = algebra.name();
  if (name == "1_7") {
    if (n == 4) return from_a(algebra, 4, {2});
    return NoConstruction{};
  }
  if (name == "2_7") {
    if (n < 6 || n % 2) return NoConstruction{};
    std::vector<Element> evens;
    for (int x = 2; x < n; x += 2) evens.push_back(x);
    return from_a(algebra, n, evens);
  }
  if (name == "3_7") {
    // The atom whose square is the identity is a here (cycles bbb, abb).
    if (n < 6 || n % 2) return NoConstruction{};
    return from_a(algebra, n, {n / 2});
  }
  if (name == "4_7") {
    auto k = least_4_7_divisor(n);
    if (!k) return NoConstruction{};
    return construct_4_7_abelian(AbelianGroup::cyclic(n));
  }
  if (name == "5_7") {
    if (n == 5) return from_a(algebra, 5, {1, 4});
    return NoConstruction{};
  }
  if (name == "6_7") {
    if (n == 8) return from_a(algebra, 8, {2, 3, 5, 6});
    // The 6k+3 family is complete from k = 3; Z/15 has no representation.
    if (n >= 11 && n != 15) return from_b(algebra, n, sumfree_6_7(n));
    return NoConstruction{};
  }
  return NoClosedForm{};
}

Abelian47Result abelian_4_7_representable(const AbelianGroup& g) {
  const int order = g.order();
  for (int d : divisors(order))
    if (d > 2 && 2 * d < order) return {true, subgroup_of_order(g, d)};
  return {};
}

Coloring construct_4_7_abelian(const AbelianGroup& g) {
  Abelian47Result r = abelian_4_7_representable(g);
  if (!r.representable)
    throw std::invalid_argument(g.name() + " has no subgroup of order and index greater than 2");
  std::vector<Element> a;
  for (Element x : r.witness->elements)
    if (x != 0) a.push_back(x);
  return checked(algebra_by_name("4_7"), Coloring(g, a));
}

}  // namespace cysp

#pragma once

// Closed-form representations over Z/nZ (and abelian groups for 4_7).
// Every coloring returned here has already passed verify().

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "cysp/algebra.hpp"
#include "cysp/group.hpp"
#include "cysp/verifier.hpp"

namespace cysp {

// No closed form applies to this n. For 1_7 ... 6_7 these are exactly the n
// outside the cyclic spectrum.
struct NoConstruction {
  friend bool operator==(NoConstruction, NoConstruction) { return true; }
};

// 7_7: existence is established by random and SAT search only.
struct NoClosedForm {
  friend bool operator==(NoClosedForm, NoClosedForm) { return true; }
};

using ConstructionResult = std::variant<Coloring, NoConstruction, NoClosedForm>;

std::string_view sentinel_name(const ConstructionResult& r);

ConstructionResult construct(const Algebra& algebra, int n);

// Symmetric sum-free set B in Z/n for n >= 11, by n mod 3 (and n mod 6 when
// 3 | n). Complete for every n >= 11 except n = 15, where [2, 3] u [12, 13]
// misses 7 and 8 in B + B. Throws std::invalid_argument for n <= 10.
std::vector<Element> sumfree_6_7(int n);

// Least k with k > 2 and n / k > 2, k | n.
std::optional<int> least_4_7_divisor(int n);

struct Abelian47Result {
  bool representable = false;
  std::optional<Subgroup> witness;  // |H| > 2 and index > 2
};

Abelian47Result abelian_4_7_representable(const AbelianGroup& g);

// A = H \ {0}, B = G \ H. Throws std::invalid_argument when g has no
// subgroup of order and index both above 2.
Coloring construct_4_7_abelian(const AbelianGroup& g);

}  // namespace cysp

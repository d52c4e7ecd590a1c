#pragma once

// Union bound for random colorings with all four cycles mandatory, decided
// with exact integer arithmetic, and the sum-free size bound for odd n.

namespace cysp {

struct BoundReport {
  int n = 0;
  double p_value = 0.0;  // 3(n-1)(3/4)^((n-2)/2), for display only
  bool below_one = false;
};

// below_one is 9 (n-1)^2 3^(n-2) < 4^(n-2), compared as big integers.
// Throws std::invalid_argument for n < 3.
BoundReport union_bound(int n);

// Least n >= 3 with union_bound(n).below_one.
int union_bound_threshold();

// max_sumfree_size(n) <= floor(n / 2). Requires odd n in [3, 25].
bool check_sumfree_lemma(int n);

}  // namespace cysp

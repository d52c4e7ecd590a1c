#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "cysp/bounds.hpp"
#include "cysp/search.hpp"

using namespace cysp;

TEST_CASE("union bound examples") {
  CHECK(union_bound(34).below_one);
  CHECK_FALSE(union_bound(33).below_one);
  CHECK(union_bound(100).below_one);
  CHECK_FALSE(union_bound(3).below_one);
  CHECK(union_bound(34).p_value < 1.0);
  CHECK(union_bound(33).p_value > 1.0);
  CHECK_THROWS_AS(union_bound(2), std::invalid_argument);
}

TEST_CASE("threshold") {
  CHECK(union_bound_threshold() == 34);
  for (int n = 3; n < 34; ++n) CHECK_FALSE(union_bound(n).below_one);
  for (int n = 34; n <= 200; ++n) CHECK(union_bound(n).below_one);
}

TEST_CASE("exact decision agrees with logarithms away from the boundary") {
  for (int n = 3; n <= 400; ++n) {
    // log of 9 (n-1)^2 3^(n-2) / 4^(n-2)
    double lg = std::log(9.0) + 2 * std::log(n - 1.0) + (n - 2) * std::log(0.75);
    if (std::abs(lg) < 1e-9) continue;
    CAPTURE(n);
    CHECK(union_bound(n).below_one == (lg < 0));
    CHECK(std::abs(std::log(union_bound(n).p_value) - lg / 2) < 1e-9);
  }
}

TEST_CASE("sum-free lemma") {
  for (int n = 3; n <= kMaxSumfreeN; n += 2) CHECK(check_sumfree_lemma(n));
  CHECK_THROWS_AS(check_sumfree_lemma(4), std::invalid_argument);
  CHECK_THROWS_AS(check_sumfree_lemma(1), std::invalid_argument);
  CHECK_THROWS_AS(check_sumfree_lemma(27), std::invalid_argument);
}

#include "cysp/bounds.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cysp/search.hpp"

namespace cysp {

using boost::multiprecision::cpp_int;
using boost::multiprecision::pow;

BoundReport union_bound(int n) {
  if (n < 3) throw std::invalid_argument("union_bound requires n >= 3");
  BoundReport r;
  r.n = n;
  r.p_value = 3.0 * (n - 1) * std::pow(0.75, (n - 2) / 2.0);
  // Squaring removes the half-integer exponent for odd n.
  const unsigned e = static_cast<unsigned>(n - 2);
  const cpp_int lhs = cpp_int(9) * cpp_int(n - 1) * cpp_int(n - 1) * pow(cpp_int(3), e);
  const cpp_int rhs = pow(cpp_int(4), e);
  r.below_one = lhs < rhs;
  return r;
}

int union_bound_threshold() {
  for (int n = 3;; ++n)
    if (union_bound(n).below_one) return n;
}

bool check_sumfree_lemma(int n) {
  if (n < 3 || n > kMaxSumfreeN || n % 2 == 0)
    throw std::invalid_argument("check_sumfree_lemma requires odd n in [3, " +
                                std::to_string(kMaxSumfreeN) + "]");
  return max_sumfree_size(n) <= n / 2;
}

}  // namespace cysp

#pragma once

// Exhaustive and randomized search for representations.
//
// Colorings are symmetric, so the search space is one bit per inverse pair
// {x, -x}. Over Z/n the pair classes are {i, n - i} for i = 1 .. floor(n/2),
// encoded as bit i - 1 of a PairClassMask (set = color a).

#include <cstdint>
#include <optional>
#include <vector>

#include "cysp/algebra.hpp"
#include "cysp/group.hpp"
#include "cysp/verifier.hpp"

namespace cysp {

struct PairClassMask {
  int n = 0;
  std::uint64_t bits = 0;

  int classes() const { return n / 2; }
  bool is_a(int cls) const { return (bits >> (cls - 1)) & 1u; }

  friend auto operator<=>(const PairClassMask&, const PairClassMask&) = default;
};

inline constexpr int kDefaultExhaustiveLimit = 40;
// Hard cap on the exhaustive limit: 2^32 masks.
inline constexpr int kMaxExhaustiveLimit = 64;

Coloring expand(const PairClassMask& mask);

// Throws std::invalid_argument for non-cyclic or asymmetric colorings.
PairClassMask mask_of(const Coloring& coloring);

// Image of the mask under x -> u x.
PairClassMask scale(const PairClassMask& mask, int u);

// Least mask (as an integer) in the orbit under multiplication by units.
PairClassMask canonical_form(const PairClassMask& mask);

// Whether Z/n admits a representation. Throws std::invalid_argument when
// n > limit (or limit exceeds kMaxExhaustiveLimit).
bool exists(const Algebra& algebra, int n, int limit = kDefaultExhaustiveLimit);

// All representing masks, ascending. With up_to_automorphism only masks equal
// to their canonical form are kept.
std::vector<PairClassMask> find_all_masks(const Algebra& algebra, int n, bool up_to_automorphism,
                                          int limit = kDefaultExhaustiveLimit);

std::vector<Coloring> find_all(const Algebra& algebra, int n, bool up_to_automorphism,
                               int limit = kDefaultExhaustiveLimit);

// {n in [lo, hi] : exists(algebra, n)}. Requires 1 <= lo <= hi <= limit.
std::vector<int> spectrum(const Algebra& algebra, int lo, int hi,
                          int limit = kDefaultExhaustiveLimit);

// Exhaustive search over an arbitrary finite abelian group of order at most
// kMaxExhaustiveLimit; returns the first representation found.
std::optional<Coloring> find_representation(const Algebra& algebra, const AbelianGroup& group);

// Samples colorings of Z/n, each pair class independently a or b with
// probability 1/2, and returns the first representation. Deterministic for a
// given seed. std::nullopt after max_iters samples.
std::optional<Coloring> random_search(const Algebra& algebra, int n, long long max_iters,
                                      std::uint64_t seed);

inline constexpr int kMaxSumfreeN = 25;

// Largest S in Z/n with (S + S) and S disjoint. Requires 1 <= n <= 25.
int max_sumfree_size(int n);

}  // namespace cysp

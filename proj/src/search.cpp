#include "cysp/search.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>

namespace cysp {

namespace {

void check_limit(int n, int limit) {
  if (limit < 1 || limit > kMaxExhaustiveLimit)
    throw std::invalid_argument("exhaustive limit must be in [1, " +
                                std::to_string(kMaxExhaustiveLimit) + "]");
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > limit)
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the exhaustive limit " +
                                std::to_string(limit));
}

// Depth-first search over pair-class colorings of a group. Classes are
// decided in order of their least element; a branch is cut as soon as three
// decided elements x + y = z form an absent cycle. Needs are checked only on
// complete assignments.
class ClassSearch {
 public:
  ClassSearch(const Algebra& algebra, const AbelianGroup& group)
      : algebra_(algebra), group_(group), order_(group.order()) {
    neg_.resize(order_);
    for (Element x = 0; x < order_; ++x) neg_[x] = group.neg(x);
    sum_.resize(static_cast<std::size_t>(order_) * order_);
    for (Element x = 0; x < order_; ++x)
      for (Element y = 0; y < order_; ++y) sum_[x * order_ + y] = group.add(x, y);
    for (Element x = 1; x < order_; ++x)
      if (neg_[x] >= x) reps_.push_back(x);
    for (CycleClass c : kCycleClasses)
      forbidden_[cycle_index(c)] = algebra.is_forbidden(c);
    needs_[0] = needs_of(algebra, Color::A);
    needs_[1] = needs_of(algebra, Color::B);
    color_.assign(order_, kUndecided);
  }

  int classes() const { return static_cast<int>(reps_.size()); }

  // Calls `visit` for every representation; stops when it returns false.
  void run(const std::function<bool(const std::vector<signed char>&)>& visit) {
    visit_ = &visit;
    stop_ = false;
    if (!reps_.empty()) descend(0);
  }

  Coloring to_coloring(const std::vector<signed char>& colors) const {
    std::vector<Element> a;
    for (Element x = 1; x < order_; ++x)
      if (colors[x] == 0) a.push_back(x);
    return Coloring(group_, a);
  }

  const std::vector<Element>& reps() const { return reps_; }

 private:
  static constexpr signed char kUndecided = -1;

  static int cycle_index(CycleClass c) { return static_cast<int>(c); }

  bool forbidden(int cx, int cy, int cz) const {
    // Number of b's selects the class: 0 aaa, 1 baa, 2 abb, 3 bbb.
    static constexpr std::array<CycleClass, 4> by_bs{CycleClass::AAA, CycleClass::BAA,
                                                     CycleClass::ABB, CycleClass::BBB};
    return forbidden_[cycle_index(by_bs[cx + cy + cz])];
  }

  // No decided triple through x is forbidden.
  bool consistent(Element x) const {
    const int cx = color_[x];
    const Element* row = &sum_[x * order_];
    for (Element y = 1; y < order_; ++y) {
      const int cy = color_[y];
      if (cy < 0) continue;
      const Element z = row[y];
      if (z == 0) continue;
      const int cz = color_[z];
      if (cz >= 0 && forbidden(cx, cy, cz)) return false;
    }
    return true;
  }

  bool complete_ok() const {
    bool any_a = false, any_b = false;
    for (Element r : reps_) (color_[r] == 0 ? any_a : any_b) = true;
    if (!any_a || !any_b) return false;
    for (Element z : reps_) {
      const auto& wanted = needs_[color_[z]];
      const Element* row = &sum_[z * order_];
      for (const Need& need : wanted) {
        const int c1 = static_cast<int>(need.first), c2 = static_cast<int>(need.second);
        bool met = false;
        for (Element x = 1; x < order_ && !met; ++x) {
          if (color_[x] != c1) continue;
          const Element y = row[neg_[x]];
          met = y != 0 && color_[y] == c2;
        }
        if (!met) return false;
      }
    }
    return true;
  }

  void descend(std::size_t idx) {
    if (idx == reps_.size()) {
      if (complete_ok() && !(*visit_)(color_)) stop_ = true;
      return;
    }
    const Element x = reps_[idx];
    for (signed char c : {static_cast<signed char>(1), static_cast<signed char>(0)}) {
      color_[x] = c;
      color_[neg_[x]] = c;
      if (consistent(x)) descend(idx + 1);
      if (stop_) break;
    }
    color_[x] = kUndecided;
    color_[neg_[x]] = kUndecided;
  }

  const Algebra& algebra_;
  AbelianGroup group_;
  int order_;
  std::vector<Element> neg_;
  std::vector<Element> sum_;
  std::vector<Element> reps_;
  std::array<bool, 4> forbidden_{};
  std::array<std::vector<Need>, 2> needs_;
  std::vector<signed char> color_;
  const std::function<bool(const std::vector<signed char>&)>* visit_ = nullptr;
  bool stop_ = false;
};

PairClassMask mask_from_colors(int n, const std::vector<signed char>& colors) {
  PairClassMask m{n, 0};
  for (int i = 1; i <= n / 2; ++i)
    if (colors[i] == 0) m.bits |= std::uint64_t{1} << (i - 1);
  return m;
}

}  // namespace

Coloring expand(const PairClassMask& mask) {
  std::vector<Element> a;
  for (int i = 1; i <= mask.classes(); ++i) {
    if (!mask.is_a(i)) continue;
    a.push_back(i);
    if (mask.n - i != i) a.push_back(mask.n - i);
  }
  std::sort(a.begin(), a.end());
  return Coloring(AbelianGroup::cyclic(mask.n), a);
}

PairClassMask mask_of(const Coloring& coloring) {
  if (!coloring.group().is_cyclic()) throw std::invalid_argument("mask_of: group is not cyclic");
  const int n = coloring.order();
  if (n / 2 > 64) throw std::invalid_argument("mask_of: n too large for a 64-bit mask");
  PairClassMask m{n, 0};
  for (int i = 1; i <= n / 2; ++i) {
    if (coloring.in_a(i) != coloring.in_a(n - i))
      throw std::invalid_argument("mask_of: coloring is not symmetric");
    if (coloring.in_a(i)) m.bits |= std::uint64_t{1} << (i - 1);
  }
  return m;
}

PairClassMask scale(const PairClassMask& mask, int u) {
  const int n = mask.n;
  PairClassMask out{n, 0};
  for (int i = 1; i <= mask.classes(); ++i) {
    if (!mask.is_a(i)) continue;
    int j = static_cast<int>((static_cast<long long>(i) * u) % n);
    if (j > n / 2) j = n - j;
    if (j == 0) continue;
    out.bits |= std::uint64_t{1} << (j - 1);
  }
  return out;
}

PairClassMask canonical_form(const PairClassMask& mask) {
  PairClassMask best = mask;
  if (mask.n < 2) return best;
  for (int u : units(mask.n)) best = std::min(best, scale(mask, u));
  return best;
}

bool exists(const Algebra& algebra, int n, int limit) {
  check_limit(n, limit);
  return find_representation(algebra, AbelianGroup::cyclic(n)).has_value();
}

std::vector<PairClassMask> find_all_masks(const Algebra& algebra, int n, bool up_to_automorphism,
                                          int limit) {
  check_limit(n, limit);
  ClassSearch search(algebra, AbelianGroup::cyclic(n));
  std::vector<PairClassMask> out;
  search.run([&](const std::vector<signed char>& colors) {
    PairClassMask m = mask_from_colors(n, colors);
    if (!up_to_automorphism || canonical_form(m) == m) out.push_back(m);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Coloring> find_all(const Algebra& algebra, int n, bool up_to_automorphism,
                               int limit) {
  std::vector<Coloring> out;
  for (const PairClassMask& m : find_all_masks(algebra, n, up_to_automorphism, limit))
    out.push_back(expand(m));
  return out;
}

std::vector<int> spectrum(const Algebra& algebra, int lo, int hi, int limit) {
  if (lo < 1 || lo > hi) throw std::invalid_argument("spectrum: need 1 <= lo <= hi");
  check_limit(hi, limit);
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n)
    if (exists(algebra, n, limit)) out.push_back(n);
  return out;
}

std::optional<Coloring> find_representation(const Algebra& algebra, const AbelianGroup& group) {
  if (group.order() > kMaxExhaustiveLimit)
    throw std::invalid_argument("group order exceeds the exhaustive cap " +
                                std::to_string(kMaxExhaustiveLimit));
  ClassSearch search(algebra, group);
  std::optional<Coloring> found;
  search.run([&](const std::vector<signed char>& colors) {
    found = search.to_coloring(colors);
    return false;
  });
  return found;
}

std::optional<Coloring> random_search(const Algebra& algebra, int n, long long max_iters,
                                      std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_search: n must be positive");
  if (max_iters < 1) throw std::invalid_argument("random_search: max_iters must be positive");
  const AbelianGroup group = AbelianGroup::cyclic(n);
  std::mt19937_64 rng(seed);
  const int classes = n / 2;
  std::vector<Element> a;
  for (long long iter = 0; iter < max_iters; ++iter) {
    a.clear();
    std::uint64_t word = 0;
    for (int i = 1; i <= classes; ++i) {
      if ((i - 1) % 64 == 0) word = rng();
      if ((word >> ((i - 1) % 64)) & 1u) {
        a.push_back(i);
        if (n - i != i) a.push_back(n - i);
      }
    }
    Coloring candidate(group, a);
    if (is_representation(algebra, candidate)) return candidate;
  }
  return std::nullopt;
}

int max_sumfree_size(int n) {
  if (n < 1 || n > kMaxSumfreeN)
    throw std::invalid_argument("max_sumfree_size requires 1 <= n <= " +
                                std::to_string(kMaxSumfreeN));
  std::vector<char> in(n, 0);
  std::vector<int> chosen;
  int best = 0;
  auto mod = [n](int v) { return ((v % n) + n) % n; };
  std::function<void(int)> dfs = [&](int next) {
    best = std::max(best, static_cast<int>(chosen.size()));
    for (int x = next; x < n; ++x) {
      if (static_cast<int>(chosen.size()) + (n - x) <= best) return;
      if (in[mod(2 * x)] || mod(2 * x) == x) continue;
      bool ok = true;
      for (int s : chosen)
        if (in[mod(s + x)] || in[mod(x - s)]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      in[x] = 1;
      chosen.push_back(x);
      dfs(x + 1);
      chosen.pop_back();
      in[x] = 0;
    }
  };
  dfs(1);
  return best;
}

}  // namespace cysp

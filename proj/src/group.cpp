#include "cysp/group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace cysp {

AbelianGroup::AbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("group needs at least one cyclic factor");
  long long order = 1;
  for (int f : factors_) {
    if (f < 1) throw std::invalid_argument("cyclic factor orders must be positive");
    order *= f;
    if (order > kMaxOrder)
      throw std::invalid_argument("group order exceeds " + std::to_string(kMaxOrder));
  }
  order_ = static_cast<int>(order);
  strides_.assign(factors_.size(), 1);
  for (int i = static_cast<int>(factors_.size()) - 2; i >= 0; --i)
    strides_[i] = strides_[i + 1] * factors_[i + 1];
}

AbelianGroup AbelianGroup::parse(std::string_view text) {
  std::vector<int> factors;
  std::size_t pos = 0;
  auto fail = [&]() -> AbelianGroup {
    throw std::invalid_argument("cannot parse group '" + std::string(text) +
                                "' (expected e.g. Z/8 or 4x3)");
  };
  while (pos <= text.size()) {
    std::size_t end = text.find_first_of("xX*", pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view part = text.substr(pos, end - pos);
    if (part.starts_with("Z/") || part.starts_with("z/")) part.remove_prefix(2);
    if (part.starts_with("Z_")) part.remove_prefix(2);
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) return fail();
    factors.push_back(value);
    pos = end + 1;
  }
  return AbelianGroup(std::move(factors));
}

std::string AbelianGroup::name() const {
  if (is_cyclic()) return "Z/" + std::to_string(factors_[0]);
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += 'x';
    out += std::to_string(factors_[i]);
  }
  return out;
}

Element AbelianGroup::add(Element x, Element y) const {
  if (is_cyclic()) {
    int s = x + y;
    return s >= order_ ? s - order_ : s;
  }
  Element out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    int xi = (x / strides_[i]) % factors_[i];
    int yi = (y / strides_[i]) % factors_[i];
    int s = xi + yi;
    if (s >= factors_[i]) s -= factors_[i];
    out += s * strides_[i];
  }
  return out;
}

Element AbelianGroup::neg(Element x) const {
  if (is_cyclic()) return x == 0 ? 0 : order_ - x;
  Element out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    int xi = (x / strides_[i]) % factors_[i];
    out += (xi == 0 ? 0 : factors_[i] - xi) * strides_[i];
  }
  return out;
}

Element AbelianGroup::times(Element x, int k) const {
  Element out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    long long xi = (x / strides_[i]) % factors_[i];
    long long r = (xi * k) % factors_[i];
    if (r < 0) r += factors_[i];
    out += static_cast<int>(r) * strides_[i];
  }
  return out;
}

std::vector<int> AbelianGroup::to_tuple(Element x) const {
  std::vector<int> out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) out[i] = (x / strides_[i]) % factors_[i];
  return out;
}

Element AbelianGroup::from_tuple(const std::vector<int>& residues) const {
  if (residues.size() != factors_.size())
    throw std::invalid_argument("tuple length does not match the number of factors");
  Element out = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    int r = residues[i] % factors_[i];
    if (r < 0) r += factors_[i];
    out += r * strides_[i];
  }
  return out;
}

bool Subgroup::contains(Element x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

namespace {

// Exponent of prime p in n.
int valuation(int n, int p) {
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

Subgroup subgroup_of_order(const AbelianGroup& group, int d) {
  if (d < 1 || group.order() % d != 0)
    throw std::invalid_argument(std::to_string(d) + " does not divide the order of " +
                                group.name());
  const auto& factors = group.factors();
  // Order of the cyclic subgroup taken from each factor.
  std::vector<int> part(factors.size(), 1);
  for (int p : prime_factors(d)) {
    int need = valuation(d, p);
    for (std::size_t i = 0; i < factors.size() && need > 0; ++i) {
      int avail = valuation(factors[i], p);
      int take = std::min(avail, need);
      for (int t = 0; t < take; ++t) part[i] *= p;
      need -= take;
    }
  }
  // The subgroup is the product of (n_i / part_i) Z/n_i.
  std::vector<Element> elements{0};
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::vector<int> basis(factors.size(), 0);
    basis[i] = factors[i] / part[i];
    Element generator = group.from_tuple(basis);
    std::vector<Element> next;
    next.reserve(elements.size() * part[i]);
    for (Element e : elements)
      for (int k = 0; k < part[i]; ++k) next.push_back(group.add(e, group.times(generator, k)));
    elements = std::move(next);
  }
  std::sort(elements.begin(), elements.end());
  return Subgroup{group, std::move(elements)};
}

bool is_subgroup(const AbelianGroup& group, const std::vector<Element>& elements) {
  std::vector<char> member(group.order(), 0);
  for (Element e : elements) {
    if (!group.contains(e)) return false;
    member[e] = 1;
  }
  if (!member[0]) return false;
  for (Element x : elements) {
    if (!member[group.neg(x)]) return false;
    for (Element y : elements)
      if (!member[group.add(x, y)]) return false;
  }
  return true;
}

std::vector<int> units(int n) {
  if (n < 1) throw std::invalid_argument("units: n must be positive");
  std::vector<int> out;
  for (int u = 1; u < n; ++u)
    if (std::gcd(u, n) == 1) out.push_back(u);
  return out;
}

std::vector<std::vector<Element>> cosets(const AbelianGroup& group, const Subgroup& h) {
  std::vector<char> seen(group.order(), 0);
  std::vector<std::vector<Element>> out;
  for (Element g = 0; g < group.order(); ++g) {
    if (seen[g]) continue;
    std::vector<Element> coset;
    coset.reserve(h.elements.size());
    for (Element x : h.elements) {
      Element y = group.add(g, x);
      seen[y] = 1;
      coset.push_back(y);
    }
    std::sort(coset.begin(), coset.end());
    out.push_back(std::move(coset));
  }
  return out;
}

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

namespace {

void invariant_factor_lists(int remaining, int previous, std::vector<int>& current,
                            std::vector<std::vector<int>>& out) {
  if (remaining == 1) {
    out.push_back(current);
    return;
  }
  for (int f : divisors(remaining)) {
    if (f < 2 || f % previous != 0) continue;
    current.push_back(f);
    invariant_factor_lists(remaining / f, f, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> abelian_groups_of_order(int n) {
  if (n < 1) throw std::invalid_argument("group order must be positive");
  if (n == 1) return {{1}};
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  invariant_factor_lists(n, 1, current, out);
  return out;
}

}  // namespace cysp

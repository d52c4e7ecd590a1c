#include "cysp/verifier.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <tuple>

namespace cysp {

Coloring::Coloring(AbelianGroup group, std::span<const Element> set_a)
    : group_(std::move(group)), in_a_(group_.order(), 0) {
  for (Element x : set_a) {
    if (!group_.contains(x))
      throw std::invalid_argument("element " + std::to_string(x) + " is not in " + group_.name());
    if (x == 0) throw std::invalid_argument("the identity cannot be colored");
    in_a_[x] = 1;
  }
}

std::vector<Element> Coloring::set_a() const {
  std::vector<Element> out;
  for (Element x = 1; x < order(); ++x)
    if (in_a_[x]) out.push_back(x);
  return out;
}

std::vector<Element> Coloring::set_b() const {
  std::vector<Element> out;
  for (Element x = 1; x < order(); ++x)
    if (!in_a_[x]) out.push_back(x);
  return out;
}

Coloring Coloring::scaled(int u) const {
  std::vector<Element> image;
  for (Element x : set_a()) image.push_back(group_.times(x, u));
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  image.erase(std::remove(image.begin(), image.end(), 0), image.end());
  return Coloring(group_, image);
}

std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::ForbiddenCycleWitnessed: return "ForbiddenCycleWitnessed";
    case ViolationKind::NeedUnmet: return "NeedUnmet";
    case ViolationKind::EmptyAtom: return "EmptyAtom";
    case ViolationKind::NotSymmetric: return "NotSymmetric";
  }
  return "?";
}

std::string describe(const Violation& v) {
  std::string out(to_string(v.kind));
  switch (v.kind) {
    case ViolationKind::ForbiddenCycleWitnessed:
      out += ": " + std::to_string(v.witnesses->first) + " + " +
             std::to_string(v.witnesses->second) + " = " + std::to_string(v.z) +
             " witnesses absent cycle " + std::string(to_string(*v.cycle));
      break;
    case ViolationKind::NeedUnmet:
      out += ": " + std::to_string(v.z) + " has no witness for mandatory cycle " +
             std::string(to_string(*v.cycle));
      break;
    case ViolationKind::EmptyAtom:
      out += ": atom " + std::string(to_string(*v.color)) + " is empty";
      break;
    case ViolationKind::NotSymmetric:
      out += ": " + std::to_string(v.z) + " and its inverse have different colors";
      break;
  }
  return out;
}

std::vector<Violation> structural_violations(const Coloring& coloring) {
  const AbelianGroup& g = coloring.group();
  std::vector<Violation> out;
  for (Element x = 1; x < g.order(); ++x)
    if (coloring.in_a(x) != coloring.in_a(g.neg(x)))
      out.push_back({ViolationKind::NotSymmetric, x, std::nullopt, std::nullopt,
                     coloring.color_of(x)});
  bool any_a = false, any_b = false;
  for (Element x = 1; x < g.order(); ++x) (coloring.in_a(x) ? any_a : any_b) = true;
  if (!any_a) out.push_back({ViolationKind::EmptyAtom, 0, std::nullopt, std::nullopt, Color::A});
  if (!any_b) out.push_back({ViolationKind::EmptyAtom, 0, std::nullopt, std::nullopt, Color::B});
  return out;
}

namespace {

void sort_violations(std::vector<Violation>& v) {
  std::sort(v.begin(), v.end(), [](const Violation& l, const Violation& r) {
    auto key = [](const Violation& x) {
      return std::tuple(x.z, static_cast<int>(x.kind),
                        x.cycle ? static_cast<int>(*x.cycle) : -1,
                        x.color ? static_cast<int>(*x.color) : -1);
    };
    return key(l) < key(r);
  });
}

}  // namespace

std::vector<Violation> verify(const Algebra& algebra, const Coloring& coloring) {
  std::vector<Violation> out = structural_violations(coloring);
  if (!out.empty()) {
    sort_violations(out);
    return out;
  }
  const AbelianGroup& g = coloring.group();
  const int order = g.order();
  for (Element z = 1; z < order; ++z) {
    const Color cz = *coloring.color_of(z);
    std::array<bool, 4> reported{};
    std::vector<std::pair<CycleClass, Need>> pending;
    for (const Need& need : needs_of(algebra, cz))
      pending.emplace_back(cycle_of(need.first, need.second, cz), need);
    std::vector<bool> met(pending.size(), false);
    for (Element x = 1; x < order; ++x) {
      Element y = g.sub(z, x);
      if (y == 0) continue;
      const Color cx = *coloring.color_of(x);
      const Color cy = *coloring.color_of(y);
      CycleClass cycle = cycle_of(cx, cy, cz);
      if (algebra.is_forbidden(cycle) && !reported[static_cast<int>(cycle)]) {
        reported[static_cast<int>(cycle)] = true;
        out.push_back({ViolationKind::ForbiddenCycleWitnessed, z, cycle, std::pair(x, y),
                       std::nullopt});
      }
      for (std::size_t i = 0; i < pending.size(); ++i)
        if (pending[i].second.first == cx && pending[i].second.second == cy) met[i] = true;
    }
    for (std::size_t i = 0; i < pending.size(); ++i)
      if (!met[i])
        out.push_back({ViolationKind::NeedUnmet, z, pending[i].first, std::nullopt, std::nullopt});
  }
  sort_violations(out);
  return out;
}

bool is_representation(const Algebra& algebra, const Coloring& coloring) {
  if (!structural_violations(coloring).empty()) return false;
  const AbelianGroup& g = coloring.group();
  const int order = g.order();
  const std::array<std::vector<Need>, 2> needs{needs_of(algebra, Color::A),
                                               needs_of(algebra, Color::B)};
  // Colors of z and -z agree, so checking one of each inverse pair suffices.
  for (Element z = 1; z < order; ++z) {
    if (g.neg(z) < z) continue;
    const Color cz = *coloring.color_of(z);
    const auto& wanted = needs[static_cast<int>(cz)];
    unsigned met = 0;
    const unsigned all = (1u << wanted.size()) - 1;
    for (Element x = 1; x < order; ++x) {
      Element y = g.sub(z, x);
      if (y == 0) continue;
      const Color cx = *coloring.color_of(x);
      const Color cy = *coloring.color_of(y);
      if (algebra.is_forbidden(cycle_of(cx, cy, cz))) return false;
      for (std::size_t i = 0; i < wanted.size(); ++i)
        if (wanted[i].first == cx && wanted[i].second == cy) met |= 1u << i;
    }
    if (met != all) return false;
  }
  return true;
}

bool verify_by_sumsets(const Algebra& algebra, const Coloring& coloring) {
  if (!structural_violations(coloring).empty()) return false;
  const AbelianGroup& g = coloring.group();
  const int order = g.order();
  const CompositionLaw law = composition_law(algebra);
  const std::vector<Element> a = coloring.set_a();
  const std::vector<Element> b = coloring.set_b();

  auto sumset = [&](const std::vector<Element>& s, const std::vector<Element>& t) {
    std::vector<char> in(order, 0);
    for (Element x : s)
      for (Element y : t) in[g.add(x, y)] = 1;
    return in;
  };
  auto expected = [&](const ResultSet& r) {
    std::vector<char> in(order, 0);
    in[0] = r.id;
    for (Element x : a) in[x] = r.a;
    for (Element x : b) in[x] = r.b;
    return in;
  };
  return sumset(a, a) == expected(law.aa) && sumset(a, b) == expected(law.ab) &&
         sumset(b, b) == expected(law.bb);
}

}  // namespace cysp

#include "cysp/json_io.hpp"

#include <stdexcept>

namespace cysp {

using nlohmann::json;

json element_to_json(const AbelianGroup& g, Element x) {
  if (g.is_cyclic()) return x;
  return g.to_tuple(x);
}

Element element_from_json(const AbelianGroup& g, const json& j) {
  if (j.is_number_integer()) {
    long long v = j.get<long long>();
    if (v < 0 || v >= g.order())
      throw std::invalid_argument("element " + j.dump() + " is not in " + g.name());
    return static_cast<Element>(v);
  }
  if (j.is_array()) {
    std::vector<int> residues;
    for (const json& r : j) {
      if (!r.is_number_integer()) throw std::invalid_argument("bad residue " + r.dump());
      residues.push_back(r.get<int>());
    }
    return g.from_tuple(residues);
  }
  throw std::invalid_argument("bad element " + j.dump());
}

json to_json(const Coloring& c) {
  const AbelianGroup& g = c.group();
  json a = json::array(), b = json::array();
  for (Element x : c.set_a()) a.push_back(element_to_json(g, x));
  for (Element x : c.set_b()) b.push_back(element_to_json(g, x));
  return {{"group", g.name()}, {"A", a}, {"B", b}};
}

Coloring coloring_from_json(const json& j) {
  if (!j.is_object() || !j.contains("group") || !j["group"].is_string())
    throw std::invalid_argument("coloring JSON needs a string field \"group\"");
  if (!j.contains("A") || !j["A"].is_array())
    throw std::invalid_argument("coloring JSON needs an array field \"A\"");
  AbelianGroup g = AbelianGroup::parse(j["group"].get<std::string>());
  std::vector<Element> a;
  for (const json& e : j["A"]) a.push_back(element_from_json(g, e));
  return Coloring(g, a);
}

json to_json(const Violation& v, const AbelianGroup& g) {
  json out{{"kind", to_string(v.kind)},
           {"z", element_to_json(g, v.z)},
           {"cycle", nullptr},
           {"witnesses", nullptr},
           {"color", nullptr}};
  if (v.cycle) out["cycle"] = to_string(*v.cycle);
  if (v.witnesses)
    out["witnesses"] = {element_to_json(g, v.witnesses->first),
                        element_to_json(g, v.witnesses->second)};
  if (v.color) out["color"] = to_string(*v.color);
  return out;
}

json to_json(const PairClassMask& m) {
  json out = to_json(expand(m));
  out["mask"] = m.bits;
  return out;
}

json to_json(const SpectrumReport& r) {
  json rows = json::array();
  for (const AlgebraRow& row : r.rows) {
    const Algebra& a = algebra_by_name(row.algebra);
    json cells = json::array();
    for (const ReportCell& c : row.cells)
      cells.push_back({{"n", c.n},
                       {"expected", c.expected},
                       {"computed", c.computed},
                       {"method", to_string(c.method)}});
    rows.push_back({{"algebra", row.algebra},
                    {"spec", spec_text(a)},
                    {"cyclic_spec", cyclic_spec_text(a)},
                    {"computed", row.computed_set()},
                    {"diff", row.diff},
                    {"cells", cells}});
  }
  return {{"lo", r.lo}, {"hi", r.hi}, {"ok", r.ok()}, {"rows", rows}};
}

}  // namespace cysp

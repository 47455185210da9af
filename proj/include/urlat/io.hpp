#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "urlat/extension.hpp"
#include "urlat/finite.hpp"
#include "urlat/integral.hpp"
#include "urlat/operators.hpp"

namespace urlat {

using Json = nlohmann::ordered_json;

inline Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

inline Json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

inline Rat rat_of_json(const Json& j) {
  if (!j.is_string()) throw ParseError("rational must be a string like \"p/q\"");
  return parse_rat(j.get<std::string>());
}

inline Json json_of_rat(const Rat& r) { return rat_str(r); }

inline int int_of_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

inline Element element_of_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("coords"))
    throw ParseError("element needs dim and coords");
  int dim = int_of_json(j.at("dim"), "dim");
  if (dim < 1) throw ParseError("dim must be positive");
  const Json& cs = j.at("coords");
  if (!cs.is_array() || static_cast<int>(cs.size()) != dim)
    throw ParseError("coords must list exactly dim rationals");
  Element x = Element::zeros(dim);
  for (int i = 0; i < dim; ++i) x.coords[static_cast<size_t>(i)] = rat_of_json(cs.at(static_cast<size_t>(i)));
  return x;
}

inline Json json_of_element(const Element& x) {
  Json coords = Json::array();
  for (const Rat& c : x.coords) coords.push_back(json_of_rat(c));
  return Json{{"dim", x.dim()}, {"coords", std::move(coords)}};
}

inline ScalarMap scalar_map_of_json(const Json& j) {
  if (!j.is_object()) throw ParseError("scalar map must be an object");
  std::map<Rat, Rat> samples;
  if (j.contains("samples")) {
    const Json& ss = j.at("samples");
    if (!ss.is_array()) throw ParseError("samples must be an array of [point, value] pairs");
    for (const Json& pair : ss) {
      if (!pair.is_array() || pair.size() != 2) throw ParseError("sample must be a [point, value] pair");
      Rat p = rat_of_json(pair.at(0));
      if (samples.count(p)) throw ParseError("duplicate sample point " + rat_str(p));
      samples.emplace(std::move(p), rat_of_json(pair.at(1)));
    }
  }
  std::optional<TailRule> tail;
  if (j.contains("tail") && !j.at("tail").is_null()) {
    const Json& t = j.at("tail");
    if (!t.is_object() || !t.contains("start") || !t.contains("step") || !t.contains("poly") ||
        !t.contains("ratio"))
      throw ParseError("tail needs start, step, poly, ratio");
    TailRule tr;
    tr.start = rat_of_json(t.at("start"));
    tr.step = rat_of_json(t.at("step"));
    tr.ratio = rat_of_json(t.at("ratio"));
    if (!t.at("poly").is_array()) throw ParseError("tail poly must be an array");
    for (const Json& c : t.at("poly")) tr.poly.push_back(rat_of_json(c));
    tail = std::move(tr);
  }
  return ScalarMap(std::move(samples), std::move(tail));
}

inline Json json_of_scalar_map(const ScalarMap& f) {
  Json samples = Json::array();
  for (const auto& [p, v] : f.samples()) samples.push_back(Json::array({json_of_rat(p), json_of_rat(v)}));
  Json tail;
  if (f.tail()) {
    Json poly = Json::array();
    for (const Rat& c : f.tail()->poly) poly.push_back(json_of_rat(c));
    tail = Json{{"start", json_of_rat(f.tail()->start)},
                {"step", json_of_rat(f.tail()->step)},
                {"poly", std::move(poly)},
                {"ratio", json_of_rat(f.tail()->ratio)}};
  } else {
    tail = nullptr;
  }
  return Json{{"samples", std::move(samples)}, {"tail", std::move(tail)}};
}

inline UrysonOperator operator_of_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("m"))
    throw ParseError("operator needs n and m");
  int n = int_of_json(j.at("n"), "n");
  int m = int_of_json(j.at("m"), "m");
  if (n < 1 || m < 1) throw ParseError("operator dimensions must be positive");
  UrysonOperator t(n, m);
  if (j.contains("entries")) {
    if (!j.at("entries").is_array()) throw ParseError("entries must be an array");
    std::vector<std::pair<int, int>> seen;
    for (const Json& e : j.at("entries")) {
      if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("map"))
        throw ParseError("entry needs i, j, map");
      int i = int_of_json(e.at("i"), "i");
      int jj = int_of_json(e.at("j"), "j");
      if (i < 1 || i > m || jj < 1 || jj > n) throw ParseError("entry index out of range");
      for (const auto& [si, sj] : seen)
        if (si == i && sj == jj) throw ParseError("duplicate entry");
      seen.emplace_back(i, jj);
      t.set_entry(i, jj, scalar_map_of_json(e.at("map")));
    }
  }
  return t;
}

inline Json json_of_operator(const UrysonOperator& t) {
  Json entries = Json::array();
  for (int i = 1; i <= t.codomain_dim(); ++i) {
    for (int j = 1; j <= t.domain_dim(); ++j) {
      if (t.entry(i, j).is_zero()) continue;
      entries.push_back(Json{{"i", i}, {"j", j}, {"map", json_of_scalar_map(t.entry(i, j))}});
    }
  }
  return Json{{"n", t.domain_dim()}, {"m", t.codomain_dim()}, {"entries", std::move(entries)}};
}

inline LateralIdeal ideal_of_json(const Json& j) {
  if (!j.is_object() || !j.contains("variant")) throw ParseError("ideal needs a variant");
  std::string v = j.at("variant").is_string() ? j.at("variant").get<std::string>() : "";
  if (v == "fragments") {
    if (!j.contains("w")) throw ParseError("fragments ideal needs w");
    return LateralIdeal::fragments_of(element_of_json(j.at("w")));
  }
  if (v == "order_ideal") {
    if (!j.contains("generators") || !j.at("generators").is_array())
      throw ParseError("order ideal needs generators");
    std::vector<Element> gens;
    for (const Json& g : j.at("generators")) gens.push_back(element_of_json(g));
    if (gens.empty()) throw ParseError("order ideal needs at least one generator");
    return LateralIdeal::order_ideal(std::move(gens));
  }
  if (v == "disjoint_union") {
    if (!j.contains("parts") || !j.at("parts").is_array()) throw ParseError("disjoint union needs parts");
    std::vector<LateralIdeal> parts;
    for (const Json& p : j.at("parts")) parts.push_back(ideal_of_json(p));
    if (parts.empty()) throw ParseError("disjoint union needs at least one part");
    return LateralIdeal::disjoint_union(std::move(parts));
  }
  throw ParseError("unknown ideal variant: " + v);
}

inline Json json_of_ideal(const LateralIdeal& d) {
  if (const auto* f = std::get_if<LateralIdeal::FragmentsOf>(&d.node()))
    return Json{{"variant", "fragments"}, {"w", json_of_element(f->w)}};
  if (const auto* o = std::get_if<LateralIdeal::OrderIdealOf>(&d.node())) {
    Json gens = Json::array();
    for (const Element& g : o->gens) gens.push_back(json_of_element(g));
    return Json{{"variant", "order_ideal"}, {"generators", std::move(gens)}};
  }
  const auto& u = std::get<LateralIdeal::DisjointUnion>(d.node());
  Json parts = Json::array();
  for (const LateralIdeal& p : u.parts) parts.push_back(json_of_ideal(p));
  return Json{{"variant", "disjoint_union"}, {"parts", std::move(parts)}};
}

inline std::map<Element, Element> table_of_json(const Json& j) {
  if (!j.is_array()) throw ParseError("table must be an array of [argument, value] pairs");
  std::map<Element, Element> table;
  for (const Json& row : j) {
    if (!row.is_array() || row.size() != 2) throw ParseError("table row must be [argument, value]");
    Element k = element_of_json(row.at(0));
    if (table.count(k)) throw ParseError("duplicate table argument");
    table.emplace(std::move(k), element_of_json(row.at(1)));
  }
  return table;
}

inline Json json_of_table(const std::map<Element, Element>& table) {
  Json out = Json::array();
  for (const auto& [k, v] : table) out.push_back(Json::array({json_of_element(k), json_of_element(v)}));
  return out;
}

inline KernelTable kernel_of_json(const Json& j) {
  if (!j.is_object() || !j.contains("A") || !j.contains("B") || !j.contains("grid") ||
      !j.contains("values"))
    throw ParseError("kernel needs A, B, grid, values");
  auto space = [](const Json& s) {
    if (!s.is_object() || !s.contains("weights") || !s.at("weights").is_array())
      throw ParseError("measure space needs weights");
    FiniteMeasureSpace m;
    for (const Json& w : s.at("weights")) m.weights.push_back(rat_of_json(w));
    return m;
  };
  std::vector<Rat> grid;
  if (!j.at("grid").is_array()) throw ParseError("grid must be an array");
  for (const Json& r : j.at("grid")) grid.push_back(rat_of_json(r));
  std::map<std::tuple<int, int, Rat>, Rat> values;
  if (!j.at("values").is_array()) throw ParseError("values must be an array");
  for (const Json& row : j.at("values")) {
    if (!row.is_array() || row.size() != 4) throw ParseError("kernel value must be [i, j, r, v]");
    int i = int_of_json(row.at(0), "i");
    int jj = int_of_json(row.at(1), "j");
    Rat r = rat_of_json(row.at(2));
    Rat v = rat_of_json(row.at(3));
    auto key = std::make_tuple(i, jj, std::move(r));
    if (values.count(key)) throw ParseError("duplicate kernel triple");
    values.emplace(std::move(key), std::move(v));
  }
  return KernelTable(space(j.at("A")), space(j.at("B")), std::move(grid), std::move(values));
}

inline Json json_of_kernel(const KernelTable& k) {
  auto space = [](const FiniteMeasureSpace& m) {
    Json ws = Json::array();
    for (const Rat& w : m.weights) ws.push_back(json_of_rat(w));
    return Json{{"weights", std::move(ws)}};
  };
  Json grid = Json::array();
  for (const Rat& r : k.grid()) grid.push_back(json_of_rat(r));
  Json values = Json::array();
  for (const auto& [key, v] : k.values()) {
    const auto& [i, j, r] = key;
    values.push_back(Json::array({i, j, json_of_rat(r), json_of_rat(v)}));
  }
  return Json{{"A", space(k.space_a())},
              {"B", space(k.space_b())},
              {"grid", std::move(grid)},
              {"values", std::move(values)}};
}

inline Json json_of_certificate(const MajorantCertificate& cert) {
  Json probes = Json::array();
  for (const auto& [s, c] : cert.probes)
    probes.push_back(Json{{"S", json_of_operator(s)}, {"c", json_of_rat(c)}});
  return Json{{"majorant", json_of_operator(cert.majorant)}, {"probes", std::move(probes)}};
}

/// Big integers leave the int64 range of JSON numbers; fall back to a string.
inline Json json_of_int(const Int& n) {
  if (n.fits_slong_p()) return static_cast<int64_t>(n.get_si());
  return n.get_str();
}

inline std::string render_json(const Json& j, bool compact) {
  return compact ? j.dump() : j.dump(2);
}

}  // namespace urlat

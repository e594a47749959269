#include "germkit/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "germkit/error.hpp"
#include "germkit/partial_bijection.hpp"

namespace germkit {

using nlohmann::json;
using nlohmann::ordered_json;

FiniteInverseMonoid monoid_from_json(const json& j, std::size_t element_cap, std::size_t point_cap) {
  if (!j.is_object())
    throw InputError("monoid document must be a JSON object");
  try {
    if (!j.contains("table")) {
      if (!j.contains("points"))
        throw InputError("monoid document needs \"table\" or \"points\"");
      const auto n = j.at("points").get<std::size_t>();
      return symmetric_inverse_monoid(PointSet(n), point_cap).monoid;
    }
    auto names = j.at("elements").get<std::vector<std::string>>();
    auto table = j.at("table").get<std::vector<std::vector<Element>>>();
    FiniteInverseMonoid m(std::move(names), table, j.at("zero").get<Element>(), j.at("one").get<Element>(),
                          element_cap);
    // optional declared involution, checked against the computed one
    if (j.contains("inv")) {
      const auto inv = j.at("inv").get<std::vector<Element>>();
      if (inv.size() != m.size())
        throw InputError("\"inv\" has " + std::to_string(inv.size()) + " entries, expected " + std::to_string(m.size()));
      for (Element a = 0; a < m.size(); ++a)
        if (inv[a] != m.inverse(a))
          throw StructureError("declared inverse of " + m.name(a) + " is not its generalized inverse");
    }
    return m;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed monoid document: ") + e.what());
  }
}

ordered_json monoid_to_json(const FiniteInverseMonoid& s) {
  ordered_json j;
  j["elements"] = s.names();
  j["table"] = s.table();
  j["zero"] = s.zero();
  j["one"] = s.one();
  return j;
}

CoarseSpace coarse_space_from_json(const json& j) {
  if (!j.is_object())
    throw InputError("coarse-space document must be a JSON object");
  try {
    if (j.contains("dist")) {
      auto dist = j.at("dist").get<std::vector<std::vector<double>>>();
      if (dist.size() != j.at("points").get<std::size_t>())
        throw InputError("\"dist\" size does not match \"points\"");
      return CoarseSpace::from_metric(dist, j.at("radius").get<double>());
    }
    const auto n = j.at("points").get<std::size_t>();
    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges"))
      for (const auto& e : j.at("edges")) {
        const auto pair = e.get<std::vector<int>>();
        if (pair.size() != 2)
          throw InputError("edges must be [i, j] pairs");
        edges.emplace_back(pair[0], pair[1]);
      }
    return CoarseSpace(PointSet(n), edges);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed coarse-space document: ") + e.what());
  }
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out;
}

} // namespace

void write_dot(std::ostream& os, const GermGroupoid& g) {
  const auto& G = g.groupoid();
  os << "digraph germ_groupoid {\n";
  for (UnitId u = 0; u < G.unit_count(); ++u)
    os << "  u" << u << " [label=\"" << dot_escape(G.unit_label(u)) << "\"];\n";
  for (ArrowId a = 0; a < G.arrow_count(); ++a)
    os << "  u" << G.source(a) << " -> u" << G.range(a) << " [label=\"" << dot_escape(G.label(a)) << "\"];\n";
  os << "}\n";
}

ordered_json groupoid_to_json(const GermGroupoid& g) {
  const auto& G = g.groupoid();
  ordered_json j;
  auto units = ordered_json::array();
  for (UnitId u = 0; u < G.unit_count(); ++u)
    units.push_back(G.unit_label(u));
  auto arrows = ordered_json::array();
  for (ArrowId a = 0; a < G.arrow_count(); ++a)
    arrows.push_back(ordered_json{{"src", G.source(a)}, {"dst", G.range(a)}, {"label", G.label(a)}});
  auto comp = ordered_json::array();
  for (ArrowId a = 0; a < G.arrow_count(); ++a)
    for (ArrowId b = 0; b < G.arrow_count(); ++b)
      if (G.composable(a, b))
        comp.push_back(ordered_json::array({a, b, G.product(a, b)}));
  j["units"] = std::move(units);
  j["arrows"] = std::move(arrows);
  j["composition"] = std::move(comp);
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw InputError("cannot write " + path);
  out << content;
  if (!out)
    throw InputError("write to " + path + " failed");
}

} // namespace germkit

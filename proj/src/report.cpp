#include "latticelab/report.hpp"

#include "latticelab/error.hpp"

namespace latticelab {

Lattice lattice_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("elements") || !doc["elements"].is_array())
    throw Error(ErrorKind::ParseError, "lattice document needs an \"elements\" array");
  std::vector<std::string> elements;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) throw Error(ErrorKind::ParseError, "element identifiers must be strings");
    elements.push_back(e.get<std::string>());
  }
  std::vector<CoverPair> covers;
  if (doc.contains("covers")) {
    if (!doc["covers"].is_array()) throw Error(ErrorKind::ParseError, "\"covers\" must be an array");
    for (const auto& c : doc["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
        throw Error(ErrorKind::ParseError, "each cover is a pair of identifiers");
      covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
  }
  return Lattice::build(std::move(elements), covers);
}

Lattice parse_lattice_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return lattice_from_json(doc);
}

Json lattice_to_json(const Lattice& lattice) {
  Json covers = Json::array();
  for (const auto& [lo, hi] : lattice.cover_names()) covers.push_back({lo, hi});
  return {{"elements", lattice.elements()}, {"covers", covers}};
}

Json to_json(const Check& check) {
  Json j{{"name", check.name}, {"pass", check.pass}};
  if (check.witness) j["witness"] = *check.witness;
  return j;
}

Json to_json(const PrimeComponent& component, const Lattice& lattice) {
  Json admissible = Json::array();
  for (Element x : component.admissible.members) admissible.push_back(lattice.name(x));
  return {{"admissible", admissible},
          {"generators", component.ideal.groebner()->strings()},
          {"prime", component.certified_prime},
          {"dim", component.dim}};
}

Json report_json(const SuiteReport& report, const Lattice& lattice, bool timings) {
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back(to_json(c));
  Json components = Json::array();
  for (const auto& c : report.components) components.push_back(to_json(c, lattice));
  Json t = Json::object();
  if (timings)
    for (const auto& [stage, seconds] : report.timings) t[stage] = seconds;
  return {{"lattice", report.lattice}, {"checks", checks}, {"components", components}, {"timings", t}};
}

}  // namespace latticelab

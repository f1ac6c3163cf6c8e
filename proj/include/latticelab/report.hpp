#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "latticelab/joinmeet.hpp"

namespace latticelab {

using Json = nlohmann::ordered_json;

/// {"elements": [...], "covers": [[lower, upper], ...]}; throws ParseError
/// on malformed documents and the lattice errors on invalid content.
Lattice lattice_from_json(const Json& doc);
Lattice parse_lattice_json(std::string_view text);
Json lattice_to_json(const Lattice& lattice);

Json to_json(const Check& check);
Json to_json(const PrimeComponent& component, const Lattice& lattice);

/// {lattice, checks, components, timings}; timings stay empty unless asked
/// for, so repeated runs print identical bytes.
Json report_json(const SuiteReport& report, const Lattice& lattice, bool timings);

}  // namespace latticelab

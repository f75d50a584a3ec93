#pragma once

#include "qcgl/spec.hpp"

#include <json.hpp>

#include <string>

namespace qcgl {

inline constexpr const char* kSpecFormat = "qcgl-spec/1";

// JSON document listing generators with their weights, torus elements, level
// constants and straightening tables. Scalars and delta values are rendered
// as text (`q^-1`, `-(q^2-1)/q*x[1,2]*x[2,1]`), so a spec survives a
// print/parse round trip exactly.
nlohmann::json spec_to_json(const OreAlgebraSpec& spec);
// Throws SpecError on malformed documents and ParseError on bad expressions.
OreAlgebraSpec spec_from_json(const nlohmann::json& doc);

std::string write_spec(const OreAlgebraSpec& spec);
OreAlgebraSpec read_spec(const std::string& text);
OreAlgebraSpec read_spec_file(const std::string& path);

}  // namespace qcgl

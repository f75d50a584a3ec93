#include "qcgl/spec_io.hpp"

#include "qcgl/error.hpp"
#include "qcgl/expr.hpp"
#include "qcgl/printing.hpp"

#include <fstream>
#include <sstream>

namespace qcgl {

using nlohmann::json;

json spec_to_json(const OreAlgebraSpec& spec) {
  require_well_formed(spec);
  json gens = json::array();
  for (std::size_t j = 0; j < spec.size(); ++j) {
    json lambda = json::array();
    json delta = json::array();
    for (std::size_t i = 0; i < j; ++i) {
      lambda.push_back(spec.lambda_table[j][i].to_string());
      delta.push_back(to_string(spec, spec.delta_table[j][i]));
    }
    json h = json::array();
    for (const auto& v : spec.h[j]) h.push_back(v.to_string());
    gens.push_back({
        {"name", spec.names[j]},
        {"weight", spec.weights[j]},
        {"h", h},
        {"level_q", spec.level_q[j].to_string()},
        {"lambda", lambda},
        {"delta", delta},
    });
  }
  return {
      {"format", kSpecFormat},
      {"name", spec.name},
      {"torus_rank", spec.torus_rank},
      {"generators", gens},
  };
}

OreAlgebraSpec spec_from_json(const json& doc) {
  try {
    if (doc.value("format", std::string()) != kSpecFormat) {
      throw SpecError(std::string("expected format \"") + kSpecFormat + "\"");
    }
    const auto& gens = doc.at("generators");
    std::vector<std::string> names;
    for (const auto& g : gens) names.push_back(g.at("name").get<std::string>());
    auto spec = OreAlgebraSpec::with_generators(names, doc.at("torus_rank").get<std::size_t>());
    spec.name = doc.value("name", std::string());
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const auto& g = gens[j];
      spec.weights[j] = g.at("weight").get<Weight>();
      spec.h[j].clear();
      for (const auto& v : g.at("h")) spec.h[j].push_back(RatFunc::parse(v.get<std::string>()));
      spec.level_q[j] = RatFunc::parse(g.at("level_q").get<std::string>());
      const auto& lambda = g.at("lambda");
      if (lambda.size() != j || g.at("delta").size() != j) {
        throw SpecError("generator " + names[j] + " needs " + std::to_string(j) + " lambda and delta entries");
      }
      for (std::size_t i = 0; i < j; ++i) spec.lambda_table[j][i] = RatFunc::parse(lambda[i].get<std::string>());
    }
    // Delta values of level j live in A_{j-1}; evaluate them over the
    // truncated spec, whose straightening data is complete by then.
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const OreAlgebraSpec lower = spec.truncated(j);
      EvalContext ctx{&lower, nullptr, {}};
      const auto& delta = gens[j].at("delta");
      for (std::size_t i = 0; i < j; ++i) {
        spec.delta_table[j][i] = parse_poly(delta[i].get<std::string>(), ctx);
      }
    }
    require_well_formed(spec);
    return spec;
  } catch (const json::exception& e) {
    throw SpecError(std::string("malformed spec document: ") + e.what());
  }
}

std::string write_spec(const OreAlgebraSpec& spec) { return spec_to_json(spec).dump(2) + "\n"; }

OreAlgebraSpec read_spec(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw SpecError(std::string("spec is not valid JSON: ") + e.what());
  }
  return spec_from_json(doc);
}

OreAlgebraSpec read_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_spec(buffer.str());
}

}  // namespace qcgl

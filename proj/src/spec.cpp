#include "qcgl/spec.hpp"

#include "qcgl/error.hpp"

#include <charconv>

namespace qcgl {

OreAlgebraSpec OreAlgebraSpec::with_generators(std::vector<std::string> names,
                                               std::size_t torus_rank) {
  OreAlgebraSpec spec;
  const std::size_t n = names.size();
  spec.names = std::move(names);
  spec.torus_rank = torus_rank;
  spec.lambda_table.resize(n);
  spec.delta_table.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    spec.lambda_table[j].assign(j, RatFunc(1));
    spec.delta_table[j].assign(j, NcPoly());
  }
  spec.level_q.assign(n, RatFunc(1));
  spec.weights.assign(n, Weight(torus_rank, 0));
  spec.h.assign(n, std::vector<RatFunc>(torus_rank, RatFunc(1)));
  return spec;
}

std::optional<GenIndex> OreAlgebraSpec::find(const std::string& generator_name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == generator_name) return static_cast<GenIndex>(i);
  }
  if (generator_name.size() > 2 && generator_name.compare(0, 2, "g_") == 0) {
    std::size_t k = 0;
    const char* first = generator_name.data() + 2;
    const char* last = generator_name.data() + generator_name.size();
    auto [ptr, ec] = std::from_chars(first, last, k);
    if (ec == std::errc() && ptr == last && k >= 1 && k <= names.size()) {
      return static_cast<GenIndex>(k - 1);
    }
  }
  return std::nullopt;
}

OreAlgebraSpec OreAlgebraSpec::truncated(std::size_t j) const {
  OreAlgebraSpec out = *this;
  out.names.resize(j);
  out.lambda_table.resize(j);
  out.delta_table.resize(j);
  out.level_q.resize(j);
  out.weights.resize(j);
  out.h.resize(j);
  return out;
}

std::vector<std::string> structural_errors(const OreAlgebraSpec& spec) {
  std::vector<std::string> errors;
  const std::size_t n = spec.size();
  if (n > 0xFFFF) errors.emplace_back("too many generators");
  if (spec.lambda_table.size() != n || spec.delta_table.size() != n ||
      spec.level_q.size() != n || spec.weights.size() != n || spec.h.size() != n) {
    errors.emplace_back("table sizes do not match the number of generators");
    return errors;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      if (spec.names[i] == spec.names[k]) errors.push_back("duplicate generator name " + spec.names[i]);
    }
    if (spec.names[i].empty() || spec.names[i] == "q" || spec.names[i] == "X") {
      errors.push_back("reserved or empty generator name '" + spec.names[i] + "'");
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (spec.lambda_table[j].size() != j || spec.delta_table[j].size() != j) {
      errors.push_back("level " + spec.names[j] + ": straightening tables must have " +
                       std::to_string(j) + " entries");
      continue;
    }
    for (std::size_t i = 0; i < j; ++i) {
      auto top = spec.delta_table[j][i].max_generator();
      if (top && *top >= j) {
        errors.push_back("delta at level " + spec.names[j] + " on " + spec.names[i] +
                         " uses generator " + spec.names[*top] + " outside A_" +
                         std::to_string(j));
      }
    }
    if (spec.weights[j].size() != spec.torus_rank) {
      errors.push_back("weight of " + spec.names[j] + " has wrong length");
    }
    if (spec.h[j].size() != spec.torus_rank) {
      errors.push_back("torus element at level " + spec.names[j] + " has wrong length");
    } else {
      for (const auto& v : spec.h[j]) {
        if (v.is_zero()) errors.push_back("torus element at level " + spec.names[j] + " has a zero entry");
      }
    }
  }
  return errors;
}

void require_well_formed(const OreAlgebraSpec& spec) {
  auto errors = structural_errors(spec);
  if (errors.empty()) return;
  std::string message = "ill-formed spec";
  for (const auto& e : errors) message += "; " + e;
  throw SpecError(message);
}

RatFunc torus_eigenvalue(const std::vector<RatFunc>& h, const Weight& weight) {
  RatFunc value(1);
  for (std::size_t t = 0; t < h.size() && t < weight.size(); ++t) {
    if (weight[t] != 0) value *= h[t].pow(static_cast<int>(weight[t]));
  }
  return value;
}

}  // namespace qcgl

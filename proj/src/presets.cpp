#include "qcgl/presets.hpp"

#include "qcgl/error.hpp"
#include "qcgl/preset_data.hpp"
#include "qcgl/spec_io.hpp"

namespace qcgl {

OreAlgebraSpec quantum_affine_plane() {
  auto spec = OreAlgebraSpec::with_generators({"x1", "x2"}, 2);
  spec.name = "O_q(k^2)";
  spec.lambda_table[1][0] = RatFunc::q();
  spec.weights = {{1, 0}, {0, 1}};
  spec.h = {{RatFunc::q(), RatFunc::q()}, {RatFunc::q(), RatFunc::q()}};
  spec.level_q = {RatFunc::q(), RatFunc::q()};
  return spec;
}

std::vector<std::string> preset_names() { return {"uq-sl3-plus"}; }

OreAlgebraSpec load_preset(const std::string& name) {
  if (name == "uq-sl3-plus") return read_spec(kPresetUqSl3Plus);
  throw SpecError("unknown preset '" + name + "'");
}

}  // namespace qcgl

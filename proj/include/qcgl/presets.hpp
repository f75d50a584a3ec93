#pragma once

#include "qcgl/spec.hpp"

#include <string>
#include <vector>

namespace qcgl {

// x2 x1 = q x1 x2 with torus (k*)^2 acting by (a, b).x1 = a x1, (a, b).x2 = b x2.
OreAlgebraSpec quantum_affine_plane();

// Shipped spec files, by name (currently "uq-sl3-plus").
std::vector<std::string> preset_names();
// Throws SpecError for unknown names.
OreAlgebraSpec load_preset(const std::string& name);

}  // namespace qcgl

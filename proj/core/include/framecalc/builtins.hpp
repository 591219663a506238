#pragma once

#include "framecalc/manifest.hpp"

#include <string>
#include <vector>

namespace framecalc {

/// Names of the shipped example manifests.
const std::vector<std::string>& builtin_names();

/// Returns a shipped manifest: "kenmotsu5" (the 5-dimensional warped-product
/// example with its contact structure and potential field), "kenmotsu3" (the
/// 3-dimensional analog) or "euclidean3" (a flat identity frame with a formal
/// contact structure). Throws Error for unknown names.
Manifest builtin(const std::string& name);

} // namespace framecalc

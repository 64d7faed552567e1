#ifndef MIXQUANT_PRESETS_HPP
#define MIXQUANT_PRESETS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "mixquant/measure.hpp"

namespace mixquant {

// Named two-segment families with left weight p:
//   connected-p        [0, 1] u [1, 2]
//   gapped-thirds-p    [0, 1/3] u [2/3, 1]
//   gapped-sevenths-p  [0, 7/15] u [8/15, 1]
const std::vector<std::string>& preset_names();

/// Throws Error{Parse} for an unknown name and Error{Weight} unless 0 < p < 1.
MixedUniform make_preset(std::string_view name, double p);

}  // namespace mixquant

#endif

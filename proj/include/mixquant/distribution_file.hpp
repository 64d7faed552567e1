#ifndef MIXQUANT_DISTRIBUTION_FILE_HPP
#define MIXQUANT_DISTRIBUTION_FILE_HPP

#include <string>

#include "mixquant/measure.hpp"

namespace mixquant {

/// Parses {"segments":[{"lo":..,"hi":..,"weight":..}, ...]}.
/// Throws Error{Parse} on malformed input; measure validation errors pass through.
MixedUniform parse_distribution(const std::string& text);

MixedUniform load_distribution(const std::string& path);

}  // namespace mixquant

#endif

#pragma once

#include "lctkit/threshold_set.hpp"

#include <string>
#include <vector>

namespace lctkit {

/// Canonical JSON for a ThresholdSet.  Rationals are lowest-terms "p/q"
/// strings, sequence coefficients are decimal integer strings, object keys
/// are sorted, points descending, sequences in tuple order.  Two equal
/// canonical sets always produce byte-identical documents.
std::string to_json(const ThresholdSet& set);

ThresholdSet threshold_set_from_json(const std::string& doc);

/// Canonical JSON for a plain descending list of rationals.
std::string to_json(const std::vector<Rational>& values);

}  // namespace lctkit

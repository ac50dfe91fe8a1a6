#pragma once

#include "cmdbell/model.hpp"

#include <string>

namespace cmdbell {

/// Model document:
///   {"reference": [16 numbers],
///    "xi": {"A1B2": [16], "A2B1": [16], "A2B2": [16]}}
/// with entries in strategy-index order. Parsing rejects wrong lengths,
/// missing keys and non-finite numbers (ParseError); it does not check
/// semantic validity (use validate()).
HVModel model_from_json(const std::string& text);

std::string model_to_json(const HVModel& model, int indent = 2);

/// Reads and parses a model file; throws ParseError on IO failure as well.
HVModel load_model_file(const std::string& path);

void save_model_file(const HVModel& model, const std::string& path);

} // namespace cmdbell

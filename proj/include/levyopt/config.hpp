#pragma once

#include <filesystem>
#include <string>

#include "levyopt/model.hpp"

namespace levyopt {

// Parses a model description of the form
//   {"b": 0.04, "c": 0.04, "atoms": [{"x": -0.2, "lambda": 1.0}],
//    "T": 1.0, "x0": 1.0, "p": 2.0}
// All six keys are required, unknown keys are rejected, and every scalar must
// be a JSON number. Throws ConfigError with a field-specific message.
MarketModel model_from_json(const std::string& text);

// Same, reading the text from a file first.
MarketModel load_model(const std::filesystem::path& path);

}  // namespace levyopt

#pragma once

#include <stdexcept>
#include <string>

namespace cmdbell {

/// A model violates a semantic constraint (positivity, normalization).
class ModelError : public std::runtime_error {
  public:
    explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

/// A document (JSON model file, CSV, ...) is malformed.
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation parameter is outside its admissible range.
class ParameterError : public std::invalid_argument {
  public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace cmdbell

#pragma once

#include <stdexcept>
#include <string>

namespace codemorph {

// No tree could be produced at all (e.g. empty input).
struct ParseFatal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Edit spans overlap within one script.
struct OverlapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An argument is outside its documented range.
struct RangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A prompt template is missing its required placeholder.
struct TemplateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A model request failed after all retries.
struct TransportError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The model endpoint rejected our credentials (401/403).
struct AuthError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A ratio was requested over an empty group.
struct EmptyGroup : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A statistic is undefined for the given input (e.g. constant list).
struct DegenerateInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace codemorph

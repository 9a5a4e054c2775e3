#pragma once

#include <stdexcept>
#include <string>

namespace edgepoly {

// Invalid input or a violated operation precondition (bad graph text,
// disconnected graph where connectivity is required, malformed weights).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

// An exponential routine was asked to run past its configured vertex cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, int vertices, int cap)
      : std::runtime_error(what + ": " + std::to_string(vertices) +
                           " vertices exceeds cap of " + std::to_string(cap)),
        vertices_(vertices),
        cap_(cap) {}

  int vertices() const noexcept { return vertices_; }
  int cap() const noexcept { return cap_; }

 private:
  int vertices_;
  int cap_;
};

// Vertex caps for the exponential routines. EDGEPOLY_MAX_VERTICES, when set,
// replaces both defaults (see limits_from_environment).
struct Limits {
  int max_cycle_vertices = 16;
  int max_enum_vertices = 14;
};

// Largest cycle cap accepted; cycle vertex sets are packed into 64-bit masks.
inline constexpr int kHardCycleCap = 64;

Limits limits_from_environment();

}  // namespace edgepoly

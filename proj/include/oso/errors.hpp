#ifndef OSO_ERRORS_HPP
#define OSO_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oso {

/// Invalid or infeasible simulation configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Config file syntax or range problem, tagged with the 1-based line number.
class ParseError : public ConfigError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : ConfigError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A distance that violates the geometry guards (below the minimum distance).
class GeometryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A channel with zero energy where a positive norm is required.
class DegenerateChannelError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace oso

#endif  // OSO_ERRORS_HPP

#pragma once

#include <stdexcept>
#include <string>

namespace scb {

/// Input outside the domain of a model function (inverted bond, zero
/// denominator, unsupported surface normal, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Field/grid/mesh sizes that do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Invalid experiment, grid or mesh configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Degenerate or inconsistent finite element mesh.
class MeshError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  IoError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace scb

#pragma once

#include <stdexcept>
#include <string>

namespace gcs {

struct KindMismatch : std::invalid_argument {
  explicit KindMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct NotRegular : std::runtime_error {
  explicit NotRegular(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateEigenvalue : std::runtime_error {
  explicit DegenerateEigenvalue(const std::string& what) : std::runtime_error(what) {}
};

struct LeftStrongRegularLocus : std::runtime_error {
  explicit LeftStrongRegularLocus(const std::string& what) : std::runtime_error(what) {}
};

struct NotInCentralizer : std::runtime_error {
  explicit NotInCentralizer(const std::string& what) : std::runtime_error(what) {}
};

struct NotInStabilizer : std::runtime_error {
  explicit NotInStabilizer(const std::string& what) : std::runtime_error(what) {}
};

struct NoConvergence : std::runtime_error {
  explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct AmbiguousSaturation : std::runtime_error {
  explicit AmbiguousSaturation(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gcs

#pragma once

#include <stdexcept>
#include <string>

namespace lorhom {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised by deform_to_timelike when the projection has no length to spare.
class NoSlack : public Error {
 public:
  using Error::Error;
};

/// A grid column without a straddling cell: the sampling cannot witness
/// the intermediate-value property.
class ResolutionTooCoarse : public Error {
 public:
  using Error::Error;
};

class MalformedGrid : public Error {
 public:
  using Error::Error;
};

class IntegratorFailure : public Error {
 public:
  using Error::Error;
};

class SnapError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace lorhom

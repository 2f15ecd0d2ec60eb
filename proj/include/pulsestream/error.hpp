#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pulsestream {

// Base for every error thrown by the library. The CLI maps ResourceError to
// exit code 3 and every other Error to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

class UnsupportedBasisError : public Error {
 public:
  using Error::Error;
};

class SectorError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

class ConfigurationError : public Error {
 public:
  using Error::Error;
};

class ResolutionError : public Error {
 public:
  using Error::Error;
};

class CutoffError : public Error {
 public:
  CutoffError(const std::string& what, std::size_t required_cutoff)
      : Error(what), required_cutoff_(required_cutoff) {}

  // Photon cutoff that would have satisfied the requested tail bound.
  std::size_t required_cutoff() const noexcept { return required_cutoff_; }

 private:
  std::size_t required_cutoff_;
};

}  // namespace pulsestream

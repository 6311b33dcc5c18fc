#pragma once

#include <stdexcept>
#include <string>

namespace lapis {

// Mirrors the status codes of the C API in include/lapis/lapis.h.
enum class Status { Ok = 0, Invalid = 1, Config = 2, Numerical = 3, Io = 4 };

class Error : public std::runtime_error {
public:
  Error(Status s, const std::string& msg) : std::runtime_error(msg), status_(s) {}
  Status status() const noexcept { return status_; }

private:
  Status status_;
};

struct DimensionError : Error {
  explicit DimensionError(const std::string& m) : Error(Status::Invalid, m) {}
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& m) : Error(Status::Invalid, m) {}
};

// On-disk array format violations; names the offending field.
struct FormatError : Error {
  explicit FormatError(const std::string& m) : Error(Status::Io, m) {}
};

struct IoError : Error {
  explicit IoError(const std::string& m) : Error(Status::Io, m) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& m) : Error(Status::Config, m) {}
};

struct NumericalError : Error {
  explicit NumericalError(const std::string& m) : Error(Status::Numerical, m) {}
};

}  // namespace lapis

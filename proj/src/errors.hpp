#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cgcore {

// Error taxonomy shared by the library, the C API and the CLI.
// Malformed input and contract misuse map to input errors (exit 2),
// size-bound and search-region problems map to resource errors (exit 3).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class MalformedInputError : public Error {
 public:
  explicit MalformedInputError(const std::string& what,
                               std::string code = "malformed-input")
      : Error(std::move(code), what) {}
};

// A documented precondition was violated by the caller.
class ContractError : public Error {
 public:
  explicit ContractError(const std::string& what) : Error("contract", what) {}
};

// An exhaustive operation was asked to run above its configured size bound.
class ResourceLimitError : public Error {
 public:
  explicit ResourceLimitError(const std::string& what)
      : Error("resource-limit", what) {}
};

}  // namespace cgcore

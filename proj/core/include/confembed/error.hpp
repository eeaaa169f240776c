#pragma once

#include <stdexcept>
#include <string>

namespace confembed {

/// Category of a failure. The CLI maps these onto its exit codes.
enum class ErrorKind {
  Construction,  // invalid Lie type / rank bound
  Usage,         // bad argument combination, system mismatch, non-dominant input
  Resource,      // dimension guard exceeded
  Domain,        // critical level or other pole
  Validation,    // embedding data inconsistent
  Unsupported,   // operation not defined for this spec shape
  Parse,         // malformed text input
  UnknownSpec,   // catalog lookup failed
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace confembed

#pragma once

#include <stdexcept>
#include <string>

namespace lefcalc {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition of an operation was violated (invalid ladder, index out of
/// range, immoderate HPD input, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A LadderSuffix names a ladder that is not present in the registry.
class UnresolvedReference : public Error {
 public:
  explicit UnresolvedReference(const std::string& id)
      : Error("unresolved ladder reference '" + id + "'"), id_(id) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

/// Malformed or schema-violating ladder document. `path` is a JSON pointer.
class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& message)
      : Error(path.empty() ? message : path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace lefcalc

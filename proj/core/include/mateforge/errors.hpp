#pragma once

#include <stdexcept>
#include <string>

namespace mateforge {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// The input is not parseable at all (malformed JSON).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// The input parses but violates the document schema or a model invariant.
// `path()` is a JSON-pointer-like location of the offending field.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// A numeric field is NaN or infinite.
class NonFiniteError : public SchemaError {
 public:
  NonFiniteError(std::string path, const std::string& what)
      : SchemaError(std::move(path), what) {}
};

// Two parts are not connected by the mate graph.
class DisconnectedError : public Error {
 public:
  explicit DisconnectedError(const std::string& what) : Error(what) {}
};

// A geometric query received unusable input (empty mesh, zero direction, ...).
class GeometryError : public Error {
 public:
  explicit GeometryError(const std::string& what) : Error(what) {}
};

}  // namespace mateforge

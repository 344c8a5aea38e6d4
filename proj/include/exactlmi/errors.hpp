#pragma once

#include <stdexcept>
#include <string>

namespace exactlmi {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (rationals, pencil or parametrization files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A resource ceiling (wall time, basis size, coefficient size) was hit.
class TimeoutError : public Error {
 public:
  using Error::Error;
};

/// Broken internal invariant; indicates a bug, never a property of the input.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// The separating form does not put the ideal in shape position.
class NotShapeError : public Error {
 public:
  using Error::Error;
};

/// Two parametrizations map the same label t to different points.
class CollisionError : public Error {
 public:
  using Error::Error;
};

enum class GenericityStage { IsReg, Dimension, Shape, Projection };

inline const char* to_string(GenericityStage s) {
  switch (s) {
    case GenericityStage::IsReg: return "isreg";
    case GenericityStage::Dimension: return "dimension";
    case GenericityStage::Shape: return "shape";
    case GenericityStage::Projection: return "projection";
  }
  return "unknown";
}

/// The input (or a random choice) lies off the generic locus.
class GenericityError : public Error {
 public:
  GenericityError(GenericityStage stage, std::string context)
      : Error("the input is not generic (" + std::string(to_string(stage)) + ": " + context + ")"),
        stage_(stage),
        context_(std::move(context)) {}

  GenericityStage stage() const { return stage_; }
  const std::string& context() const { return context_; }

 private:
  GenericityStage stage_;
  std::string context_;
};

}  // namespace exactlmi

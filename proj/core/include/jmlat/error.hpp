#pragma once

#include <stdexcept>
#include <string>

namespace jmlat {

inline constexpr const char* kVersion = "0.1.0";

enum class ErrorCode {
  CycleDetected,
  NotALattice,
  NoBoundedElements,
  InvalidParams,
  VariableSetMismatch,
  ZeroPolynomial,
  ResourceLimit,
  MapNotTotal,
  ShapeNotRecognized,
  ParseError,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const { return code_; }

  static Error cycle(const std::string& what) { return {ErrorCode::CycleDetected, what}; }
  static Error not_a_lattice(const std::string& what) { return {ErrorCode::NotALattice, what}; }
  static Error invalid(const std::string& what) { return {ErrorCode::InvalidParams, what}; }
  static Error resource(const std::string& what) { return {ErrorCode::ResourceLimit, what}; }
  static Error parse(const std::string& what) { return {ErrorCode::ParseError, what}; }

 private:
  ErrorCode code_;
};

}  // namespace jmlat

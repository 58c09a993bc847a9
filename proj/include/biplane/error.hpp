#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace biplane {

enum class ErrorCode {
  LoopEdge,
  DuplicateEdge,
  MonochromaticEdge,
  BadColor,
  BadVertex,
  DomainError,
  EdgeInTwoCrossings,
  SharedEndpointCrossing,
  NonAlternatingDummy,
  NotAnEmbedding,
  MalformedRotation,
  NotExtremalStructure,
  UnsupportedPair,
  NotOnePlanar,
  Timeout,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every validation failure in the library is reported through this type.
/// The code names the violated invariant; the message carries the detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace biplane

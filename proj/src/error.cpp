#include "biplane/error.hpp"

namespace biplane {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::MonochromaticEdge: return "MonochromaticEdge";
    case ErrorCode::BadColor: return "BadColor";
    case ErrorCode::BadVertex: return "BadVertex";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::EdgeInTwoCrossings: return "EdgeInTwoCrossings";
    case ErrorCode::SharedEndpointCrossing: return "SharedEndpointCrossing";
    case ErrorCode::NonAlternatingDummy: return "NonAlternatingDummy";
    case ErrorCode::NotAnEmbedding: return "NotAnEmbedding";
    case ErrorCode::MalformedRotation: return "MalformedRotation";
    case ErrorCode::NotExtremalStructure: return "NotExtremalStructure";
    case ErrorCode::UnsupportedPair: return "UnsupportedPair";
    case ErrorCode::NotOnePlanar: return "NotOnePlanar";
    case ErrorCode::Timeout: return "Timeout";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code) {}

}  // namespace biplane

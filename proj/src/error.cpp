#include "lctopo/error.hpp"

namespace lctopo {

std::string_view error_token(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMissingEmpty: return "MissingEmpty";
    case ErrorCode::kMissingWhole: return "MissingWhole";
    case ErrorCode::kNotClosedUnderUnion: return "NotClosedUnderUnion";
    case ErrorCode::kNotClosedUnderIntersection: return "NotClosedUnderIntersection";
    case ErrorCode::kForeignPoint: return "ForeignPoint";
    case ErrorCode::kDuplicateLabel: return "DuplicateLabel";
    case ErrorCode::kRelationNotReflexive: return "RelationNotReflexive";
    case ErrorCode::kRelationNotTransitive: return "RelationNotTransitive";
    case ErrorCode::kUnknownProperty: return "UnknownProperty";
    case ErrorCode::kUnknownProposition: return "UnknownProposition";
    case ErrorCode::kUnknownKind: return "UnknownKind";
    case ErrorCode::kSizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::kMalformedFile: return "MalformedFile";
  }
  return "Unknown";
}

TopologyError::TopologyError(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_token(code)) + (detail.empty() ? "" : ": " + detail)),
      code_(code),
      detail_(detail) {}

}  // namespace lctopo

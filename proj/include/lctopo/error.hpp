#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lctopo {

enum class ErrorCode {
  kMissingEmpty,
  kMissingWhole,
  kNotClosedUnderUnion,
  kNotClosedUnderIntersection,
  kForeignPoint,
  kDuplicateLabel,
  kRelationNotReflexive,
  kRelationNotTransitive,
  kUnknownProperty,
  kUnknownProposition,
  kUnknownKind,
  kSizeCapExceeded,
  kMalformedFile,
};

// Stable token used in CLI output, e.g. "NotClosedUnderUnion".
std::string_view error_token(ErrorCode code);

class TopologyError : public std::runtime_error {
 public:
  TopologyError(ErrorCode code, const std::string& detail);

  ErrorCode code() const { return code_; }
  std::string_view token() const { return error_token(code_); }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace lctopo

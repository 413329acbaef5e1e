#pragma once

#include <stdexcept>
#include <string>

namespace strokelink {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  Io,
  DuplicateLabel,
  EmptyStore,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace strokelink

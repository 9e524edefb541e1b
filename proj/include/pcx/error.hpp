#pragma once
#include <stdexcept>
#include <string>

namespace pcx {

enum class ErrorKind {
  DegenerateWindow,
  UndefinedProjection,
  NeedsLargerRadius,
  NoPath,
  Domain,
  SizeCap,
  ProperPower,
  NoOp,
  CapExceeded,
  NotNormalForm,
  OutOfWindow,
  WindowExhausted,
  Config,
  Rejected,
  Parse,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pcx

#pragma once

#include <stdexcept>
#include <string>

namespace hermsig {

/// Domain error carrying a stable machine-readable code such as
/// "ZeroPolynomial" or "NotHermitian". The CLI reports `code()` verbatim.
class Error : public std::runtime_error {
 public:
  explicit Error(std::string code, const std::string& detail = {});

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace hermsig

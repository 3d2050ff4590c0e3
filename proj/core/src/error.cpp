#include "hermsig/error.hpp"

namespace hermsig {

Error::Error(std::string code, const std::string& detail)
    : std::runtime_error(detail.empty() ? code : code + ": " + detail),
      code_(std::move(code)) {}

}  // namespace hermsig

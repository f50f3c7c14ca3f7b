#pragma once

#include <stdexcept>
#include <string>

namespace logchern {

enum class Errc {
  model_mismatch,
  grade_mismatch,
  invalid_argument,
  parse_error,
  empty_range,
  internal,
};

// Every failure raised by the core carries one of the codes above; the C API
// maps them one-to-one onto lc_status values.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace logchern

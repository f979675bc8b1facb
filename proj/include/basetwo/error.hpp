#pragma once

#include <stdexcept>
#include <string>

namespace basetwo {

enum class Errc {
  degree_mismatch,
  invalid_argument,
  bound_exceeded,
  parent_mismatch,
  not_core_free,
  unsupported,
  lattice_incomplete,
  integrity,
  io,
};

const char* to_string(Errc code);

/// Single exception type for the library; `code()` distinguishes the cause.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace basetwo

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace redspec {

enum class ErrorKind {
  GridMismatch,
  Horizon,
  Domain,
  Division,
  Parse,
  Tail,
  Growth,
  Usage,
};

std::string_view to_string(ErrorKind k) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace redspec

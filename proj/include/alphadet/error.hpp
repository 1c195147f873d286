#pragma once

#include <stdexcept>
#include <string>

namespace alphadet {

enum class ErrorKind {
  Input,        // malformed or inconsistent arguments
  SizeLimit,    // a configured bound was exceeded
  Unsupported,  // operation not defined for the given mode (e.g. alpha = infinity)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_input(const std::string& what) { throw Error(ErrorKind::Input, what); }
[[noreturn]] inline void throw_unsupported(const std::string& what) {
  throw Error(ErrorKind::Unsupported, what);
}

}  // namespace alphadet

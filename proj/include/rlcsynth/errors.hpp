#pragma once

#include <stdexcept>
#include <string>

namespace rlcsynth {

enum class ErrorKind {
  NotPassive,
  NotCoprime,
  NotInZ2,
  NotInZ12,
  NotInZ30,
  NotInZ3,
  Undecided,
  InvalidElementValue,
  Parse,
  Precondition,
};

const char* error_name(ErrorKind k);

class SynthesisError : public std::runtime_error {
 public:
  SynthesisError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw SynthesisError(kind, what); }

}  // namespace rlcsynth

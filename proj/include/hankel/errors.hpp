#ifndef HANKEL_ERRORS_HPP
#define HANKEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hankel {

enum class Err {
  ZeroForm,
  DegreeMismatch,
  NotApolar,
  NotCoprime,
  IrrationalNodes,
  ZeroCoefficient,
  OddDegree,
  DimensionMismatch,
  EmptyKernel,
  EmptySpace,
  CenterOnThirdSecant,
  ProperDivisor,
  VerificationFailed,
  SearchExhausted,
  DegreeTooSmall,
  CenterOnSecant,
  GenericTypeRequired,
  OpenInterval,
  ParseError,
  Internal,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& msg, long position = -1)
      : std::runtime_error(std::string(err_name(kind)) + ": " + msg),
        kind_(kind),
        position_(position) {}

  Err kind() const { return kind_; }
  long position() const { return position_; }  // byte offset for ParseError

 private:
  Err kind_;
  long position_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg, long pos = -1) {
  throw Error(kind, msg, pos);
}

}  // namespace hankel

#endif

#pragma once

#include <stdexcept>
#include <string>

namespace trigbound {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed argument (negative index, non-finite value, bad literal, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the analytic domain, e.g. sigma <= 1.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Exact-mode operation requested on floating input.
class ModeError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition on the polynomial (Conditions I-III, certified
/// non-negativity, a0 > 0) does not hold.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Requested accuracy is below what binary64 evaluation can certify.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

}  // namespace trigbound

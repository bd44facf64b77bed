#pragma once

#include <stdexcept>
#include <string>

#include "flatcover/element_set.hpp"

namespace flatcover {

enum class ErrorCode {
  EmptyFamily,
  WrongCardinality,
  ExchangeViolation,
  PreconditionViolated,
  NotIsolated,
  NotDependent,
  InvalidCertificate,
  RankOutOfRange,
  TooLarge,
  EmptyInput,
  ZeroDegree,
  ResidualOutsideA,
  Parse,
};

const char* to_string(ErrorCode code);

/// Base exception for every failure the library reports.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// The basis exchange axiom fails for B, B' and e in B \ B'.
class ExchangeViolation : public Error {
 public:
  ExchangeViolation(ElementSet b, ElementSet b_prime, int e);

  ElementSet b;
  ElementSet b_prime;
  int e;
};

}  // namespace flatcover

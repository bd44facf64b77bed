#include "flatcover/element_set.hpp"

#include "flatcover/error.hpp"

namespace flatcover {

std::string ElementSet::to_string() const {
  std::string out;
  for (int e : elements()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e);
  }
  return out;
}

std::vector<ElementSet> subsets_of_size(int n, int k) {
  std::vector<ElementSet> out;
  if (k < 0 || k > n) return out;
  out.reserve(binomial(n, k));
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  const std::uint64_t count = binomial(n, k);
  ElementSet::Word x = (ElementSet::Word{1} << k) - 1;
  for (std::uint64_t i = 0; i < count; ++i) {
    out.emplace_back(x);
    if (i + 1 < count) x = next_same_size(x);
  }
  return out;
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::WrongCardinality: return "WrongCardinality";
    case ErrorCode::ExchangeViolation: return "ExchangeViolation";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotIsolated: return "NotIsolated";
    case ErrorCode::NotDependent: return "NotDependent";
    case ErrorCode::InvalidCertificate: return "InvalidCertificate";
    case ErrorCode::RankOutOfRange: return "RankOutOfRange";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::ZeroDegree: return "ZeroDegree";
    case ErrorCode::ResidualOutsideA: return "ResidualOutsideA";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

ExchangeViolation::ExchangeViolation(ElementSet b, ElementSet b_prime, int e)
    : Error(ErrorCode::ExchangeViolation,
            "B={" + b.to_string() + "} B'={" + b_prime.to_string() + "} e=" + std::to_string(e)),
      b(b),
      b_prime(b_prime),
      e(e) {}

}  // namespace flatcover

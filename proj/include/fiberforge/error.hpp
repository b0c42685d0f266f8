#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fiberforge {

enum class ErrorCode {
  IncomparableVariables,
  UnknownVariable,
  RingMismatch,
  ZeroPolynomial,
  PartialHomomorphism,
  BadIndex,
  NotA1,
  DimensionTooSmall,
  BadParams,
  TruncationNeedsHomogeneous,
  BeyondTruncation,
  BudgetExceeded,
  NotHomogeneous,
  OutOfTable,
  NotInS,
  TooManyVariables,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IncomparableVariables: return "IncomparableVariables";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::PartialHomomorphism: return "PartialHomomorphism";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::NotA1: return "NotA1";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::TruncationNeedsHomogeneous: return "TruncationNeedsHomogeneous";
    case ErrorCode::BeyondTruncation: return "BeyondTruncation";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::OutOfTable: return "OutOfTable";
    case ErrorCode::NotInS: return "NotInS";
    case ErrorCode::TooManyVariables: return "TooManyVariables";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when a Groebner computation runs past its deadline. The partial
/// state is what had been computed when the deadline hit.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string stage, std::size_t basis_size, std::size_t pending_pairs,
                 int current_degree)
      : Error(ErrorCode::BudgetExceeded,
              stage + " (basis " + std::to_string(basis_size) + ", pending pairs " +
                  std::to_string(pending_pairs) + ", degree " + std::to_string(current_degree) +
                  ")"),
        stage_(std::move(stage)),
        basis_size_(basis_size),
        pending_pairs_(pending_pairs),
        current_degree_(current_degree) {}

  const std::string& stage() const noexcept { return stage_; }
  std::size_t basis_size() const noexcept { return basis_size_; }
  std::size_t pending_pairs() const noexcept { return pending_pairs_; }
  int current_degree() const noexcept { return current_degree_; }

 private:
  std::string stage_;
  std::size_t basis_size_;
  std::size_t pending_pairs_;
  int current_degree_;
};

}  // namespace fiberforge

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace grpd {

enum class ErrorKind {
  kAxiomViolation,
  kNotAnAction,
  kNotSameOrbit,
  kCocycleViolation,
  kCompatibilityViolation,
  kEndpointMismatch,
  kGroupoidMismatch,
  kCoherenceViolation,
  kNotAFunctor,
  kNotConduche,
  kNodeNotDiscrete,
  kFactorizationNotBijective,
  kHexagonViolation,
  kUnknownLetter,
  kUnknownWord,
  kInfiniteGroup,
  kInput,
};

std::string_view to_string(ErrorKind kind);

// Input errors are about how data was supplied or combined; everything else
// is a law failure of a well-formed object.
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string law, std::vector<std::string> witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& law() const noexcept { return law_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::string law_;
  std::vector<std::string> witness_;
};

[[noreturn]] void fail(ErrorKind kind, std::string law, std::vector<std::string> witness = {});
[[noreturn]] void input_error(std::string message);

}  // namespace grpd

#include "grpd/error.hpp"

namespace grpd {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kAxiomViolation: return "AxiomViolation";
    case ErrorKind::kNotAnAction: return "NotAnAction";
    case ErrorKind::kNotSameOrbit: return "NotSameOrbit";
    case ErrorKind::kCocycleViolation: return "CocycleViolation";
    case ErrorKind::kCompatibilityViolation: return "CompatibilityViolation";
    case ErrorKind::kEndpointMismatch: return "EndpointMismatch";
    case ErrorKind::kGroupoidMismatch: return "GroupoidMismatch";
    case ErrorKind::kCoherenceViolation: return "CoherenceViolation";
    case ErrorKind::kNotAFunctor: return "NotAFunctor";
    case ErrorKind::kNotConduche: return "NotConduche";
    case ErrorKind::kNodeNotDiscrete: return "NodeNotDiscrete";
    case ErrorKind::kFactorizationNotBijective: return "FactorizationNotBijective";
    case ErrorKind::kHexagonViolation: return "HexagonViolation";
    case ErrorKind::kUnknownLetter: return "UnknownLetter";
    case ErrorKind::kUnknownWord: return "UnknownWord";
    case ErrorKind::kInfiniteGroup: return "InfiniteGroup";
    case ErrorKind::kInput: return "InputError";
  }
  return "Error";
}

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInput:
    case ErrorKind::kEndpointMismatch:
    case ErrorKind::kGroupoidMismatch:
    case ErrorKind::kNotSameOrbit:
    case ErrorKind::kUnknownLetter:
    case ErrorKind::kUnknownWord:
    case ErrorKind::kInfiniteGroup:
      return true;
    default:
      return false;
  }
}

namespace {

std::string describe(ErrorKind kind, const std::string& law, const std::vector<std::string>& witness) {
  std::string out(to_string(kind));
  out += "(" + law;
  if (!witness.empty()) {
    out += "; ";
    for (std::size_t i = 0; i < witness.size(); ++i) {
      if (i) out += ", ";
      out += witness[i];
    }
  }
  out += ")";
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, std::string law, std::vector<std::string> witness)
    : std::runtime_error(describe(kind, law, witness)),
      kind_(kind),
      law_(std::move(law)),
      witness_(std::move(witness)) {}

void fail(ErrorKind kind, std::string law, std::vector<std::string> witness) {
  throw Error(kind, std::move(law), std::move(witness));
}

void input_error(std::string message) { throw Error(ErrorKind::kInput, std::move(message)); }

}  // namespace grpd

#include "heckecentre/error.hpp"

namespace hc {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotExact: return "NotExact";
    case Errc::MissingAssignment: return "MissingAssignment";
    case Errc::ZeroAtNegativeExponent: return "ZeroAtNegativeExponent";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NotInvariant: return "NotInvariant";
    case Errc::NegativeExponentInput: return "NegativeExponentInput";
    case Errc::NotAPower: return "NotAPower";
    case Errc::ZeroConstantTerm: return "ZeroConstantTerm";
    case Errc::ZeroRoot: return "ZeroRoot";
    case Errc::IrrationalRoots: return "IrrationalRoots";
    case Errc::DegenerateParameter: return "DegenerateParameter";
    case Errc::ParameterMismatch: return "ParameterMismatch";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::LimitExceeded: return "LimitExceeded";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace hc

#include "reebforge/error.hpp"

namespace reebforge {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MissingFace: return "MissingFace";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::DuplicateSimplex: return "DuplicateSimplex";
    case ErrorKind::EmptySimplex: return "EmptySimplex";
    case ErrorKind::InconsistentCoordinates: return "InconsistentCoordinates";
    case ErrorKind::NotSimplicial: return "NotSimplicial";
    case ErrorKind::NonMonotoneMap: return "NonMonotoneMap";
    case ErrorKind::ValueCountMismatch: return "ValueCountMismatch";
    case ErrorKind::UnknownSimplex: return "UnknownSimplex";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace reebforge

#include "hermquad/error.hpp"

namespace hermquad {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidRank: return "InvalidRank";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NonExactDivision: return "NonExactDivision";
    case Errc::InconsistentDecomposition: return "InconsistentDecomposition";
    case Errc::ZeroValue: return "ZeroValue";
    case Errc::ZeroPolynomialDegree: return "ZeroPolynomialDegree";
    case Errc::InvalidExtension: return "InvalidExtension";
    case Errc::UnsupportedDimension: return "UnsupportedDimension";
    case Errc::InvalidPlace: return "InvalidPlace";
    case Errc::Overflow: return "Overflow";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

}  // namespace hermquad

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hermquad {

/// Failure categories raised by the library. The names are part of the
/// machine-readable output contract of the CLI, see errc_name().
enum class Errc {
  InvalidRank,
  DivisionByZero,
  NonExactDivision,
  InconsistentDecomposition,
  ZeroValue,
  ZeroPolynomialDegree,
  InvalidExtension,
  UnsupportedDimension,
  InvalidPlace,
  Overflow,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace hermquad

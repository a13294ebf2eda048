#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hermquad/quadforms.hpp"
#include "serialize.hpp"

namespace hermquad::cli {

inline constexpr const char* kSchemaVersion = "1.0";

/// Closed interval A..B of ranks.
struct Range {
  std::int64_t from = 0;
  std::int64_t to = 0;
};

/// Either a single rank or an inclusive sweep.
struct Target {
  std::optional<std::int64_t> n;
  std::optional<Range> range;
};

enum class Variety { Quadric, Hermitian, Projective };

struct HermitianInput {
  Rational a;
  std::vector<Rational> b;
};

namespace cmd {

struct Poincare {
  Variety variety = Variety::Hermitian;
  std::int64_t n = 0;  // m for projective space
  int point_factor = 2;
  std::optional<std::int64_t> at;
};
struct MotiveDecompose {
  Variety variety = Variety::Hermitian;
  std::int64_t n = 0;
};
struct MotiveNh {
  Target target;
};
struct MotiveVerifyKrashen {
  Target target;
};
struct MotiveVishik {
  std::int64_t m = 0;
  Target k;
};
struct RostEta2 {
  Target target;
};
struct RostIncompressible {
  std::int64_t n = 0;
  bool anisotropic = false;
  std::optional<HermitianInput> space;  // anisotropy decided from the space
};
struct RostDegreeFilter {
  Target target;
};
struct FormTrace {
  HermitianInput space;
};
struct FormDet {
  std::vector<Rational> q;
};
struct FormHilbert {
  Rational x;
  Rational y;
  std::optional<std::int64_t> place;  // 0 = real place
};
struct FormHasse {
  std::vector<Rational> q;
  std::optional<std::int64_t> place;
};
struct FormWittIndex {
  std::vector<Rational> q;
  std::optional<std::int64_t> place;
};
struct FormIsotropic {
  std::optional<std::vector<Rational>> q;
  std::optional<HermitianInput> space;
};
struct FormHyperbolicOver {
  std::vector<Rational> q;
  Rational a;
};
struct FormCheckMh {
  std::vector<Rational> q;
  Rational a;
};
struct EssDim {
  std::int64_t n = 0;
  std::optional<std::int64_t> i1;
};
struct FirstWittSpecial {
  std::int64_t dim_q = 0;
};

}  // namespace cmd

using Command = std::variant<cmd::Poincare, cmd::MotiveDecompose, cmd::MotiveNh, cmd::MotiveVerifyKrashen,
                             cmd::MotiveVishik, cmd::RostEta2, cmd::RostIncompressible, cmd::RostDegreeFilter,
                             cmd::FormTrace, cmd::FormDet, cmd::FormHilbert, cmd::FormHasse,
                             cmd::FormWittIndex, cmd::FormIsotropic, cmd::FormHyperbolicOver,
                             cmd::FormCheckMh, cmd::EssDim, cmd::FirstWittSpecial>;

/// Subcommand path of a command, e.g. "motive verify-krashen".
std::string command_name(const Command& c);

struct Invocation {
  Command command;
  bool json = false;
};

/// Bad command line; the message names the offending flag. Exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for --help; carries the rendered help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// argv excludes the program name.
Invocation parse_command(const std::vector<std::string>& argv);

enum class Status { Ok, Violated, Error };

const char* to_string(Status s) noexcept;
int exit_code(Status s) noexcept;

struct OutputEnvelope {
  std::string command;
  Status status = Status::Ok;
  Json payload;
  std::string version = kSchemaVersion;
  /// Human-readable rendering of the payload.
  std::string text;
};

Json to_json(const OutputEnvelope& e);

/// Library errors become status = error with the error name in the payload.
OutputEnvelope execute(const Command& c);

/// Parse, execute, print. Returns the process exit code.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace hermquad::cli

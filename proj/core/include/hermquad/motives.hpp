#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hermquad/poly.hpp"

namespace hermquad {

// Base motives. Every one of them splits over L into twisted Tate motives,
// so each has a well-defined Poincaré polynomial (see realize_split).
namespace motive {

struct TateF {
  auto operator<=>(const TateF&) const = default;
};
struct SpecL {
  auto operator<=>(const SpecL&) const = default;
};
/// Projective space of dimension m over L.
struct ProjL {
  std::int64_t m;
  auto operator<=>(const ProjL&) const = default;
};
/// Projective space of dimension m over F.
struct ProjF {
  std::int64_t m;
  auto operator<=>(const ProjF&) const = default;
};
/// Quadric of the 2n-dimensional trace form of a rank n Hermitian space.
struct SplitQuadric {
  std::int64_t n;
  auto operator<=>(const SplitQuadric&) const = default;
};
/// Hermitian quadric V(h) for rank n.
struct HermitianQuadric {
  std::int64_t n;
  auto operator<=>(const HermitianQuadric&) const = default;
};
/// The common summand N_h of M(V(q)) and M(V(h)).
struct Nh {
  std::int64_t n;
  auto operator<=>(const Nh&) const = default;
};
/// Summand N of the quadric of q' (x) phi, phi m-fold Pfister, dim q' = k.
struct VishikN {
  std::int64_t m;
  std::int64_t k;
  auto operator<=>(const VishikN&) const = default;
};
/// Quadric of an m-fold Pfister form (dimension 2^m - 2).
struct PfisterQuadric {
  std::int64_t m;
  auto operator<=>(const PfisterQuadric&) const = default;
};

}  // namespace motive

using MotiveBase = std::variant<motive::TateF, motive::SpecL, motive::ProjL, motive::ProjF,
                                motive::SplitQuadric, motive::HermitianQuadric, motive::Nh,
                                motive::VishikN, motive::PfisterQuadric>;

std::string base_name(const MotiveBase& base);
std::vector<std::int64_t> base_params(const MotiveBase& base);

/// Throws InvalidRank if the parameters are outside the realizable range.
void validate(const MotiveBase& base);

struct Summand {
  MotiveBase base;
  std::int64_t shift = 0;  // Tate twist {shift}

  auto operator<=>(const Summand&) const = default;
};

/**
 * A formal direct sum of twisted base motives. Multiset semantics: the
 * summands are kept sorted by (base, shift), so equality ignores the order
 * in which they were added but counts multiplicities.
 */
class MotiveExpression {
 public:
  MotiveExpression() = default;
  MotiveExpression(std::initializer_list<Summand> summands);

  void add(MotiveBase base, std::int64_t shift = 0);
  void add(const MotiveExpression& other);

  const std::vector<Summand>& summands() const noexcept { return summands_; }
  std::size_t size() const noexcept { return summands_.size(); }
  bool empty() const noexcept { return summands_.empty(); }

  friend bool operator==(const MotiveExpression&, const MotiveExpression&) = default;

 private:
  std::vector<Summand> summands_;
};

/// e.g. "M(Spec L){2} ⊕ N_h(3) ⊕ N_h(3){1}"
std::string to_string(const MotiveExpression& e);

/// Poincaré polynomial over the splitting field L.
IntPolynomial realize_split(const MotiveExpression& e);
IntPolynomial realize_split(const MotiveBase& base);

/// M(V(q)) = N_h + N_h{1}, plus M(Spec L){n-1} when n is odd.
MotiveExpression decompose_quadric(std::int64_t n);

/// M(V(h)) = N_h + sum of M(P_L^{n-1}){2i+1} (n even) or M(P_L^{n-2}){2i+1} (n odd).
MotiveExpression decompose_hermitian(std::int64_t n);

/// M(P_L^m) = sum_{i=0}^m M(Spec L){i}
MotiveExpression expand_projective_bundle(std::int64_t m);

/**
 * Poincaré polynomial of N_h: P_{V(h)} minus the explicit projective
 * summands of the Hermitian decomposition. The result is cross-checked
 * against the quadric decomposition; a negative coefficient or a failed
 * cross-check throws InconsistentDecomposition.
 */
IntPolynomial solve_nh(std::int64_t n);

struct VerificationReport {
  std::int64_t n = 0;
  bool holds = false;
  IntPolynomial lhs;
  IntPolynomial rhs;
};

/// Both sides of M(V(q)) + sum_{i=1}^{n-2} M(P_L^{n-1}){i} = M(V(h)) + M(V(h)){1}.
MotiveExpression krashen_lhs(std::int64_t n);
MotiveExpression krashen_rhs(std::int64_t n);
VerificationReport verify_krashen(std::int64_t n);

struct VishikReport {
  std::int64_t m = 0;
  std::int64_t k = 0;
  std::int64_t dim_q = 0;  // k * 2^m
  /// k == 1: the Pfister correction absorbs the whole quadric and P_N = 0.
  bool degenerate = false;
  bool exact_division = false;
  bool nonnegative = false;
  /// Empty for the degenerate case, otherwise exact_division && nonnegative.
  std::optional<bool> holds;
  IntPolynomial p_n;
  /// Only for m == 1: whether P_N coincides with solve_nh(k).
  std::optional<bool> matches_nh;
};

/// Realization-level check of M(Q_q) = N (x) M(P^{2^m-1}) [+ M(Q_phi){dim q/2 - 2^{m-1}}].
VishikReport vishik_solve(std::int64_t m, std::int64_t k);

}  // namespace hermquad

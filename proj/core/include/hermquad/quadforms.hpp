#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace hermquad {

using Rational = boost::rational<std::int64_t>;

/// Element of Q*/Q*^2, represented by its unique squarefree integer.
class SquareClass {
 public:
  /// Class of a nonzero integer. Throws ZeroValue for 0.
  static SquareClass of(std::int64_t x);
  static SquareClass of(const Rational& x);

  std::int64_t value() const noexcept { return value_; }
  bool is_trivial() const noexcept { return value_ == 1; }

  friend SquareClass operator*(SquareClass x, SquareClass y);
  SquareClass operator-() const;

  auto operator<=>(const SquareClass&) const = default;

 private:
  explicit SquareClass(std::int64_t v) : value_(v) {}
  std::int64_t value_ = 1;
};

SquareClass normalize_square_class(const Rational& x);

/// A completion of Q: the real place or Q_p.
class Place {
 public:
  static Place real() noexcept { return Place(0); }
  /// Throws InvalidPlace unless p is prime.
  static Place prime(std::int64_t p);

  bool is_real() const noexcept { return p_ == 0; }
  /// The prime p; 0 for the real place.
  std::int64_t prime() const noexcept { return p_; }

  auto operator<=>(const Place&) const = default;

 private:
  explicit Place(std::int64_t p) : p_(p) {}
  std::int64_t p_;
};

/// "inf" for the real place, the decimal prime otherwise.
std::string to_string(const Place& v);

/// Nondegenerate diagonal form <a_1, ..., a_d> over Q with square-class entries.
class DiagonalQuadraticForm {
 public:
  /// Throws InvalidRank for an empty entry list.
  explicit DiagonalQuadraticForm(std::vector<SquareClass> entries);
  static DiagonalQuadraticForm from_rationals(const std::vector<Rational>& entries);
  static DiagonalQuadraticForm from_integers(const std::vector<std::int64_t>& entries);

  std::size_t dim() const noexcept { return entries_.size(); }
  const std::vector<SquareClass>& entries() const noexcept { return entries_; }

  /// Orthogonal sum.
  friend DiagonalQuadraticForm operator+(const DiagonalQuadraticForm& q,
                                         const DiagonalQuadraticForm& r);
  friend bool operator==(const DiagonalQuadraticForm&, const DiagonalQuadraticForm&) = default;

 private:
  std::vector<SquareClass> entries_;
};

std::string to_string(const DiagonalQuadraticForm& q);

/**
 * Diagonalized Hermitian space over L = Q(sqrt a): h = <b_1, ..., b_n>
 * with b_i in Q*. Throws InvalidExtension when a is a square and
 * ZeroValue for a zero entry.
 */
class HermitianSpace {
 public:
  HermitianSpace(SquareClass a, std::vector<Rational> entries);

  SquareClass a() const noexcept { return a_; }
  const std::vector<Rational>& entries() const noexcept { return entries_; }
  std::int64_t rank() const noexcept { return static_cast<std::int64_t>(entries_.size()); }

 private:
  SquareClass a_;
  std::vector<Rational> entries_;
};

/// q(v) = h(v, v) = <b_1, -a b_1, ..., b_n, -a b_n>
DiagonalQuadraticForm trace_form(const HermitianSpace& h);

SquareClass determinant_class(const DiagonalQuadraticForm& q);

/// (x, y)_v in {+1, -1}.
int hilbert_symbol(SquareClass x, SquareClass y, const Place& v);

/// prod_{i<j} (a_i, a_j)_v
int hasse_invariant(const DiagonalQuadraticForm& q, const Place& v);

/// Whether x is a square in Q_v.
bool is_local_square(SquareClass x, const Place& v);

/// Real place, 2, and the odd primes dividing an entry of q or an extra class.
/// At every other place all the Hilbert symbols involved are trivial.
std::set<Place> relevant_places(const DiagonalQuadraticForm& q,
                                const std::vector<SquareClass>& extras = {});

/// Witt decomposition q_v = i H + q_an over a completion, in terms of
/// the invariants of the anisotropic part.
struct LocalWittData {
  std::int64_t witt_index = 0;
  std::int64_t anisotropic_dim = 0;
  SquareClass anisotropic_det = SquareClass::of(1);
  int anisotropic_hasse = 1;
};

LocalWittData local_witt_decomposition(const DiagonalQuadraticForm& q, const Place& v);
std::int64_t local_witt_index(const DiagonalQuadraticForm& q, const Place& v);
bool is_locally_isotropic(const DiagonalQuadraticForm& q, const Place& v);

/// min of the local Witt indices over the relevant places.
std::int64_t global_witt_index(const DiagonalQuadraticForm& q);
bool is_isotropic_global(const DiagonalQuadraticForm& q);

/// h is anisotropic iff its trace form is.
bool is_anisotropic_hermitian(const HermitianSpace& h);

/// A clause of a criterion that fails, with the place where it fails
/// (nullopt for a global condition).
struct Witness {
  std::optional<Place> place;
  std::string clause;
  std::string reason;
};

struct HyperbolicityReport {
  bool hyperbolic = false;
  std::vector<Witness> witnesses;
};

/**
 * Decides whether q becomes hyperbolic over Q(sqrt a) using local data
 * over Q only: at a place where a is a square q itself has to be
 * hyperbolic, elsewhere the Witt class of q has to lie in <1,-a> W(Q_v).
 * Throws InvalidExtension if a is a square class.
 */
HyperbolicityReport hyperbolicity_over_extension(const DiagonalQuadraticForm& q, SquareClass a);
bool is_hyperbolic_over_extension(const DiagonalQuadraticForm& q, SquareClass a);

struct MHReport {
  bool dim_ok = false;
  bool hyperbolic_over_L = false;
  bool det_ok = false;
  bool passes = false;
  std::vector<Witness> witnesses;
};

/// Is q the trace form of some Hermitian form over Q(sqrt a)?
/// dim q = 2n, q_L hyperbolic and det q = (-a)^n.
MHReport milnor_husemoller_check(const DiagonalQuadraticForm& q, SquareClass a);

/// dim V(h) - i_1 + 2 for the Hermitian quadric of rank n.
std::int64_t essential_dimension(std::int64_t n, std::int64_t first_witt_index);

/// i_1 of an anisotropic trace form of dimension 2^r + 2: Hoffmann's bound
/// gives 1 or 2 and evenness for Hermitian trace forms leaves 2.
/// Throws UnsupportedDimension for other dimensions.
std::int64_t first_witt_index_special(std::int64_t dim_q);

}  // namespace hermquad

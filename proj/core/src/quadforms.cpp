#include "hermquad/quadforms.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>

#include "hermquad/error.hpp"

namespace hermquad {

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Deterministic for all 64-bit inputs with these witnesses.
bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mul_mod(x, x, n) + c) % n; };
    u64 x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void collect_prime_factors(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
      collect_prime_factors(n, out);
      return;
    }
  }
  u64 d = pollard_rho(n);
  collect_prime_factors(d, out);
  collect_prime_factors(n / d, out);
}

std::vector<u64> distinct_prime_factors(u64 n) {
  std::vector<u64> out;
  collect_prime_factors(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

u64 magnitude(std::int64_t x) {
  return x < 0 ? u64{0} - static_cast<u64>(x) : static_cast<u64>(x);
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(x, y, &r)) throw Error(Errc::Overflow, "square class product overflows");
  return r;
}

// Squarefree part of a nonzero magnitude.
u64 squarefree_part(u64 n) {
  u64 result = 1;
  for (u64 p : distinct_prime_factors(n)) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2 != 0) result *= p;
  }
  return result;
}

int p_adic_valuation(std::int64_t x, std::int64_t p) {
  u64 m = magnitude(x);
  const auto up = static_cast<u64>(p);
  int v = 0;
  while (m % up == 0) {
    m /= up;
    ++v;
  }
  return v;
}

// x / p^{v_p(x)}
std::int64_t unit_part(std::int64_t x, std::int64_t p) {
  while (x % p == 0) x /= p;
  return x;
}

// Legendre symbol of a unit u modulo the odd prime p.
int legendre(std::int64_t u, std::int64_t p) {
  const auto up = static_cast<u64>(p);
  std::int64_t r = u % p;
  if (r < 0) r += p;
  return pow_mod(static_cast<u64>(r), (up - 1) / 2, up) == 1 ? 1 : -1;
}

std::int64_t mod8(std::int64_t u) { return ((u % 8) + 8) % 8; }

int hilbert_symbol_raw(std::int64_t x, std::int64_t y, const Place& v) {
  if (v.is_real()) return (x < 0 && y < 0) ? -1 : 1;
  const std::int64_t p = v.prime();
  const int alpha = p_adic_valuation(x, p);
  const int beta = p_adic_valuation(y, p);
  const std::int64_t u = unit_part(x, p);
  const std::int64_t w = unit_part(y, p);

  if (p == 2) {
    auto eps = [](std::int64_t t) { return mod8(t) % 4 == 3 ? 1 : 0; };
    auto omega = [](std::int64_t t) { return (mod8(t) == 3 || mod8(t) == 5) ? 1 : 0; };
    const int e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
    return e % 2 == 0 ? 1 : -1;
  }

  int r = 1;
  if ((alpha * beta) % 2 != 0 && ((p - 1) / 2) % 2 != 0) r = -r;
  if (beta % 2 != 0) r *= legendre(u, p);
  if (alpha % 2 != 0) r *= legendre(w, p);
  return r;
}

// Isotropy over Q_p of a form with dimension dim, determinant det and
// Hasse invariant prod_{i<j} (a_i, a_j)_p.
bool invariants_isotropic(std::int64_t dim, SquareClass det, int hasse, const Place& v) {
  const SquareClass minus_one = SquareClass::of(-1);
  switch (dim) {
    case 0:
    case 1:
      return false;
    case 2:
      return is_local_square(-det, v);
    case 3:
      return hilbert_symbol(minus_one, -det, v) == hasse;
    case 4:
      return !is_local_square(det, v) || hasse == hilbert_symbol(minus_one, minus_one, v);
    default:
      return true;
  }
}

}  // namespace

// --- SquareClass ------------------------------------------------------------

SquareClass SquareClass::of(std::int64_t x) {
  if (x == 0) throw Error(Errc::ZeroValue, "zero has no square class");
  const u64 sf = squarefree_part(magnitude(x));
  const auto v = static_cast<std::int64_t>(sf);
  return SquareClass(x < 0 ? -v : v);
}

SquareClass SquareClass::of(const Rational& x) {
  if (x.numerator() == 0) throw Error(Errc::ZeroValue, "zero has no square class");
  // x = p/q lies in the class of p*q.
  return of(x.numerator()) * of(x.denominator());
}

SquareClass operator*(SquareClass x, SquareClass y) {
  const auto g = static_cast<std::int64_t>(std::gcd(magnitude(x.value_), magnitude(y.value_)));
  return SquareClass(checked_mul(x.value_ / g, y.value_ / g));
}

SquareClass SquareClass::operator-() const { return SquareClass(-value_); }

SquareClass normalize_square_class(const Rational& x) { return SquareClass::of(x); }

// --- Place ------------------------------------------------------------------

Place Place::prime(std::int64_t p) {
  if (p < 2 || !is_prime(static_cast<u64>(p)))
    throw Error(Errc::InvalidPlace, std::to_string(p) + " is not prime");
  return Place(p);
}

std::string to_string(const Place& v) {
  return v.is_real() ? std::string("inf") : std::to_string(v.prime());
}

// --- Forms ------------------------------------------------------------------

DiagonalQuadraticForm::DiagonalQuadraticForm(std::vector<SquareClass> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(Errc::InvalidRank, "a quadratic form needs at least one entry");
}

DiagonalQuadraticForm DiagonalQuadraticForm::from_rationals(const std::vector<Rational>& entries) {
  std::vector<SquareClass> classes;
  classes.reserve(entries.size());
  for (const auto& e : entries) classes.push_back(SquareClass::of(e));
  return DiagonalQuadraticForm(std::move(classes));
}

DiagonalQuadraticForm DiagonalQuadraticForm::from_integers(const std::vector<std::int64_t>& entries) {
  std::vector<SquareClass> classes;
  classes.reserve(entries.size());
  for (auto e : entries) classes.push_back(SquareClass::of(e));
  return DiagonalQuadraticForm(std::move(classes));
}

DiagonalQuadraticForm operator+(const DiagonalQuadraticForm& q, const DiagonalQuadraticForm& r) {
  std::vector<SquareClass> entries(q.entries_);
  entries.insert(entries.end(), r.entries_.begin(), r.entries_.end());
  return DiagonalQuadraticForm(std::move(entries));
}

std::string to_string(const DiagonalQuadraticForm& q) {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < q.dim(); ++i) os << (i ? "," : "") << q.entries()[i].value();
  os << ">";
  return os.str();
}

HermitianSpace::HermitianSpace(SquareClass a, std::vector<Rational> entries)
    : a_(a), entries_(std::move(entries)) {
  if (a_.is_trivial()) throw Error(Errc::InvalidExtension, "a = 1 is a square; Q(sqrt a) is not a field");
  if (entries_.empty()) throw Error(Errc::InvalidRank, "a Hermitian space needs at least one entry");
  for (const auto& b : entries_) {
    if (b.numerator() == 0) throw Error(Errc::ZeroValue, "degenerate Hermitian form: zero entry");
  }
}

DiagonalQuadraticForm trace_form(const HermitianSpace& h) {
  std::vector<SquareClass> entries;
  entries.reserve(2 * h.entries().size());
  for (const auto& b : h.entries()) {
    const SquareClass cb = SquareClass::of(b);
    entries.push_back(cb);
    entries.push_back(-(h.a() * cb));
  }
  return DiagonalQuadraticForm(std::move(entries));
}

SquareClass determinant_class(const DiagonalQuadraticForm& q) {
  SquareClass det = SquareClass::of(1);
  for (const auto& e : q.entries()) det = det * e;
  return det;
}

// --- Local invariants -------------------------------------------------------

int hilbert_symbol(SquareClass x, SquareClass y, const Place& v) {
  return hilbert_symbol_raw(x.value(), y.value(), v);
}

int hasse_invariant(const DiagonalQuadraticForm& q, const Place& v) {
  int s = 1;
  const auto& a = q.entries();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) s *= hilbert_symbol(a[i], a[j], v);
  return s;
}

bool is_local_square(SquareClass x, const Place& v) {
  const std::int64_t value = x.value();
  if (v.is_real()) return value > 0;
  const std::int64_t p = v.prime();
  if (p_adic_valuation(value, p) % 2 != 0) return false;
  const std::int64_t u = unit_part(value, p);
  if (p == 2) return mod8(u) == 1;
  return legendre(u, p) == 1;
}

std::set<Place> relevant_places(const DiagonalQuadraticForm& q, const std::vector<SquareClass>& extras) {
  std::set<Place> places{Place::real(), Place::prime(2)};
  auto add_divisors = [&](SquareClass c) {
    for (u64 p : distinct_prime_factors(magnitude(c.value()))) {
      if (p != 2) places.insert(Place::prime(static_cast<std::int64_t>(p)));
    }
  };
  for (const auto& e : q.entries()) add_divisors(e);
  for (const auto& e : extras) add_divisors(e);
  return places;
}

LocalWittData local_witt_decomposition(const DiagonalQuadraticForm& q, const Place& v) {
  LocalWittData out;
  const auto dim = static_cast<std::int64_t>(q.dim());

  if (v.is_real()) {
    const auto neg = static_cast<std::int64_t>(
        std::count_if(q.entries().begin(), q.entries().end(), [](SquareClass c) { return c.value() < 0; }));
    const std::int64_t pos = dim - neg;
    out.witt_index = std::min(pos, neg);
    out.anisotropic_dim = std::abs(pos - neg);
    const bool negative = neg > pos;
    out.anisotropic_det = SquareClass::of(negative && out.anisotropic_dim % 2 != 0 ? -1 : 1);
    const std::int64_t pairs = out.anisotropic_dim * (out.anisotropic_dim - 1) / 2;
    out.anisotropic_hasse = negative && pairs % 2 != 0 ? -1 : 1;
    return out;
  }

  std::int64_t d = dim;
  SquareClass det = determinant_class(q);
  int hasse = hasse_invariant(q, v);
  // Split off hyperbolic planes: q = q' + H gives det q' = -det q and
  // s(q') = s(q) * (det q', -1).
  while (invariants_isotropic(d, det, hasse, v)) {
    det = -det;
    hasse *= hilbert_symbol(det, SquareClass::of(-1), v);
    d -= 2;
    ++out.witt_index;
  }
  out.anisotropic_dim = d;
  out.anisotropic_det = det;
  out.anisotropic_hasse = hasse;
  return out;
}

std::int64_t local_witt_index(const DiagonalQuadraticForm& q, const Place& v) {
  return local_witt_decomposition(q, v).witt_index;
}

bool is_locally_isotropic(const DiagonalQuadraticForm& q, const Place& v) {
  return local_witt_index(q, v) >= 1;
}

std::int64_t global_witt_index(const DiagonalQuadraticForm& q) {
  std::int64_t index = std::numeric_limits<std::int64_t>::max();
  for (const auto& v : relevant_places(q)) index = std::min(index, local_witt_index(q, v));
  return index;
}

bool is_isotropic_global(const DiagonalQuadraticForm& q) { return global_witt_index(q) >= 1; }

bool is_anisotropic_hermitian(const HermitianSpace& h) { return !is_isotropic_global(trace_form(h)); }

// --- Hyperbolicity over Q(sqrt a) -------------------------------------------

HyperbolicityReport hyperbolicity_over_extension(const DiagonalQuadraticForm& q, SquareClass a) {
  if (a.is_trivial()) throw Error(Errc::InvalidExtension, "a = 1 does not define a quadratic extension");

  HyperbolicityReport report;
  const auto dim = static_cast<std::int64_t>(q.dim());
  if (dim % 2 != 0) {
    report.witnesses.push_back({std::nullopt, "hyperbolic", "odd-dimensional form"});
    return report;
  }

  // The discriminant must become a square in L, i.e. lie in {1, a}.
  const SquareClass disc = (dim / 2) % 2 == 0 ? determinant_class(q) : -determinant_class(q);
  if (!disc.is_trivial() && disc != a) {
    report.witnesses.push_back({std::nullopt, "hyperbolic",
                                "discriminant " + std::to_string(disc.value()) + " is not a square in L"});
  }

  for (const auto& v : relevant_places(q, {a})) {
    const LocalWittData local = local_witt_decomposition(q, v);
    if (v.is_real()) {
      if (a.value() > 0 && local.anisotropic_dim != 0)
        report.witnesses.push_back({v, "hyperbolic", "nonzero signature over a real L"});
      continue;
    }
    if (is_local_square(a, v)) {
      if (local.anisotropic_dim != 0)
        report.witnesses.push_back({v, "hyperbolic", "a is a local square and q_v is not hyperbolic"});
      continue;
    }
    // Anisotropic classes in <1,-a> W(Q_v): 0, binary forms of determinant -a,
    // and the 4-dimensional one.
    const bool in_ideal =
        local.anisotropic_dim == 0 || local.anisotropic_dim == 4 ||
        (local.anisotropic_dim == 2 && is_local_square(local.anisotropic_det * -a, v));
    if (!in_ideal)
      report.witnesses.push_back({v, "hyperbolic", "Witt class of q_v is not divisible by <1,-a>"});
  }
  report.hyperbolic = report.witnesses.empty();
  return report;
}

bool is_hyperbolic_over_extension(const DiagonalQuadraticForm& q, SquareClass a) {
  return hyperbolicity_over_extension(q, a).hyperbolic;
}

MHReport milnor_husemoller_check(const DiagonalQuadraticForm& q, SquareClass a) {
  if (a.is_trivial()) throw Error(Errc::InvalidExtension, "a = 1 does not define a quadratic extension");

  MHReport r;
  const auto dim = static_cast<std::int64_t>(q.dim());
  r.dim_ok = dim % 2 == 0;
  if (!r.dim_ok) r.witnesses.push_back({std::nullopt, "dim", "dimension " + std::to_string(dim) + " is odd"});

  HyperbolicityReport hyp = hyperbolicity_over_extension(q, a);
  r.hyperbolic_over_L = hyp.hyperbolic;
  r.witnesses.insert(r.witnesses.end(), hyp.witnesses.begin(), hyp.witnesses.end());

  if (r.dim_ok) {
    const std::int64_t n = dim / 2;
    const SquareClass expected = n % 2 == 0 ? SquareClass::of(1) : -a;
    const SquareClass det = determinant_class(q);
    r.det_ok = det == expected;
    if (!r.det_ok)
      r.witnesses.push_back({std::nullopt, "det",
                             "det " + std::to_string(det.value()) + " != (-a)^" + std::to_string(n) +
                                 " = " + std::to_string(expected.value())});
  } else {
    r.witnesses.push_back({std::nullopt, "det", "no rank n = dim/2 for odd dimension"});
  }
  r.passes = r.dim_ok && r.hyperbolic_over_L && r.det_ok;
  return r;
}

// --- Essential dimension ----------------------------------------------------

std::int64_t essential_dimension(std::int64_t n, std::int64_t first_witt_index) {
  if (n < 2) throw Error(Errc::InvalidRank, "rank n must be >= 2, got " + std::to_string(n));
  if (first_witt_index < 1)
    throw Error(Errc::InvalidRank, "first Witt index must be >= 1, got " + std::to_string(first_witt_index));
  return (2 * n - 3) - first_witt_index + 2;
}

std::int64_t first_witt_index_special(std::int64_t dim_q) {
  if (dim_q < 4 || dim_q % 2 != 0)
    throw Error(Errc::InvalidRank, "dim q must be even and >= 4, got " + std::to_string(dim_q));
  const auto rest = static_cast<u64>(dim_q - 2);
  if (!std::has_single_bit(rest))
    throw Error(Errc::UnsupportedDimension,
                "dim q = " + std::to_string(dim_q) + " is not of the form 2^r + 2");
  return 2;
}

}  // namespace hermquad

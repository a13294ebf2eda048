#include "hermquad/motives.hpp"

#include <algorithm>
#include <sstream>

#include "hermquad/error.hpp"

namespace hermquad {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::InvalidRank, what);
}

void require_rank(std::int64_t n) {
  require(n >= 2, "rank n must be >= 2, got " + std::to_string(n));
}

constexpr std::int64_t kMaxPfisterFold = 30;
constexpr std::int64_t kMaxVishikDim = std::int64_t{1} << 22;

}  // namespace

std::string base_name(const MotiveBase& base) {
  return std::visit(overloaded{
                        [](const motive::TateF&) { return "TateF"; },
                        [](const motive::SpecL&) { return "SpecL"; },
                        [](const motive::ProjL&) { return "ProjL"; },
                        [](const motive::ProjF&) { return "ProjF"; },
                        [](const motive::SplitQuadric&) { return "SplitQuadric"; },
                        [](const motive::HermitianQuadric&) { return "HermitianQuadric"; },
                        [](const motive::Nh&) { return "Nh"; },
                        [](const motive::VishikN&) { return "VishikN"; },
                        [](const motive::PfisterQuadric&) { return "PfisterQuadric"; },
                    },
                    base);
}

std::vector<std::int64_t> base_params(const MotiveBase& base) {
  return std::visit(overloaded{
                        [](const motive::TateF&) { return std::vector<std::int64_t>{}; },
                        [](const motive::SpecL&) { return std::vector<std::int64_t>{}; },
                        [](const motive::ProjL& b) { return std::vector<std::int64_t>{b.m}; },
                        [](const motive::ProjF& b) { return std::vector<std::int64_t>{b.m}; },
                        [](const motive::SplitQuadric& b) { return std::vector<std::int64_t>{b.n}; },
                        [](const motive::HermitianQuadric& b) {
                          return std::vector<std::int64_t>{b.n};
                        },
                        [](const motive::Nh& b) { return std::vector<std::int64_t>{b.n}; },
                        [](const motive::VishikN& b) { return std::vector<std::int64_t>{b.m, b.k}; },
                        [](const motive::PfisterQuadric& b) { return std::vector<std::int64_t>{b.m}; },
                    },
                    base);
}

void validate(const MotiveBase& base) {
  std::visit(overloaded{
                 [](const motive::TateF&) {},
                 [](const motive::SpecL&) {},
                 [](const motive::ProjL& b) { require(b.m >= 0, "ProjL needs m >= 0"); },
                 [](const motive::ProjF& b) { require(b.m >= 0, "ProjF needs m >= 0"); },
                 [](const motive::SplitQuadric& b) { require_rank(b.n); },
                 [](const motive::HermitianQuadric& b) { require_rank(b.n); },
                 [](const motive::Nh& b) { require_rank(b.n); },
                 [](const motive::VishikN& b) {
                   require(b.m >= 1 && b.m <= kMaxPfisterFold, "VishikN needs 1 <= m <= 30");
                   require(b.k >= 1, "VishikN needs k >= 1");
                 },
                 [](const motive::PfisterQuadric& b) {
                   require(b.m >= 1 && b.m <= kMaxPfisterFold, "PfisterQuadric needs 1 <= m <= 30");
                 },
             },
             base);
}

MotiveExpression::MotiveExpression(std::initializer_list<Summand> summands) {
  for (const auto& s : summands) add(s.base, s.shift);
}

void MotiveExpression::add(MotiveBase base, std::int64_t shift) {
  validate(base);
  require(shift >= 0, "Tate twist must be nonnegative");
  Summand s{std::move(base), shift};
  summands_.insert(std::upper_bound(summands_.begin(), summands_.end(), s), std::move(s));
}

void MotiveExpression::add(const MotiveExpression& other) {
  for (const auto& s : other.summands_) add(s.base, s.shift);
}

std::string to_string(const MotiveExpression& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : e.summands()) {
    if (!first) os << " ⊕ ";
    first = false;
    os << std::visit(
        overloaded{
            [](const motive::TateF&) { return std::string("Z"); },
            [](const motive::SpecL&) { return std::string("M(Spec L)"); },
            [](const motive::ProjL& b) { return "M(P_L^" + std::to_string(b.m) + ")"; },
            [](const motive::ProjF& b) { return "M(P_F^" + std::to_string(b.m) + ")"; },
            [](const motive::SplitQuadric& b) { return "M(V(q), n=" + std::to_string(b.n) + ")"; },
            [](const motive::HermitianQuadric& b) {
              return "M(V(h), n=" + std::to_string(b.n) + ")";
            },
            [](const motive::Nh& b) { return "N_h(" + std::to_string(b.n) + ")"; },
            [](const motive::VishikN& b) {
              return "N(m=" + std::to_string(b.m) + ", k=" + std::to_string(b.k) + ")";
            },
            [](const motive::PfisterQuadric& b) {
              return "M(Q_phi, m=" + std::to_string(b.m) + ")";
            },
        },
        s.base);
    if (s.shift != 0) os << "{" << s.shift << "}";
  }
  return os.str();
}

IntPolynomial realize_split(const MotiveBase& base) {
  validate(base);
  return std::visit(
      overloaded{
          [](const motive::TateF&) { return IntPolynomial{1}; },
          [](const motive::SpecL&) { return IntPolynomial{2}; },
          [](const motive::ProjL& b) { return poincare_projective(b.m, 2); },
          [](const motive::ProjF& b) { return poincare_projective(b.m, 1); },
          [](const motive::SplitQuadric& b) { return poincare_split_quadric(b.n); },
          [](const motive::HermitianQuadric& b) { return poincare_split_hermitian(b.n); },
          [](const motive::Nh& b) { return solve_nh(b.n); },
          [](const motive::VishikN& b) {
            VishikReport r = vishik_solve(b.m, b.k);
            if (r.holds.has_value() && !*r.holds)
              throw Error(Errc::InconsistentDecomposition,
                          "no realization for N(m=" + std::to_string(b.m) +
                              ", k=" + std::to_string(b.k) + ")");
            return r.p_n;
          },
          [](const motive::PfisterQuadric& b) {
            return poincare_quadric_of_dimension((std::int64_t{1} << b.m) - 2);
          },
      },
      base);
}

IntPolynomial realize_split(const MotiveExpression& e) {
  IntPolynomial total;
  // Summands are sorted, so equal bases are adjacent; realize each base once.
  const MotiveBase* cached_base = nullptr;
  IntPolynomial cached;
  for (const auto& s : e.summands()) {
    if (cached_base == nullptr || !(*cached_base == s.base)) {
      cached = realize_split(s.base);
      cached_base = &s.base;
    }
    total += shift(cached, static_cast<std::size_t>(s.shift));
  }
  return total;
}

MotiveExpression decompose_quadric(std::int64_t n) {
  require_rank(n);
  MotiveExpression e;
  e.add(motive::Nh{n}, 0);
  e.add(motive::Nh{n}, 1);
  if (n % 2 != 0) e.add(motive::SpecL{}, n - 1);
  return e;
}

MotiveExpression decompose_hermitian(std::int64_t n) {
  require_rank(n);
  MotiveExpression e;
  e.add(motive::Nh{n}, 0);
  // Upper bound (n-4)/2 resp. (n-3)/2; for n = 2 the range is empty.
  const std::int64_t proj_dim = n % 2 == 0 ? n - 1 : n - 2;
  const std::int64_t last = n % 2 == 0 ? (n - 4) / 2 : (n - 3) / 2;
  if (n >= 3) {
    for (std::int64_t i = 0; i <= last; ++i) e.add(motive::ProjL{proj_dim}, 2 * i + 1);
  }
  return e;
}

MotiveExpression expand_projective_bundle(std::int64_t m) {
  require(m >= 0, "projective dimension m must be >= 0");
  MotiveExpression e;
  for (std::int64_t i = 0; i <= m; ++i) e.add(motive::SpecL{}, i);
  return e;
}

IntPolynomial solve_nh(std::int64_t n) {
  require_rank(n);
  IntPolynomial explicit_part;
  const MotiveExpression decomposition = decompose_hermitian(n);
  for (const auto& s : decomposition.summands()) {
    if (std::holds_alternative<motive::Nh>(s.base)) continue;
    explicit_part += shift(realize_split(s.base), static_cast<std::size_t>(s.shift));
  }
  IntPolynomial nh = poincare_split_hermitian(n) - explicit_part;
  if (!nh.has_nonnegative_coefficients())
    throw Error(Errc::InconsistentDecomposition,
                "N_h has a negative Betti number for n=" + std::to_string(n));

  IntPolynomial via_quadric = IntPolynomial{1, 1} * nh;
  if (n % 2 != 0) via_quadric += IntPolynomial::monomial(2, static_cast<std::size_t>(n - 1));
  if (via_quadric != poincare_split_quadric(n))
    throw Error(Errc::InconsistentDecomposition,
                "N_h does not reproduce M(V(q)) for n=" + std::to_string(n));
  return nh;
}

MotiveExpression krashen_lhs(std::int64_t n) {
  require_rank(n);
  MotiveExpression e;
  e.add(motive::SplitQuadric{n}, 0);
  for (std::int64_t i = 1; i <= n - 2; ++i) e.add(motive::ProjL{n - 1}, i);
  return e;
}

MotiveExpression krashen_rhs(std::int64_t n) {
  require_rank(n);
  MotiveExpression e;
  e.add(motive::HermitianQuadric{n}, 0);
  e.add(motive::HermitianQuadric{n}, 1);
  return e;
}

VerificationReport verify_krashen(std::int64_t n) {
  VerificationReport r;
  r.n = n;
  r.lhs = realize_split(krashen_lhs(n));
  r.rhs = realize_split(krashen_rhs(n));
  r.holds = r.lhs == r.rhs;
  return r;
}

VishikReport vishik_solve(std::int64_t m, std::int64_t k) {
  require(m >= 1 && m <= kMaxPfisterFold, "Pfister fold m must satisfy 1 <= m <= 30");
  require(k >= 1, "dim q' = k must be >= 1");

  VishikReport r;
  r.m = m;
  r.k = k;
  const std::int64_t pfister_dim = std::int64_t{1} << m;
  require(k <= kMaxVishikDim / pfister_dim, "dim q = k * 2^m exceeds " + std::to_string(kMaxVishikDim));
  r.dim_q = k * pfister_dim;
  r.degenerate = k == 1;

  IntPolynomial target = poincare_quadric_of_dimension(r.dim_q - 2);
  if (k % 2 != 0) {
    const std::int64_t twist = r.dim_q / 2 - pfister_dim / 2;
    target -= shift(realize_split(motive::PfisterQuadric{m}), static_cast<std::size_t>(twist));
  }

  try {
    r.p_n = exact_div(target, poincare_projective(pfister_dim - 1, 1));
    r.exact_division = true;
  } catch (const Error& e) {
    if (e.code() != Errc::NonExactDivision) throw;
    r.exact_division = false;
  }
  r.nonnegative = r.exact_division && r.p_n.has_nonnegative_coefficients();
  if (!r.degenerate) r.holds = r.exact_division && r.nonnegative;
  if (m == 1 && k >= 2 && r.exact_division) r.matches_nh = r.p_n == solve_nh(k);
  return r;
}

}  // namespace hermquad

#include "hermquad/rost.hpp"

#include <bit>
#include <string>

#include "hermquad/error.hpp"

namespace hermquad {

namespace {

// gcd of the degrees of closed points of V(h): it has points of degree 2
// (it splits over L) and none of odd degree when anisotropic.
constexpr std::int64_t kPointDegreeGcd = 2;

void require_rank(std::int64_t n) {
  if (n < 2) throw Error(Errc::InvalidRank, "rank n must be >= 2, got " + std::to_string(n));
}

}  // namespace

const char* to_string(Verdict v) noexcept {
  return v == Verdict::Incompressible ? "Incompressible" : "Unknown";
}

int central_binom_valuation(std::uint64_t m) { return std::popcount(m); }

int eta2_parity(std::int64_t n) {
  require_rank(n);
  // C(2m, m)/2 is odd iff v_2(C(2m, m)) == 1.
  return central_binom_valuation(static_cast<std::uint64_t>(n - 1)) == 1 ? 1 : 0;
}

bool is_mersenne_dimension(std::int64_t dim) {
  if (dim < 1) return false;
  const auto d = static_cast<std::uint64_t>(dim);
  return (d & (d + 1)) == 0;
}

bool congrel_equivalence(std::int64_t n) {
  require_rank(n);
  return (eta2_parity(n) == 1) == is_mersenne_dimension(2 * n - 3);
}

std::vector<int> degree_formula_filter(std::int64_t n) {
  const int eta = eta2_parity(n);
  std::vector<int> residues;
  for (int deg = 0; deg < 2; ++deg) {
    if ((eta - deg * eta) % kPointDegreeGcd == 0) residues.push_back(deg);
  }
  return residues;
}

RostReport incompressibility_verdict(std::int64_t n, bool anisotropic) {
  require_rank(n);
  RostReport r;
  r.n = n;
  r.dim_vh = 2 * n - 3;
  r.eta2_parity = eta2_parity(n);
  r.is_power_case = is_mersenne_dimension(r.dim_vh);
  r.point_gcd = kPointDegreeGcd;

  // Every rational self-map is dominant once deg f = 0 is excluded.
  const auto residues = degree_formula_filter(n);
  const bool forces_dominant = residues.size() == 1 && residues.front() == 1;
  r.verdict = anisotropic && forces_dominant ? Verdict::Incompressible : Verdict::Unknown;
  return r;
}

}  // namespace hermquad

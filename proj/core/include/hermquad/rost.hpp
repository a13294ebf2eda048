#pragma once

#include <cstdint>
#include <vector>

namespace hermquad {

enum class Verdict { Incompressible, Unknown };

const char* to_string(Verdict v) noexcept;

/// Outcome of the Rost degree-formula argument for the Hermitian quadric of rank n.
struct RostReport {
  std::int64_t n = 0;
  std::int64_t dim_vh = 0;  // 2n - 3
  int eta2_parity = 0;
  bool is_power_case = false;  // dim_vh == 2^r - 1 for some r > 0
  std::int64_t point_gcd = 2;
  Verdict verdict = Verdict::Unknown;
};

/// v_2(C(2m, m)), i.e. the number of carries when adding m + m in base 2.
int central_binom_valuation(std::uint64_t m);

/// eta_2 = C(2(n-1), n-1) / 2 mod 2 for the Milnor hypersurface of P^{n-1} x P^{n-1}.
int eta2_parity(std::int64_t n);

/// True iff dim is of the form 2^r - 1 with r > 0.
bool is_mersenne_dimension(std::int64_t dim);

/// Whether (eta_2 odd) <=> (2n - 3 = 2^r - 1) holds at n.
bool congrel_equivalence(std::int64_t n);

/// Residues of deg f mod 2 compatible with eta_2 = deg f * eta_2 mod n_{V(h)}.
std::vector<int> degree_formula_filter(std::int64_t n);

RostReport incompressibility_verdict(std::int64_t n, bool anisotropic);

}  // namespace hermquad

#include "oracles.hpp"

#include <cmath>
#include <functional>

namespace hermquad::oracle {

BigInt binomial(unsigned n, unsigned k) {
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

int two_adic_valuation(BigInt x) {
  int v = 0;
  while (x % 2 == 0) {
    x /= 2;
    ++v;
  }
  return v;
}

std::vector<long long> convolve_ones(int len1, int len2) {
  std::vector<long long> out(static_cast<std::size_t>(len1 + len2 - 1), 0);
  for (int i = 0; i < len1; ++i)
    for (int j = 0; j < len2; ++j) out[static_cast<std::size_t>(i + j)] += 1;
  return out;
}

namespace {

bool is_perfect_square(std::int64_t t, std::int64_t& root) {
  if (t < 0) return false;
  auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(t))));
  while (r * r > t) --r;
  while ((r + 1) * (r + 1) <= t) ++r;
  root = r;
  return r * r == t;
}

std::int64_t mod(std::int64_t x, std::int64_t m) { return ((x % m) + m) % m; }

}  // namespace

bool search_isotropic(const std::vector<std::int64_t>& entries, int height) {
  const std::size_t d = entries.size();
  if (d < 2) return false;
  const std::int64_t last = entries.back();
  std::vector<std::int64_t> x(d - 1, 0);
  // Signs do not matter, so coordinates range over [0, height].
  std::function<bool(std::size_t, std::int64_t, bool)> rec = [&](std::size_t i, std::int64_t sum, bool nonzero) {
    if (i == d - 1) {
      if (!nonzero) return false;
      if (sum % last != 0) return false;
      std::int64_t y = 0;
      return is_perfect_square(-sum / last, y) && y <= height;
    }
    for (std::int64_t v = 0; v <= height; ++v) {
      if (rec(i + 1, sum + entries[i] * v * v, nonzero || v != 0)) return true;
    }
    return false;
  };
  return rec(0, 0, false);
}

bool is_qr_by_enumeration(std::int64_t x, std::int64_t p) {
  const std::int64_t r = mod(x, p);
  for (std::int64_t y = 0; y < p; ++y)
    if ((y * y) % p == r) return true;
  return false;
}

namespace {

// Isotropy over F_p (p odd) of a form with unit coefficients.
bool residue_isotropic(const std::vector<std::int64_t>& units, std::int64_t p) {
  if (units.size() >= 3) return true;
  if (units.size() < 2) return false;
  return is_qr_by_enumeration(-units[0] * units[1], p);
}

bool two_adic_isotropic(const std::vector<std::int64_t>& entries) {
  const std::size_t d = entries.size();
  std::vector<std::int64_t> x(d, 0);
  // x^2 mod 32 depends on x mod 16 only; a primitive zero mod 32 lifts to
  // Z_2 for squarefree coefficients (Hensel with v_2(2 a_i x_i) <= 2).
  std::function<bool(std::size_t, std::int64_t, bool)> rec = [&](std::size_t i, std::int64_t sum, bool odd) {
    if (i == d) return odd && mod(sum, 32) == 0;
    for (std::int64_t v = 0; v < 16; ++v) {
      if (rec(i + 1, sum + entries[i] * v * v, odd || (v % 2 != 0))) return true;
    }
    return false;
  };
  return rec(0, 0, false);
}

}  // namespace

bool locally_isotropic(const std::vector<std::int64_t>& entries, std::int64_t p) {
  if (p == 0) {
    bool pos = false, neg = false;
    for (auto e : entries) (e > 0 ? pos : neg) = true;
    return pos && neg;
  }
  if (p == 2) return two_adic_isotropic(entries);
  std::vector<std::int64_t> q0, q1;
  for (auto e : entries) {
    if (e % p == 0) {
      q1.push_back(e / p);
    } else {
      q0.push_back(e);
    }
  }
  return residue_isotropic(q0, p) || residue_isotropic(q1, p);
}

int hilbert_symbol(std::int64_t x, std::int64_t y, std::int64_t p) {
  const std::vector<std::int64_t> form{1, -SquareClass::of(x).value(), -SquareClass::of(y).value()};
  return locally_isotropic(form, p) ? 1 : -1;
}

namespace {

bool local_square(std::int64_t x, std::int64_t p) {
  if (p == 0) return x > 0;
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  if (v % 2 != 0) return false;
  if (p == 2) return mod(x, 8) == 1;
  return is_qr_by_enumeration(x, p);
}

int hasse_of(const std::vector<std::int64_t>& a, std::int64_t p) {
  int s = 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) s *= oracle::hilbert_symbol(a[i], a[j], p);
  return s;
}

}  // namespace

bool hyperbolic_over_extension(const DiagonalQuadraticForm& q, SquareClass a) {
  const std::size_t d = q.dim();
  if (d % 2 != 0) return false;
  std::vector<std::int64_t> entries;
  SquareClass det = SquareClass::of(1);
  for (const auto& e : q.entries()) {
    entries.push_back(e.value());
    det = det * e;
  }
  const SquareClass disc = (d / 2) % 2 == 0 ? det : -det;
  if (!disc.is_trivial() && disc != a) return false;

  std::vector<std::int64_t> hyperbolic;
  for (std::size_t i = 0; i < d / 2; ++i) {
    hyperbolic.push_back(1);
    hyperbolic.push_back(-1);
  }

  for (const auto& v : relevant_places(q, {a})) {
    const std::int64_t p = v.prime();
    if (p == 0) {
      if (a.value() > 0) {
        long long sig = 0;
        for (auto e : entries) sig += e > 0 ? 1 : -1;
        if (sig != 0) return false;
      }
      continue;
    }
    if (local_square(a.value(), p)) {
      if (!local_square(disc.value(), p)) return false;
      if (hasse_of(entries, p) != hasse_of(hyperbolic, p)) return false;
    } else {
      if (!local_square(disc.value(), p) && !local_square((disc * a).value(), p)) return false;
    }
  }
  return true;
}

}  // namespace hermquad::oracle

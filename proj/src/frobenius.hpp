#pragma once

#include <optional>
#include <vector>

#include "local.hpp"

namespace fuchsia {

// r0(n) C_n = sum_{i=1..k} r_i(n) C_{n-i}, polynomials in n extracted from
// the shift data of an operator.
struct Recurrence {
  Poly r0;
  std::vector<Poly> r;  // r[i-1] multiplies C_{n-i}
  int order() const { return static_cast<int>(r.size()); }
  // reduced ratio r_i(n)/r0(n)
  RatFun ratio(int i) const { return RatFun(r[size_t(i) - 1], r0); }
};

Recurrence recurrence_at(const DiffOp& p, const PointAt& point, const Rat& rho);

// Truncated local solution x^rho * sum c_n x^n at one of the three base
// points; for the base at infinity x stands for the reciprocal coordinate
// and rho is the scheme exponent (solution is X^(-rho)(c0 + c1/X + ...)).
struct FrobSeries {
  Rat rho;
  std::vector<Rat> c;
  PointAt base = PointAt::finite(0);
  int trunc() const { return static_cast<int>(c.size()) - 1; }
};

// Exact coefficients up to n = N. `init` feeds c_0 and every resonant slot
// (r0(n)=0 with a consistent equation) in increasing n; throws
// ResonanceObstruction on an inconsistent resonance.
FrobSeries series(const DiffOp& p, const PointAt& point, const Rat& rho, int N,
                  const std::vector<Rat>& init = {Rat(1)});

// Number of resonant indices n>=1 (free coefficients beyond c_0).
int resonance_count(const DiffOp& p, const PointAt& point, const Rat& rho, int N);

// Applies p to the truncated series and reports the first x-order (offset
// from rho) with a nonzero coefficient, plus the bound below which a valid
// truncation must vanish.
struct Residual {
  std::optional<int> first_nonzero;  // offset n+d relative to x^rho
  int valid_bound;                   // N + d_min + 1
  bool ok() const { return !first_nonzero || *first_nonzero >= valid_bound; }
  bool identically_zero() const { return !first_nonzero; }
};
Residual verify_series(const DiffOp& p, const FrobSeries& s);

// Same residual sweep in floating point for numerically generated
// coefficients; returns the largest |residual| over offsets < max_offset,
// scaled by the largest term magnitude encountered.
double verify_series_numeric(const DiffOp& p, const Rat& rho,
                             const std::vector<double>& c, int max_offset);

// Coefficient rule of the fractional integral of order mu:
// c_n -> c_n (1+rho)_n / (1+rho+mu)_n at a finite base (exponent rho+mu);
// at infinity the rule uses alpha = -rho and the exponent drops by mu.
FrobSeries riemann_liouville(const FrobSeries& s, const Rat& mu);

// Degree-m polynomial kernel element by back-substitution through the
// banded shift system; requires e_0(m) = 0 and e_0(k) != 0 for k < m.
FrobSeries polynomial_solution(const DiffOp& p, int m);

}  // namespace fuchsia

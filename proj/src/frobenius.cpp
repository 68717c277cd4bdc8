#include "frobenius.hpp"

#include <cmath>

namespace fuchsia {

Recurrence recurrence_at(const DiffOp& p, const PointAt& point, const Rat& rho) {
  DiffOp q = translate_to_origin(p, point);
  ShiftCoeffs sc = shift_coeffs(q);
  if (sc.empty()) fail(ErrorKind::Usage, "zero operator");
  int dmin = sc.begin()->first;
  int dmax = sc.rbegin()->first;
  Recurrence rec;
  Poly n = Poly::variable('n');
  rec.r0 = sc.at(dmin).compose_affine(1, rho);  // e_dmin(rho + n)
  rec.r0.set_var('n');
  rec.r.resize(size_t(dmax - dmin));
  for (int i = 1; i <= dmax - dmin; ++i) {
    auto it = sc.find(dmin + i);
    if (it == sc.end()) continue;
    rec.r[size_t(i) - 1] = -it->second.compose_affine(1, rho - i);
    rec.r[size_t(i) - 1].set_var('n');
  }
  while (!rec.r.empty() && rec.r.back().is_zero()) rec.r.pop_back();
  return rec;
}

int resonance_count(const DiffOp& p, const PointAt& point, const Rat& rho, int N) {
  Recurrence rec = recurrence_at(p, point, rho);
  int count = 0;
  for (int n = 1; n <= N; ++n)
    if (rec.r0.eval(n) == 0) ++count;
  return count;
}

FrobSeries series(const DiffOp& p, const PointAt& point, const Rat& rho, int N,
                  const std::vector<Rat>& init) {
  Recurrence rec = recurrence_at(p, point, rho);
  if (rec.r0.eval(0) != 0)
    fail(ErrorKind::Usage, "rho is not a local exponent");
  FrobSeries s;
  s.rho = rho;
  s.base = point;
  s.c.assign(size_t(N) + 1, Rat(0));
  size_t next_init = 0;
  auto take_init = [&]() -> Rat {
    if (next_init >= init.size())
      fail(ErrorKind::Usage, "not enough initial values for the resonances");
    return init[next_init++];
  };
  for (int n = 0; n <= N; ++n) {
    Rat rhs(0);
    for (int i = 1; i <= rec.order() && i <= n; ++i)
      rhs += rec.r[size_t(i) - 1].eval(n) * s.c[size_t(n - i)];
    Rat r0 = rec.r0.eval(n);
    if (r0 == 0) {
      if (rhs != 0)
        fail(ErrorKind::ResonanceObstruction,
             "logarithmic case at n = " + std::to_string(n));
      s.c[size_t(n)] = take_init();
    } else {
      s.c[size_t(n)] = rhs / r0;
    }
  }
  return s;
}

Residual verify_series(const DiffOp& p, const FrobSeries& s) {
  DiffOp q = translate_to_origin(p, s.base);
  ShiftCoeffs sc = shift_coeffs(q);
  int dmin = sc.begin()->first, dmax = sc.rbegin()->first;
  int N = s.trunc();
  Residual res;
  res.valid_bound = N + dmin + 1;
  for (int m = dmin; m <= N + dmax; ++m) {
    Rat acc(0);
    for (const auto& [d, e] : sc) {
      int n = m - d;
      if (n < 0 || n > N) continue;
      if (s.c[size_t(n)] == 0) continue;
      acc += e.eval(s.rho + n) * s.c[size_t(n)];
    }
    if (acc != 0) {
      res.first_nonzero = m;
      return res;
    }
  }
  return res;
}

double verify_series_numeric(const DiffOp& p, const Rat& rho,
                             const std::vector<double>& c, int max_offset) {
  DiffOp q = translate_to_origin(p, PointAt::finite(0));
  ShiftCoeffs sc = shift_coeffs(q);
  int dmin = sc.begin()->first;
  int N = static_cast<int>(c.size()) - 1;
  double worst = 0;
  for (int m = dmin; m < max_offset; ++m) {
    double acc = 0, scale = 0;
    for (const auto& [d, e] : sc) {
      int n = m - d;
      if (n < 0 || n > N) continue;
      double term = e.eval(rho + n).get_d() * c[size_t(n)];
      acc += term;
      scale = std::max(scale, std::fabs(term));
    }
    if (scale > 0) worst = std::max(worst, std::fabs(acc) / scale);
  }
  return worst;
}

FrobSeries riemann_liouville(const FrobSeries& s, const Rat& mu) {
  Rat alpha = s.base.at_infinity ? Rat(-s.rho) : s.rho;
  if (is_integer(alpha) || is_integer(mu))
    fail(ErrorKind::NonGenericExponent, "rho and mu must be non-integral");
  FrobSeries out;
  out.base = s.base;
  out.rho = s.base.at_infinity ? Rat(s.rho - mu) : Rat(s.rho + mu);
  out.c.resize(s.c.size());
  Rat num(1), den(1);
  for (size_t n = 0; n < s.c.size(); ++n) {
    if (n > 0) {
      num *= alpha + Rat(long(n));            // (1+alpha)_n
      Rat d = alpha + mu + Rat(long(n));      // (1+alpha+mu)_n
      if (d == 0)
        fail(ErrorKind::NonGenericExponent, "Gamma pole in the prefactor rule");
      den *= d;
    }
    out.c[n] = s.c[n] * num / den;
  }
  return out;
}

FrobSeries polynomial_solution(const DiffOp& p, int m) {
  DiffOp q = normalize(p).op;
  ShiftCoeffs sc = shift_coeffs(q);
  if (sc.rbegin()->first > 0)
    fail(ErrorKind::ShapeError, "operator raises the degree");
  const Poly& e0 = sc.at(0);
  if (e0.eval(m) != 0)
    fail(ErrorKind::DegenerateParams, "x^m is not in the kernel closure");
  FrobSeries s;
  s.rho = 0;
  s.base = PointAt::finite(0);
  s.c.assign(size_t(m) + 1, Rat(0));
  s.c[size_t(m)] = 1;
  for (int k = m - 1; k >= 0; --k) {
    Rat rhs(0);
    for (const auto& [d, e] : sc) {
      if (d == 0) continue;
      int src = k - d;  // contribution of a_src to the x^k equation
      if (src > m || src <= k) continue;
      rhs += e.eval(src) * s.c[size_t(src)];
    }
    Rat pk = e0.eval(k);
    if (pk == 0)
      fail(ErrorKind::DegenerateParams,
           "degenerate band at k = " + std::to_string(k));
    s.c[size_t(k)] = -rhs / pk;
  }
  return s;
}

}  // namespace fuchsia

#include "diffeq.hpp"

#include <algorithm>

namespace fuchsia {

RatFun ratfun_shift(const RatFun& f, const Rat& s) {
  return RatFun(f.num().compose_affine(1, s), f.den().compose_affine(1, s));
}

RatFun invariant(const DiffEq2& d) {
  if (d.p2.is_zero())
    fail(ErrorKind::Usage, "difference equation with p2 = 0");
  return d.p1 * ratfun_shift(d.p1, 1) / ratfun_shift(d.p2, 1);
}

bool essentially_same(const DiffEq2& d1, const DiffEq2& d2) {
  return invariant(d1) == invariant(d2);
}

Rat GaugeFactor::ratio(long n) const {
  Rat acc = rat_pow(w, -n);
  for (const Rat& v : vs)
    for (long k = 0; k < n; ++k) acc *= v + 1 + k;
  for (const Rat& u : us) {
    for (long k = 0; k < n; ++k) {
      Rat t = u + 1 + k;
      if (t == 0) fail(ErrorKind::GammaPole, "gauge ratio pole");
      acc /= t;
    }
  }
  return acc;
}

GaugeFactor gauge_factor(const DiffEq2& src, const DiffEq2& dst) {
  if (!essentially_same(src, dst))
    fail(ErrorKind::Usage, "gauge factor of non-matching equations");
  RatFun rho = dst.p1 / src.p1;  // = lambda(n-1)/lambda(n)
  GaugeFactor g;
  g.w = rho.num().leading();  // denominator is monic after reduction
  RationalRoots nr = rational_roots(rho.num());
  RationalRoots dr = rho.den().degree() > 0 ? rational_roots(rho.den())
                                            : RationalRoots{{}, Poly(Rat(1))};
  if (nr.residual.degree() > 0 || dr.residual.degree() > 0)
    fail(ErrorKind::NonLinearFactor, "irrational factor in the gauge ratio");
  for (const auto& [r, m] : nr.roots)
    for (int i = 0; i < m; ++i) g.us.push_back(-r);
  for (const auto& [r, m] : dr.roots)
    for (int i = 0; i < m; ++i) g.vs.push_back(-r);
  std::sort(g.us.begin(), g.us.end());
  std::sort(g.vs.begin(), g.vs.end());
  return g;
}

std::vector<Rat> solve(const DiffEq2& d, const std::vector<Rat>& inits, int N) {
  if (inits.empty()) fail(ErrorKind::Usage, "need at least C_0");
  std::vector<Rat> c(size_t(N) + 1, Rat(0));
  for (size_t i = 0; i < inits.size() && i <= size_t(N); ++i) c[i] = inits[i];
  for (int n = static_cast<int>(inits.size()); n <= N; ++n) {
    Rat v = d.p1.eval(n) * c[size_t(n) - 1];
    if (n >= 2) v += d.p2.eval(n) * c[size_t(n) - 2];
    c[size_t(n)] = v;
  }
  return c;
}

namespace {

Poly ln(const Rat& c0, const Rat& c1 = 1) { return Poly({c0, c1}, 'n'); }

Rat need(const std::map<std::string, Rat>& params, const std::string& k) {
  auto it = params.find(k);
  if (it == params.end()) fail(ErrorKind::MissingParam, "missing parameter " + k);
  return it->second;
}

}  // namespace

DiffEq2 paper_recurrence(const std::string& name,
                         const std::map<std::string, Rat>& params) {
  Rat A0 = need(params, "A0"), A1 = need(params, "A1"), A2 = need(params, "A2"),
      A3 = need(params, "A3");
  Rat h(1, 2);
  if (name == "Rc0") {
    Poly den = ln(0) * ln(-2 * A0) * ln(-2 * A0 - 1, 2) * ln(-2 * A0 + 1, 2);
    Poly sq = ln(-2 * A0 - 1, 2);  // 2(n-A0)-1
    Poly quad = Poly({A0 * A0 + A1 * A1 - A2 * A2 - A3 * A3 + 1 + 2 * A0,
                      -4 * A0 - 2, Rat(2)},
                     'n');
    Poly num2 = ln(-A0 - A2 - 1) * ln(-A0 + A2 - 1) * ln(-A0 - A3 - 1) *
                ln(-A0 + A3 - 1) * Rat(4);
    return {RatFun(sq * sq * quad, den), RatFun(-num2, den)};
  }
  if (name == "Rc1") {
    Poly den = ln(0) * ln(-1) * ln(A0 - h) * ln(-A0 - h);
    Poly quad = Poly({-A0 * A0 + A1 * A1 - A2 * A2 - A3 * A3 + Rat(5, 2),
                      Rat(-4), Rat(2)},
                     'n');
    Poly num1 = ln(-1) * ln(-1) * quad;
    Poly num2 = ln(A2 - Rat(3, 2)) * ln(-A2 - Rat(3, 2)) * ln(A3 - Rat(3, 2)) *
                ln(-A3 - Rat(3, 2));
    return {RatFun(num1, den), RatFun(-num2, den)};
  }
  if (name == "RcInf") {
    Poly den = ln(0) * ln(2 * A2) * ln(A2 + A3) * ln(A2 - A3) * Rat(4);
    Poly sq = ln(2 * A2 - 1, 2);  // 2(n+A2)-1
    Poly quad = Poly({-A0 * A0 + A1 * A1 + A2 * A2 - A3 * A3 + 1 - 2 * A2,
                      4 * A2 - 2, Rat(2)},
                     'n');
    Poly num2 = ln(2 * A2 - 1, 2) * ln(2 * A2 - 3, 2) * ln(A0 + A2 - 1) *
                ln(-A0 + A2 - 1);
    return {RatFun(sq * sq * quad, den), RatFun(-num2, den)};
  }
  if (name == "RcQ00") {
    Poly den = ln(0) * ln(A0 + A2) * ln(-A0 + A2);
    Poly quad = Poly({-A0 * A0 + A1 * A1 + A2 * A2 - A3 * A3 - 2 * A2 + 1,
                      4 * A2 - 2, Rat(2)},
                     'n');
    Poly num1 = ln(A2 - h) * quad;
    Poly num2 = ln(2 * A2 - 1) * ln(A2 + A3 - 1) * ln(A2 - A3 - 1);
    return {RatFun(num1, den), RatFun(-num2, den)};
  }
  if (name == "RcQ0plus") {
    Poly den = ln(0) * ln(2 * A0) * ln(A0 - A2);
    Poly quad = Poly({A0 * A0 + A1 * A1 - A2 * A2 - A3 * A3 - 2 * A0 + 1,
                      4 * A0 - 2, Rat(2)},
                     'n');
    Poly num1 = ln(A0 - h) * quad;
    Poly num2 = ln(A0 + A2 - 1) * ln(A0 + A3 - 1) * ln(A0 - A3 - 1);
    return {RatFun(num1, den), RatFun(-num2, den)};
  }
  fail(ErrorKind::UnknownName, "unknown recurrence '" + name + "'");
}

}  // namespace fuchsia

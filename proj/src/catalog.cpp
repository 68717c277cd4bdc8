#include "catalog.hpp"

#include <algorithm>

namespace fuchsia {

namespace {

Rat need(const ParamMap& m, const std::string& k) {
  auto it = m.find(k);
  if (it == m.end()) fail(ErrorKind::MissingParam, "missing parameter " + k);
  return it->second;
}

Poly term(const Rat& c, int k) { return Poly::monomial(c, k); }

// polynomial from constant, linear, quadratic, ... coefficients
Poly poly_of(std::vector<Rat> coeffs) { return Poly(std::move(coeffs)); }

Rat sq(const Rat& x) { return x * x; }

}  // namespace

Params Params::from_map(const ParamMap& m) {
  return {need(m, "A0"), need(m, "A1"), need(m, "A2"), need(m, "A3")};
}

ParamMap Params::to_map() const {
  return {{"A0", A0}, {"A1", A1}, {"A2", A2}, {"A3", A3}};
}

Rat Params::a(int i) const {
  const Rat Ai = i == 1 ? A1 : i == 2 ? A2 : A3;
  return Ai * Ai - (A0 - 1) * (A0 - 1);
}

Rat Params::b(int i) const { return (a(1) + a(2) + a(3)) / 2 - a(i); }

Rat Params::Aeps(int e0, int e1, int e2, int e3) const {
  return (e0 * A0 + e1 * A1 + e2 * A2 + e3 * A3 + 1) / 2;
}

Params Params::from_abcg(const Rat& a, const Rat& b, const Rat& c,
                         const Rat& g) {
  return {(2 * a + 2 * c + g + 2) / 2, (2 * b + 2 * c + g + 2) / 2, -g / 2,
          (2 * a + 2 * b + g + 2) / 2};
}

bool Params::degenerate() const {
  const Rat A[4] = {A0, A1, A2, A3};
  for (int i = 0; i < 4; ++i) {
    if (is_integer(2 * A[i])) return true;
    for (int j = i + 1; j < 4; ++j)
      if (is_integer(A[i] + A[j]) || is_integer(A[i] - A[j])) return true;
  }
  for (int e0 : {-1, 1})
    for (int e1 : {-1, 1})
      for (int e2 : {-1, 1})
        for (int e3 : {-1, 1})
          if (is_integer(Aeps(e0, e1, e2, e3))) return true;
  return false;
}

GaussParams gauss_factor_1(const Params& p) {
  return {p.Aeps(-1, 1, -1, 1), p.Aeps(-1, 1, 1, -1), 1 - p.A0};
}

GaussParams gauss_factor_2(const Params& p) {
  return {p.Aeps(-1, -1, -1, -1), p.Aeps(-1, -1, 1, 1), 1 - p.A0};
}

namespace {

DiffOp make_Z(const Params& p) {
  const Rat &A0 = p.A0, &A1 = p.A1, &A2 = p.A2, &A3 = p.A3;
  Poly p0 = term(1, 3) * poly_of({1, -1}).pow(2);
  Poly p1 = term(-2, 2) * poly_of({-1, 1}) *
            poly_of({-2 * A0 + 3, 2 * A0 - 5});
  Poly p2 = term(1, 1) *
            poly_of({(10 * A0 - 9) * (2 * A0 - 3) / 4,
                     -11 * sq(A0) - sq(A1) + sq(A2) + sq(A3) + 36 * A0 -
                         Rat(59, 2),
                     6 * sq(A0) - sq(A2) - sq(A3) - 24 * A0 + 25});
  Poly p3 = poly_of(
      {-(2 * A0 - 3) * sq(2 * A0 - 1) / 4,
       (A0 - 1) *
           (6 * sq(A0) + 2 * sq(A1) - 2 * sq(A2) - 2 * sq(A3) - 16 * A0 + 11),
       -(2 * A0 - 3) * (2 * sq(A0) - sq(A2) - sq(A3) - 6 * A0 + 5)});
  Poly p4 = poly_of(
      {-sq(2 * A0 - 1) * (sq(A0) + sq(A1) - sq(A2) - sq(A3) - 2 * A0 + 1) / 4,
       (A0 - 1 + A3) * (A0 - 1 - A3) * (A0 - 1 + A2) * (A0 - 1 - A2)});
  return DiffOp::from_poly_coeffs({p4, p3, p2, p1, p0});
}

DiffOp make_Zt(const Params& p) {
  const Rat a0 = p.a0(), a1 = p.a(1), a2 = p.a(2), a3 = p.a(3);
  Poly t1 = poly_of({1, 1});   // t+1
  Poly tm1 = poly_of({-1, 1});  // t-1
  Poly p0 = 2 * (t1 * t1) * tm1.pow(3);
  Poly p1 = Rat(-4) * t1 * (tm1 * tm1) * poly_of({2 + a0, a0 - 2});
  Poly p2 = 2 * tm1 *
            poly_of({sq(a0) - 2 * a1 + 6 * a0 + 2 + a2 + a3,
                     3 * sq(a0) + 4 * a0 - 4 + 2 * a1,
                     sq(a0) - 4 * a0 + 2 - a2 - a3});
  Poly p3 = poly_of(
      {-4 * sq(a0) - 8 * a0 + 4 * a0 * a1 + 4 * a1 - (2 * a0 + 4) * (a2 + a3),
       -2 * a0 * sq(a0) - 6 * sq(a0) - 4 * a0 * a1 - 4 * a1 + 4 * (a2 + a3),
       2 * a0 * (a0 + a2 + a3)});
  Poly p4 = poly_of({(a1 - a2 - a3) * sq(a0 + 2) - 2 * a2 * a3, 2 * a2 * a3});
  return DiffOp::from_poly_coeffs({p4, p3, p2, p1, p0});
}

Poly leading_sq() {  // x^2 (x-1)^2
  return term(1, 2) * poly_of({-1, 1}).pow(2);
}

DiffOp make_Ztilde(const Params& p) {
  const Rat &A0 = p.A0, &A1 = p.A1, &A2 = p.A2, &A3 = p.A3;
  Poly m1 = Rat(4) * poly_of({-1, 1}) * term(1, 1) * poly_of({-1, 2});
  Poly m2 = poly_of({-4 * sq(A0) + 9,
                     4 * sq(A0) - 4 * sq(A1) + 4 * sq(A2) + 4 * sq(A3) - 58,
                     -4 * sq(A2) - 4 * sq(A3) + 58}) *
            Rat(1, 4);
  Poly m3 = poly_of({2 * sq(A0) - 2 * sq(A1) + 2 * sq(A2) + 2 * sq(A3) - 5,
                     -4 * sq(A2) - 4 * sq(A3) + 10}) *
            Rat(1, 2);
  Poly m4 = Poly((A2 - Rat(1, 2)) * (A2 + Rat(1, 2)) * (A3 - Rat(1, 2)) *
                 (A3 + Rat(1, 2)));
  return DiffOp::from_poly_coeffs({m4, m3, m2, m1, leading_sq()});
}

DiffOp make_K(const Params& p) {
  const Rat &A0 = p.A0, &A1 = p.A1, &A2 = p.A2, &A3 = p.A3;
  Poly k0 = term(1, 3) * poly_of({-1, 1}).pow(2);
  Poly k1 = poly_of({1, -1}) * term(1, 2) * poly_of({-4 * A0 + 5, 4 * A0 - 10});
  Poly k2 =
      term(1, 1) *
      poly_of({5 * sq(A0) - 9 * A0 + 4,
               -11 * sq(A0) + 33 * A0 - sq(A1) + sq(A2) + sq(A3) - 25,
               6 * sq(A0) - 24 * A0 - sq(A2) - sq(A3) + 25});
  Poly k3 =
      poly_of({-4 * A0 * sq(A0) + 6 * sq(A0) - 2 * A0,
               12 * A0 * sq(A0) - 39 * sq(A0) + 4 * A0 * sq(A1) -
                   4 * A0 * sq(A2) - 4 * A0 * sq(A3) + 42 * A0 - 3 * sq(A1) +
                   3 * sq(A2) + 3 * sq(A3) - 15,
               -8 * A0 * sq(A0) + 36 * sq(A0) + 4 * A0 * sq(A2) +
                   4 * A0 * sq(A3) - 56 * A0 - 6 * sq(A2) - 6 * sq(A3) + 30}) *
      Rat(1, 2);
  Poly k4 =
      poly_of({-2 * sq(sq(A0)) + 5 * A0 * sq(A0) - 2 * sq(A0) * sq(A1) +
                   2 * sq(A0) * sq(A2) + 2 * sq(A0) * sq(A3) - 4 * sq(A0) +
                   A0 * sq(A1) - A0 * sq(A2) - A0 * sq(A3) + A0,
               2 * sq(sq(A0)) - 8 * A0 * sq(A0) - 2 * sq(A0) * sq(A2) -
                   2 * sq(A0) * sq(A3) + 12 * sq(A0) + 4 * A0 * sq(A2) +
                   4 * A0 * sq(A3) - 8 * A0 + 2 * sq(A2) * sq(A3) -
                   2 * sq(A2) - 2 * sq(A3) + 2}) *
      Rat(1, 2);
  return DiffOp::from_poly_coeffs({k4, k3, k2, k1, k0});
}

DiffOp make_L(const Params& p) {
  const Rat &A0 = p.A0, &A1 = p.A1, &A2 = p.A2, &A3 = p.A3;
  Poly l1 = Rat(5) * poly_of({-1, 1}) * term(1, 1) * poly_of({-1, 2});
  Poly l2 = poly_of({-sq(A0) + 4, sq(A0) - sq(A1) + sq(A2) + sq(A3) - 25,
                     -sq(A2) - sq(A3) + 25});
  Poly l3 = poly_of({-sq(A0) + sq(A1) - sq(A2) - sq(A3) + 5,
                     2 * sq(A2) + 2 * sq(A3) - 10}) *
            Rat(-3, 2);
  Poly l4 = Poly((A2 - 1) * (A2 + 1) * (A3 - 1) * (A3 + 1));
  return DiffOp::from_poly_coeffs({l4, l3, l2, l1, leading_sq()});
}

DiffOp make_Q(const Params& p) {
  const Rat &A0 = p.A0, &A1 = p.A1, &A2 = p.A2, &A3 = p.A3;
  Poly q1 = (2 * A2 + 3) * poly_of({-1, 1}) * term(1, 1) * poly_of({-1, 2});
  Poly q2 = poly_of({-sq(A0) + sq(A2) + 2 * A2 + 1,
                     sq(A0) - sq(A1) - 5 * sq(A2) - 12 * A2 + sq(A3) - 7,
                     5 * sq(A2) + 12 * A2 - sq(A3) + 7});
  Poly q3 = (2 * A2 + 1) *
            poly_of({sq(A0) - sq(A1) - sq(A2) - 2 * A2 + sq(A3) - 1,
                     2 * sq(A2) + 4 * A2 - 2 * sq(A3) + 2}) *
            Rat(1, 2);
  return DiffOp::from_poly_coeffs({q3, q2, q1, leading_sq()});
}

DiffOp make_R(const Params& p) {
  const Rat &A0 = p.A0, &A1 = p.A1, &A2 = p.A2, &A3 = p.A3;
  Poly r1 = poly_of({1, -1}) * term(1, 1) *
            poly_of({-3 * A0 - A2 + 3, 3 * A0 + 3 * A1 + 2 * A2 - 6});
  Poly r2 = poly_of(
      {2 * sq(A0) + 2 * A0 * A2 - 3 * A0 - A2 + 1,
       -5 * sq(A0) - 6 * A0 * A1 - 6 * A0 * A2 + 12 * A0 - sq(A1) -
           2 * A1 * A2 + 6 * A1 - sq(A2) + 6 * A2 + sq(A3) - 7,
       3 * sq(A0) + 6 * A0 * A1 + 4 * A0 * A2 - 9 * A0 + 3 * sq(A1) +
           4 * A1 * A2 - 9 * A1 + sq(A2) - 6 * A2 - sq(A3) + 7});
  Poly r3 = poly_of({-2 * A0 + 1, 2 * A0 + 2 * A1 - 2}) *
            ((A0 + A1 + A2 - A3 - 1) * (A0 + A1 + A2 + A3 - 1)) * Rat(-1, 2);
  return DiffOp::from_poly_coeffs({r3, r2, r1, leading_sq()});
}

DiffOp make_DF(const Rat& a, const Rat& b, const Rat& c, const Rat& g) {
  Poly s1 = Rat(-1) * poly_of({-1, 1}) * term(1, 1) *
            poly_of({-3 * a - 3 * c - g, 3 * a + 3 * b + 6 * c + 2 * g});
  Poly s2 = poly_of(
      {2 * sq(a) + 4 * a * c + a * g + 2 * sq(c) + c * g + a + c,
       -4 * sq(a) - 4 * a * b - 16 * a * c - 4 * a * g - 8 * b * c -
           2 * b * g - 12 * sq(c) - 8 * c * g - sq(g) - 2 * a - 6 * c - g,
       2 * sq(a) + 4 * a * b + 12 * a * c + 3 * a * g + 2 * sq(b) +
           12 * b * c + 3 * b * g + 12 * sq(c) + 8 * c * g + sq(g) + a + b +
           6 * c + g});
  Poly s3 = Rat(-1) * c * (2 * a + 2 + 2 * b + 2 * c + g) *
            poly_of({-2 * a - 2 * c - g - 1,
                     2 * a + 2 * b + 4 * c + 2 * g + 2});
  return DiffOp::from_poly_coeffs({s3, s2, s1, leading_sq()});
}

DiffOp make_Gauss(const Rat& a, const Rat& b, const Rat& c) {
  Poly p2 = term(1, 1) * poly_of({-1, 1});
  Poly p1 = poly_of({-c, a + b + 1});
  Poly p0 = Poly(a * b);
  return DiffOp::from_poly_coeffs({p0, p1, p2});
}

DiffOp make_ML4(const Params& p, const Rat& m) {
  const Rat &A0 = p.A0, &A1 = p.A1, &A2 = p.A2, &A3 = p.A3;
  const Rat M = m - Rat(1, 2);
  Poly m3 = Rat(-2) * term(1, 1) * poly_of({-1, 2}) * poly_of({-1, 1}) *
            Poly(M - 2);
  Poly m2 = poly_of({-3 * M + Rat(9, 4) + sq(M) - sq(A0),
                     Rat(-29, 2) - 6 * sq(M) + 18 * M + sq(A0) + sq(A3) -
                         sq(A1) + sq(A2),
                     Rat(29, 2) + 6 * sq(M) - 18 * M - sq(A2) - sq(A3)});
  Poly m1 = (M - 1) *
            poly_of({8 * M - 5 - 4 * sq(M) + 2 * sq(A0) + 2 * sq(A3) +
                         2 * sq(A2) - 2 * sq(A1),
                     10 + 8 * sq(M) - 16 * M - 4 * sq(A3) - 4 * sq(A2)}) *
            Rat(-1, 2);
  Poly m0 = Poly((2 * A2 - 1 + 2 * M) * (-2 * A2 - 1 + 2 * M) *
                 (-2 * A3 - 1 + 2 * M) * (2 * A3 - 1 + 2 * M) * Rat(1, 16));
  return DiffOp::from_poly_coeffs({m0, m1, m2, m3, leading_sq()});
}

DiffOp make_M4case1(const Rat& m, const Rat& a2, const Rat& b2, const Rat& c2) {
  Poly m3 = Rat(-1) * term(1, 1) * poly_of({-1, 2}) * poly_of({-1, 1}) *
            Poly(2 * m - 5);
  Poly m2 = poly_of(
      {3 - sq(c2) + 2 * c2 - 4 * m + sq(m),
       2 * c2 * b2 + 2 * c2 * a2 - 2 * c2 - 4 * a2 * b2 - 24 - 6 * sq(m) +
           24 * m,
       2 * a2 * b2 + 25 - sq(b2) - 24 * m - sq(a2) + 6 * sq(m)});
  Poly m1 = (2 * m - 3) *
            poly_of({sq(m) - 3 * m - c2 * b2 - c2 * a2 + 2 + 2 * a2 * b2 + c2,
                     -2 * sq(m) + 6 * m + sq(a2) - 2 * a2 * b2 + sq(b2) - 5});
  Poly m0 = Poly(-sq(m - 1) * (a2 - 1 + m - b2) * (a2 + 1 - m - b2));
  return DiffOp::from_poly_coeffs({m0, m1, m2, m3, leading_sq()});
}

DiffOp make_K13one() {
  RatFun c0(poly_of({-1, 2}), term(1, 1) * poly_of({-1, 1}));
  return DiffOp({c0, RatFun(Rat(1))});
}

DiffOp make_K13three(const Params& p) {
  const Rat &A0 = p.A0, &A1 = p.A1, &A3 = p.A3;
  Poly den1 = term(1, 2) * poly_of({-1, 1}).pow(2);
  Poly num1 = poly_of({-sq(A0) + 1, sq(A0) - sq(A1) + sq(A3) - 1, -sq(A3) + 1});
  Poly den0 = Rat(2) * term(1, 3) * poly_of({-1, 1}).pow(3);
  Poly num0 = poly_of({2 * sq(A0) - 2, -5 * sq(A0) + sq(A1) - sq(A3) + 5,
                       3 * sq(A0) - 3 * sq(A1) + 3 * sq(A3) - 3,
                       -2 * sq(A3) + 2});
  return DiffOp({RatFun(-num0, den0), RatFun(num1, den1), RatFun(),
                 RatFun(Rat(1))});
}

Rat case1_lambda(const Rat& b1, const Rat& a2, const Rat& b2, const Rat& c2) {
  Rat den = (b1 - c2 + b2) * (b1 - c2 + a2);
  if (den == 0) fail(ErrorKind::DegenerateParams, "degenerate order-6 family");
  return -(2 * b1 - c2) / den;
}

DiffOp make_Y(const Rat& b1, const Rat& a2, const Rat& b2, const Rat& c2,
              const Rat& m) {
  Rat lam = case1_lambda(b1, a2, b2, c2);
  Poly shifted = poly_of({(m - 1) * lam, 1});  // x + (m-1) lambda
  RatFun c0 = RatFun(Poly(1 - m)) + RatFun(term(1, 1), shifted);
  return DiffOp({c0, RatFun(term(1, 1))});
}

DiffOp case1_L(const Rat& b1, const Rat& a2, const Rat& b2, const Rat& c2) {
  Rat den = 2 * b1 - c2;
  if (den == 0) fail(ErrorKind::DegenerateParams, "2 b1 = c2");
  Rat a1 = (2 * a2 * b2 - a2 * c2 + b1 * c2 - b2 * c2) / den;
  DiffOp kss = tensor_product(gauss_s_function({a1, b1, c2}),
                              gauss_s_function({a2, b2, c2}));
  Rat e1 = c2 - 1 - (a1 + b1 + a2 + b2) / 2;
  return ad_conjugate(kss, {{Rat(0), Rat(-1)}, {Rat(1), e1}}).op;
}

DiffOp make_M6(const Rat& b1, const Rat& a2, const Rat& b2, const Rat& c2,
               const Rat& m) {
  DiffOp l6 = DiffOp::d(2) * case1_L(b1, a2, b2, c2);
  return theta_shift(l6, m);
}

DiffOp make_M5(const Rat& b1, const Rat& a2, const Rat& b2, const Rat& c2,
               const Rat& m) {
  DiffOp m6 = make_M6(b1, a2, b2, c2, m);
  LeftDivision div = ore_left_factor_divide(m6, make_Y(b1, a2, b2, c2, m));
  if (!div.remainder.is_zero())
    fail(ErrorKind::Internal, "order-6 operator did not factor");
  return normalize(div.quotient).op;
}

DiffOp make_Diag2(const Params& p) {
  Poly c2 = poly_of({1, 0, -1});  // 1 - t^2
  Poly c1 = term(p.a0(), 1);
  Poly c0 = Poly(p.a(3));
  return DiffOp::from_poly_coeffs({c0, c1, c2});
}

}  // namespace

DiffOp make(const std::string& name, const ParamMap& params) {
  if (name == "Z") return make_Z(Params::from_map(params));
  if (name == "Zt") return make_Zt(Params::from_map(params));
  if (name == "Ztilde") return make_Ztilde(Params::from_map(params));
  if (name == "K") return make_K(Params::from_map(params));
  if (name == "L") return make_L(Params::from_map(params));
  if (name == "Q") return make_Q(Params::from_map(params));
  if (name == "R") return make_R(Params::from_map(params));
  if (name == "DF")
    return make_DF(need(params, "a"), need(params, "b"), need(params, "c"),
                   need(params, "g"));
  if (name == "Gauss")
    return make_Gauss(need(params, "a"), need(params, "b"), need(params, "c"));
  if (name == "ML4")
    return make_ML4(Params::from_map(params), need(params, "m"));
  if (name == "M6")
    return make_M6(need(params, "b1"), need(params, "a2"), need(params, "b2"),
                   need(params, "c2"), need(params, "m"));
  if (name == "M5")
    return make_M5(need(params, "b1"), need(params, "a2"), need(params, "b2"),
                   need(params, "c2"), need(params, "m"));
  if (name == "Y")
    return make_Y(need(params, "b1"), need(params, "a2"), need(params, "b2"),
                  need(params, "c2"), need(params, "m"));
  if (name == "M4case1")
    return make_M4case1(need(params, "m"), need(params, "a2"),
                        need(params, "b2"), need(params, "c2"));
  if (name == "K13one") return make_K13one();
  if (name == "K13three") return make_K13three(Params::from_map(params));
  if (name == "Diag2") return make_Diag2(Params::from_map(params));
  fail(ErrorKind::UnknownName, "unknown operator '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"Z",  "Zt", "Ztilde", "K",  "L",        "Q",       "R",
          "DF", "Gauss", "ML4", "M6", "M5",       "Y",       "M4case1",
          "K13one", "K13three", "Diag2"};
}

DiffOp tensor_product(const RatFun& s1, const RatFun& s2) {
  if (s1 == s2) {
    // d^3 - 4 S d - 2 S'
    return DiffOp({Rat(-2) * s1.derivative(), Rat(-4) * s1, RatFun(),
                   RatFun(Rat(1))});
  }
  RatFun diff = s1 - s2;
  RatFun d1 = s1.derivative(), d2 = s2.derivative();
  RatFun f3 = -(d1 - d2) / diff;
  RatFun f2 = Rat(-2) * (s1 + s2);
  RatFun f1 = -(s1 * d1 - s2 * d2 + Rat(5) * (s1 * d2 - d1 * s2)) / diff;
  RatFun f0 = -d1.derivative() - d2.derivative() + diff * diff +
              (d1 * d1 - d2 * d2) / diff;
  return DiffOp({f0, f1, f2, f3, RatFun(Rat(1))});
}

RatFun gauss_s_function(const GaussParams& g) {
  Poly x1x = Poly::monomial(1, 1) * Poly({Rat(1), Rat(-1)});  // x(1-x)
  RatFun p(Poly({g.c, -(g.a + g.b + 1)}), x1x);
  RatFun q(Poly(-(g.a * g.b)), x1x);
  return -q + Rat(1, 4) * (p * p) + Rat(1, 2) * p.derivative();
}

DiffOp tensor_product_gauss(const GaussParams& g1, const GaussParams& g2) {
  DiffOp kss = tensor_product(gauss_s_function(g1), gauss_s_function(g2));
  Rat e0 = -(g1.c + g2.c) / 2;
  Rat e1 = (g1.c + g2.c - g1.a - g1.b - g2.a - g2.b - 2) / 2;
  return ad_conjugate(kss, {{Rat(0), e0}, {Rat(1), e1}}).op;
}

Poly apparent_quadratic(const GaussParams& g1, const GaussParams& g2) {
  Rat c2 = (g1.a + g2.a - g1.b - g2.b) * (g1.a - g2.a - g1.b + g2.b);
  Rat c1 = 2 * (2 * g1.a * g1.b - 2 * g2.a * g2.b +
                (1 - g1.a - g1.b) * g1.c - (1 - g2.a - g2.b) * g2.c);
  Rat c0 = (g1.c - g2.c) * (g1.c + g2.c - 2);
  return poly_of({c0, c1, c2});
}

FrobSeries polynomial_solution_L(const Params& p) {
  if (!is_integer(p.A2) || p.A2 == 0)
    fail(ErrorKind::DegenerateParams, "A2 must be a nonzero integer");
  if (is_integer(p.A3))
    fail(ErrorKind::DegenerateParams, "A3 must not be an integer");
  long m = Rat(abs(p.A2)).get_num().get_si() - 1;
  return polynomial_solution(make("L", p.to_map()), int(m));
}

}  // namespace fuchsia

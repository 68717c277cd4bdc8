#pragma once

#include <map>
#include <string>
#include <vector>

#include "diffop.hpp"

namespace fuchsia {

// A point of the Riemann sphere used as an expansion point.
struct PointAt {
  bool at_infinity = false;
  Rat x = 0;
  static PointAt finite(const Rat& x) { return {false, x}; }
  static PointAt infinity() { return {true, 0}; }
  bool operator==(const PointAt& o) const {
    return at_infinity == o.at_infinity && (at_infinity || x == o.x);
  }
  std::string str() const { return at_infinity ? "inf" : rat_str(x); }
};

// Exact shift data of an operator with polynomial coefficients:
// P . x^m = sum_d e_d(m) x^(m+d); e_d is a polynomial in m.
using ShiftCoeffs = std::map<int, Poly>;
ShiftCoeffs shift_coeffs(const DiffOp& p);

// Operator translated so that `point` becomes the origin (reciprocal map
// for infinity), normalized to polynomial coefficients.
DiffOp translate_to_origin(const DiffOp& p, const PointAt& point);

// Exponents as roots of the indicial polynomial at a point. Irrational
// indicial roots stay in `residual`.
struct Exponents {
  std::vector<std::pair<Rat, int>> roots;  // (root, multiplicity)
  Poly residual;
  std::vector<Rat> flat() const {
    std::vector<Rat> v;
    for (const auto& [r, m] : roots)
      for (int i = 0; i < m; ++i) v.push_back(r);
    return v;
  }
};
Exponents local_exponents(const DiffOp& p, const PointAt& point);

// Linear form in the named parameters, e.g. 1/2 - A1.
struct ExponentForm {
  Rat constant;
  std::map<std::string, Rat> coeffs;
  Rat eval(const std::map<std::string, Rat>& params) const;
  std::string str() const;
};
ExponentForm ef(const Rat& c);
ExponentForm ef(const Rat& c, const std::string& sym, const Rat& k);

struct RiemannScheme {
  struct Column {
    PointAt point;
    std::vector<ExponentForm> exponents;
  };
  std::vector<Column> columns;
};

// Paper scheme tables for the catalog operators (throws UnknownName).
RiemannScheme expected_scheme(const std::string& name);

// Normal form without the third-order term: coefficients (q2,q3,q4) of
// d^4 + q2 d^2 + q3 d + q4 reached by rescaling the unknown.
struct NormalFormQ {
  RatFun q2, q3, q4;
};
NormalFormQ normal_form_q(const DiffOp& p);

// Densities of the two fundamental invariants of an order-4 operator:
// theta3 = q3 - q2', theta4 = q4 - q3'/2 - (9/100) q2^2 + q2''/5.
struct ThetaInvariants {
  RatFun theta3, theta4;
};
ThetaInvariants theta_invariants(const DiffOp& p);

bool is_self_adjoint(const DiffOp& p);

}  // namespace fuchsia

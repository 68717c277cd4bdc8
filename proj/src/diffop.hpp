#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ratfun.hpp"

namespace fuchsia {

// Linear differential operator sum_j c_j(x) d^j over Q(x). The coefficient
// of the highest stored power is nonzero; the zero operator has no
// coefficients.
class DiffOp {
 public:
  DiffOp() = default;
  explicit DiffOp(std::vector<RatFun> coeffs) : c_(std::move(coeffs)) { trim(); }

  static DiffOp zero() { return DiffOp(); }
  static DiffOp d(int power = 1);               // the operator d^power
  static DiffOp mul_by(const RatFun& f);        // multiplication operator
  static DiffOp from_poly_coeffs(const std::vector<Poly>& coeffs);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const RatFun& coeff(int j) const {
    static const RatFun kZero;
    return (j >= 0 && j < static_cast<int>(c_.size())) ? c_[size_t(j)] : kZero;
  }
  const std::vector<RatFun>& coeffs() const { return c_; }
  bool polynomial_coeffs() const;

  DiffOp operator+(const DiffOp& o) const;
  DiffOp operator-(const DiffOp& o) const;
  DiffOp operator-() const;
  // operator composition (this applied after o)
  DiffOp operator*(const DiffOp& o) const;
  bool operator==(const DiffOp& o) const { return c_ == o.c_; }
  bool operator!=(const DiffOp& o) const { return c_ != o.c_; }

  DiffOp scale(const RatFun& f) const;  // left multiplication by a function

  std::string str() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<RatFun> c_;
};

// Normalized form: polynomial coefficients, unit content, no common
// polynomial factor, positive leading coefficient of the top coefficient.
// `factor` is the extracted left rational-function factor, so that
// input = factor * normalized.
struct Normalized {
  DiffOp op;
  RatFun factor;
};
Normalized normalize(const DiffOp& p);

// Weaker form used inside transforms that do not commute with left
// factors: polynomial coefficients and unit rational content, but common
// polynomial factors are kept.
Normalized clear_denominators(const DiffOp& p);

// sum_j (-d)^j . c_j, expanded to standard form
DiffOp adjoint(const DiffOp& p);

// Ad(f)P with f = prod (x-center_i)^{exponent_i}: substitute
// d -> d - f'/f and normalize; returns the normalized operator and the
// extracted left factor.
struct AdFactor {
  Rat center;
  Rat exponent;
};
Normalized ad_conjugate(const DiffOp& p, const std::vector<AdFactor>& factors);

struct VarMap {
  enum Kind { Affine, Reciprocal } kind = Affine;
  // old variable = a * new + b for the affine map
  Rat a = 1, b = 0;
  static VarMap affine(const Rat& a, const Rat& b) { return {Affine, a, b}; }
  static VarMap reciprocal() { return {Reciprocal, 0, 0}; }
};
// Operator rewritten in the new variable, normalized.
Normalized change_var(const DiffOp& p, const VarMap& map);

// sum_k c_k(theta) d^k with theta = x d kept to the left of d.
class ThetaForm {
 public:
  ThetaForm() = default;
  explicit ThetaForm(std::vector<Poly> coeffs) : c_(std::move(coeffs)) { trim(); }
  const std::vector<Poly>& coeffs() const { return c_; }
  const Poly& coeff(int k) const {
    static const Poly kZero;
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[size_t(k)] : kZero;
  }
  bool is_zero() const { return c_.empty(); }
  // substitute theta -> theta + s
  ThetaForm shift_theta(const Rat& s) const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Poly> c_;
};

// Requires polynomial coefficients and max{i-j : p_ij != 0} <= 0; throws
// ShapeError otherwise.
ThetaForm to_theta(const DiffOp& p);
DiffOp from_theta(const ThetaForm& t);

// Divide by d from the left as long as c_0(theta) vanishes identically;
// returns the divided form and the number of divisions performed.
std::pair<ThetaForm, int> left_divide_by_d(const ThetaForm& t);

// Middle convolution: left-multiply d^r with r = max{i-j}, convert to the
// theta form, substitute theta -> theta - mu, divide by d from the left as
// many times as possible, normalize.
DiffOp mc(const DiffOp& p, const Rat& mu);
bool mc_compose_check(const DiffOp& p, const Rat& mu1, const Rat& mu2);

// theta-shift without the trailing division; used by the order-6 transform
// of the degenerate tensor products.
DiffOp theta_shift(const DiffOp& p, const Rat& mu);

// P = Y o quotient + remainder with order(remainder) < order(Y).
struct LeftDivision {
  DiffOp quotient;
  DiffOp remainder;
};
LeftDivision ore_left_factor_divide(const DiffOp& p, const DiffOp& y);

// f with P = f * Q when the coefficient-wise ratio is one rational
// function; nullopt otherwise.
std::optional<RatFun> equals_up_to_left_factor(const DiffOp& p, const DiffOp& q);

// true when the two operators agree after normalization
bool same_operator(const DiffOp& p, const DiffOp& q);

}  // namespace fuchsia

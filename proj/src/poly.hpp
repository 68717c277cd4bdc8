#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rat.hpp"

namespace fuchsia {

// Dense univariate polynomial over Q. The zero polynomial has an empty
// coefficient vector and degree() == -1. The variable tag is cosmetic.
class Poly {
 public:
  Poly() = default;
  Poly(const Rat& c) {
    if (c != 0) c_.push_back(c);
  }
  Poly(long c) : Poly(Rat(c)) {}
  explicit Poly(std::vector<Rat> coeffs, char var = 'x')
      : c_(std::move(coeffs)), var_(var) {
    trim();
  }

  static Poly monomial(const Rat& c, int deg, char var = 'x');
  // the identity polynomial "x"
  static Poly variable(char var = 'x') { return monomial(1, 1, var); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  char var() const { return var_; }
  void set_var(char v) { var_ = v; }

  const Rat& coeff(int i) const {
    static const Rat kZero(0);
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[size_t(i)] : kZero;
  }
  const Rat& leading() const { return c_.back(); }
  const std::vector<Rat>& coeffs() const { return c_; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& s) const;
  Poly operator/(const Rat& s) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }

  Poly derivative() const;
  Rat eval(const Rat& x) const;
  // p(a*x + b)
  Poly compose_affine(const Rat& a, const Rat& b) const;
  // p(x + a)
  Poly shift(const Rat& a) const { return compose_affine(1, a); }
  Poly pow(int e) const;

  // Field division: *this = q*d + r with deg r < deg d.
  std::pair<Poly, Poly> divrem(const Poly& d) const;
  // Exact division; throws Internal if a remainder is left.
  Poly div_exact(const Poly& d) const;

  // gcd of all rational coefficients (0 for the zero polynomial)
  Rat content() const;
  Poly monic() const;

  std::string str() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
  char var_ = 'x';
};

inline Poly operator*(const Rat& s, const Poly& p) { return p * s; }

// Monic gcd over Q; gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_lcm(const Poly& a, const Poly& b);

// Squarefree decomposition (Yun): list of (monic factor, multiplicity).
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

// All rational roots of p (p nonzero) with multiplicities, plus the residual
// cofactor of p with the corresponding linear factors divided out. Roots are
// sorted ascending. Complete: every rational root is found (Sturm isolation
// on a monic integer model, no integer factorization involved).
struct RationalRoots {
  std::vector<std::pair<Rat, int>> roots;
  Poly residual;
};
RationalRoots rational_roots(const Poly& p);

}  // namespace fuchsia

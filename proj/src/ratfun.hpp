#pragma once

#include <string>

#include "poly.hpp"

namespace fuchsia {

// Element of Q(x): numerator / monic denominator, kept coprime.
class RatFun {
 public:
  RatFun() : num_(), den_(Rat(1)) {}
  RatFun(const Rat& c) : num_(c), den_(Rat(1)) {}
  RatFun(long c) : num_(Rat(c)), den_(Rat(1)) {}
  RatFun(const Poly& p) : num_(p), den_(Rat(1)) {}
  RatFun(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return num_.is_constant() && is_polynomial(); }

  RatFun operator-() const;
  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;
  bool operator==(const RatFun& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  RatFun derivative() const;
  Rat eval(const Rat& x) const;          // throws on a denominator zero
  bool defined_at(const Rat& x) const { return den_.eval(x) != 0; }

  std::string str() const;

 private:
  Poly num_, den_;
};

inline RatFun operator*(const Rat& s, const RatFun& f) { return RatFun(s) * f; }
inline RatFun operator+(const Rat& s, const RatFun& f) { return RatFun(s) + f; }
inline RatFun operator-(const Rat& s, const RatFun& f) { return RatFun(s) - f; }

// p composed with a rational function argument (Horner over Q(x)).
RatFun poly_at_ratfun(const Poly& p, const RatFun& arg);

}  // namespace fuchsia

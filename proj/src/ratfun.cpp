#include "ratfun.hpp"

namespace fuchsia {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorKind::DegenerateDenominator, "ratfun with zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(Rat(1));
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.div_exact(g);
    den_ = den_.div_exact(g);
  }
  Rat lc = den_.leading();
  num_ = num_ / lc;
  den_ = den_ / lc;
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
  return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
  return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const {
  if (o.is_zero()) fail(ErrorKind::DegenerateDenominator, "ratfun / 0");
  return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::derivative() const {
  return RatFun(num_.derivative() * den_ - num_ * den_.derivative(),
                den_ * den_);
}

Rat RatFun::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (d == 0) fail(ErrorKind::PoleInCoefficient, "evaluation at a pole");
  return num_.eval(x) / d;
}

std::string RatFun::str() const {
  if (is_polynomial()) return num_.str();
  std::string n = num_.str(), d = den_.str();
  if (num_.degree() > 0) n = "(" + n + ")";
  return n + "/(" + d + ")";
}

RatFun poly_at_ratfun(const Poly& p, const RatFun& arg) {
  RatFun acc;
  for (size_t i = p.coeffs().size(); i-- > 0;)
    acc = acc * arg + RatFun(p.coeffs()[i]);
  return acc;
}

}  // namespace fuchsia

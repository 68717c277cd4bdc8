#include "mpoly.hpp"

#include <sstream>

namespace fuchsia {

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_)
      r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return r;
}

MPoly MPoly::operator*(const Rat& s) const {
  if (s == 0) return MPoly();
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c *= s;
  return r;
}

MPoly MPoly::partial(int var) const {
  MPoly r;
  for (const auto& [e, c] : terms_) {
    if (e[size_t(var)] == 0) continue;
    Expo d = e;
    d[size_t(var)] -= 1;
    r.add_term(d, c * Rat(e[size_t(var)]));
  }
  return r;
}

Rat MPoly::eval(const std::array<Rat, 3>& x) const {
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (int v = 0; v < 3; ++v)
      if (e[size_t(v)]) t *= rat_pow(x[size_t(v)], e[size_t(v)]);
    acc += t;
  }
  return acc;
}

MPoly MPoly::subs(const std::array<MPoly, 3>& args) const {
  // cache powers of each argument up to the needed degree
  std::array<std::vector<MPoly>, 3> pows;
  for (int v = 0; v < 3; ++v) pows[size_t(v)] = {MPoly(Rat(1))};
  auto power = [&](int v, int e) -> const MPoly& {
    auto& tab = pows[size_t(v)];
    while (static_cast<int>(tab.size()) <= e)
      tab.push_back(tab.back() * args[size_t(v)]);
    return tab[size_t(e)];
  };
  MPoly r;
  for (const auto& [e, c] : terms_) {
    MPoly t(c);
    for (int v = 0; v < 3; ++v)
      if (e[size_t(v)]) t = t * power(v, e[size_t(v)]);
    r = r + t;
  }
  return r;
}

MPoly MPoly::permute_vars(const std::array<int, 3>& p) const {
  MPoly r;
  for (const auto& [e, c] : terms_) {
    Expo d{0, 0, 0};
    for (int v = 0; v < 3; ++v) d[size_t(p[size_t(v)])] = e[size_t(v)];
    r.add_term(d, c);
  }
  return r;
}

Rat MPoly::content() const {
  Rat g(0);
  for (const auto& [e, c] : terms_) g = rat_gcd(g, c);
  return g;
}

std::string MPoly::str(const std::array<std::string, 3>& names) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // print highest terms first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    bool any_var = e[0] || e[1] || e[2];
    if (a != 1 || !any_var) os << rat_str(a);
    bool need_star = (a != 1);
    for (int v = 0; v < 3; ++v) {
      if (!e[size_t(v)]) continue;
      if (need_star) os << "*";
      os << names[size_t(v)];
      if (e[size_t(v)] > 1) os << "^" << e[size_t(v)];
      need_star = true;
    }
  }
  return os.str();
}

MRatFun::MRatFun(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    fail(ErrorKind::DegenerateDenominator, "mratfun with zero denominator");
  if (num_.is_zero()) {
    den_ = MPoly(Rat(1));
    return;
  }
  Rat c = num_.content();
  Rat d = den_.content();
  Rat lead = den_.terms().rbegin()->second;  // top grlex coefficient
  Rat scale = (sgn(lead) < 0 ? -d : d);
  num_ = num_ * (1 / scale);
  den_ = den_ * (1 / scale);
  (void)c;
}

MRatFun MRatFun::operator-() const {
  MRatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

MRatFun MRatFun::operator+(const MRatFun& o) const {
  if (den_ == o.den_) return MRatFun(num_ + o.num_, den_);
  return MRatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

MRatFun MRatFun::operator-(const MRatFun& o) const { return *this + (-o); }

MRatFun MRatFun::operator*(const MRatFun& o) const {
  return MRatFun(num_ * o.num_, den_ * o.den_);
}

}  // namespace fuchsia

#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "rat.hpp"

namespace fuchsia {

// Multivariate polynomial over Q in up to 3 variables (t1,t2,t3 unless the
// caller prints with other names). Terms are kept in graded lex order with
// t1 > t2 > t3; no zero coefficients are stored.
class MPoly {
 public:
  using Expo = std::array<int, 3>;

  struct Grlex {
    bool operator()(const Expo& a, const Expo& b) const {
      int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
      if (da != db) return da < db;
      return a < b;  // lex with t1 highest
    }
  };
  using Terms = std::map<Expo, Rat, Grlex>;

  MPoly() = default;
  MPoly(const Rat& c) {
    if (c != 0) terms_[{0, 0, 0}] = c;
  }
  MPoly(long c) : MPoly(Rat(c)) {}

  static MPoly variable(int i, int power = 1) {
    MPoly p;
    Expo e{0, 0, 0};
    e[size_t(i)] = power;
    p.terms_[e] = 1;
    return p;
  }
  static MPoly term(const Rat& c, int e1, int e2, int e3) {
    MPoly p;
    if (c != 0) p.terms_[{e1, e2, e3}] = c;
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
    return d;
  }
  const Rat& coeff(int e1, int e2, int e3) const {
    static const Rat kZero(0);
    auto it = terms_.find({e1, e2, e3});
    return it == terms_.end() ? kZero : it->second;
  }

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(const Rat& s) const;
  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MPoly& o) const { return terms_ != o.terms_; }

  MPoly partial(int var) const;
  Rat eval(const std::array<Rat, 3>& x) const;
  // simultaneous substitution var i -> args[i]
  MPoly subs(const std::array<MPoly, 3>& args) const;
  // permutation of the variables: result(t_{p[0]},t_{p[1]},t_{p[2]}) reads
  // exponent i from slot p[i]
  MPoly permute_vars(const std::array<int, 3>& p) const;

  Rat content() const;
  std::string str(const std::array<std::string, 3>& names = {"t1", "t2",
                                                             "t3"}) const;

 private:
  void add_term(const Expo& e, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  Terms terms_;
};

inline MPoly operator*(const Rat& s, const MPoly& p) { return p * s; }

// Fraction of multivariate polynomials, reduced by rational content only
// (no multivariate gcd); the denominator's leading grlex coefficient is 1.
class MRatFun {
 public:
  MRatFun() : num_(), den_(Rat(1)) {}
  MRatFun(const MPoly& p) : num_(p), den_(Rat(1)) {}
  MRatFun(MPoly num, MPoly den);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  MRatFun operator-() const;
  MRatFun operator+(const MRatFun& o) const;
  MRatFun operator-(const MRatFun& o) const;
  MRatFun operator*(const MRatFun& o) const;

  // exact equality as rational functions (cross-multiplied)
  bool equals(const MRatFun& o) const {
    return (num_ * o.den_) == (o.num_ * den_);
  }

 private:
  MPoly num_, den_;
};

}  // namespace fuchsia

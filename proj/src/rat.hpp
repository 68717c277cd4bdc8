#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace fuchsia {

// Exact rational scalar. mpq_class keeps gcd(num,den)=1 and den>0 after
// canonicalize(); every constructor path below canonicalizes.
using Rat = mpq_class;

enum class ErrorKind {
  Usage,
  UnknownName,
  MissingParam,
  ShapeError,
  IrregularSingular,
  ResonanceObstruction,
  NonGenericExponent,
  DegenerateParams,
  DegenerateDenominator,
  PoleBeforeTermination,
  PoleInCoefficient,
  BalanceViolation,
  GammaPole,
  NonConvergent,
  NonLinearFactor,
  DivisionDegenerate,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "p/q", optional sign, and decimal-free integers only.
inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) fail(ErrorKind::Usage, "bad rational: '" + s + "'");
  if (r.get_den() == 0) fail(ErrorKind::Usage, "zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::optional<long> as_long(const Rat& r) {
  if (!is_integer(r) || !r.get_num().fits_slong_p()) return std::nullopt;
  return r.get_num().get_si();
}

inline Rat rat_pow(const Rat& base, long e) {
  if (e < 0) {
    if (base == 0) fail(ErrorKind::DegenerateDenominator, "0^negative");
    Rat inv = 1 / base;
    return rat_pow(inv, -e);
  }
  Rat acc(1), b = base;
  long n = e;
  while (n > 0) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

inline int sgn(const Rat& r) { return mpq_sgn(r.get_mpq_t()); }

// gcd on Q: gcd(a,b) is the largest rational dividing both with integer
// quotients; gcd(p/q, r/s) = gcd(p,r)/lcm(q,s). gcd(0,0)=0.
inline Rat rat_gcd(const Rat& a, const Rat& b) {
  if (a == 0) return abs(b);
  if (b == 0) return abs(a);
  mpz_class gn, dl;
  mpz_gcd(gn.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
  mpz_lcm(dl.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
  Rat g(gn, dl);
  g.canonicalize();
  return g;
}

}  // namespace fuchsia

#include "diffop.hpp"

#include <sstream>

namespace fuchsia {

DiffOp DiffOp::d(int power) {
  std::vector<RatFun> c(size_t(power) + 1, RatFun());
  c.back() = RatFun(Rat(1));
  return DiffOp(std::move(c));
}

DiffOp DiffOp::mul_by(const RatFun& f) { return DiffOp({f}); }

DiffOp DiffOp::from_poly_coeffs(const std::vector<Poly>& coeffs) {
  std::vector<RatFun> c;
  c.reserve(coeffs.size());
  for (const Poly& p : coeffs) c.emplace_back(p);
  return DiffOp(std::move(c));
}

bool DiffOp::polynomial_coeffs() const {
  for (const RatFun& c : c_)
    if (!c.is_polynomial()) return false;
  return true;
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
  std::vector<RatFun> c(std::max(c_.size(), o.c_.size()), RatFun());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c[i] + c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] = c[i] + o.c_[i];
  return DiffOp(std::move(c));
}

DiffOp DiffOp::operator-() const {
  std::vector<RatFun> c = c_;
  for (RatFun& f : c) f = -f;
  return DiffOp(std::move(c));
}

DiffOp DiffOp::operator-(const DiffOp& o) const { return *this + (-o); }

DiffOp DiffOp::operator*(const DiffOp& o) const {
  if (is_zero() || o.is_zero()) return DiffOp();
  // d^i o f = sum_k C(i,k) f^(k) d^(i-k)
  std::vector<RatFun> out(c_.size() + o.c_.size() - 1, RatFun());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      RatFun deriv = o.c_[j];
      Rat binom(1);
      for (size_t k = 0; k <= i; ++k) {
        if (!deriv.is_zero())
          out[i - k + j] = out[i - k + j] + binom * (c_[i] * deriv);
        if (k < i) {
          deriv = deriv.derivative();
          binom = binom * Rat(long(i - k)) / Rat(long(k + 1));
        }
      }
    }
  }
  return DiffOp(std::move(out));
}

DiffOp DiffOp::scale(const RatFun& f) const {
  std::vector<RatFun> c = c_;
  for (RatFun& g : c) g = f * g;
  return DiffOp(std::move(c));
}

std::string DiffOp::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = order(); j >= 0; --j) {
    const RatFun& c = coeff(j);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (j > 0) {
      os << "*D";
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

namespace {

Normalized reduce_coeffs(const DiffOp& p, bool extract_poly_gcd) {
  if (p.is_zero()) return {p, RatFun(Rat(1))};
  Poly den(Rat(1));
  for (const RatFun& c : p.coeffs())
    if (!c.is_zero()) den = poly_lcm(den, c.den());
  std::vector<Poly> pc(p.coeffs().size());
  for (size_t j = 0; j < pc.size(); ++j) {
    if (p.coeffs()[j].is_zero()) continue;
    RatFun scaled = p.coeffs()[j] * RatFun(den);
    pc[j] = scaled.num();  // denominator is 1 by construction
  }
  Poly g(Rat(1));
  if (extract_poly_gcd) {
    g = Poly();
    for (const Poly& q : pc) g = poly_gcd(g, q);
  }
  Rat content(0);
  for (Poly& q : pc) {
    if (!q.is_zero() && g.degree() > 0) q = q.div_exact(g);
    content = rat_gcd(content, q.content());
  }
  if (sgn(pc.back().leading()) < 0) content = -content;
  std::vector<RatFun> out(pc.size());
  for (size_t j = 0; j < pc.size(); ++j) out[j] = RatFun(pc[j] / content);
  return {DiffOp(std::move(out)), RatFun(g * content, den)};
}

}  // namespace

Normalized normalize(const DiffOp& p) { return reduce_coeffs(p, true); }

Normalized clear_denominators(const DiffOp& p) {
  return reduce_coeffs(p, false);
}

DiffOp adjoint(const DiffOp& p) {
  DiffOp acc;
  for (int j = 0; j <= p.order(); ++j) {
    if (p.coeff(j).is_zero()) continue;
    DiffOp term = DiffOp::d(j) * DiffOp::mul_by(p.coeff(j));
    acc = acc + (j % 2 ? -term : term);
  }
  return acc;
}

Normalized ad_conjugate(const DiffOp& p, const std::vector<AdFactor>& factors) {
  // logarithmic derivative of prod (x-c_i)^{e_i}
  RatFun logd;
  for (const AdFactor& f : factors)
    logd = logd + RatFun(Poly(f.exponent), Poly({-f.center, Rat(1)}));
  DiffOp sub = DiffOp::d() - DiffOp::mul_by(logd);
  DiffOp acc, power = DiffOp::mul_by(RatFun(Rat(1)));
  for (int j = 0; j <= p.order(); ++j) {
    if (!p.coeff(j).is_zero()) acc = acc + power.scale(p.coeff(j));
    if (j < p.order()) power = sub * power;
  }
  return normalize(acc);
}

Normalized change_var(const DiffOp& p, const VarMap& map) {
  DiffOp acc;
  if (map.kind == VarMap::Affine) {
    if (map.a == 0) fail(ErrorKind::Usage, "affine change with a = 0");
    // old = a*new + b, d_old = (1/a) d_new
    Rat inva = 1 / map.a;
    Rat scale(1);
    for (int j = 0; j <= p.order(); ++j) {
      if (!p.coeff(j).is_zero()) {
        Poly n = p.coeff(j).num().compose_affine(map.a, map.b);
        Poly d = p.coeff(j).den().compose_affine(map.a, map.b);
        DiffOp term = DiffOp::d(j).scale(RatFun(n * scale, d));
        acc = acc + term;
      }
      scale *= inva;
    }
  } else {
    // old = 1/new, d_old = -new^2 d_new
    RatFun y2(Poly({Rat(0), Rat(0), Rat(-1)}));
    DiffOp sub = DiffOp::d().scale(y2);
    RatFun inv(Poly(Rat(1)), Poly({Rat(0), Rat(1)}));
    DiffOp power = DiffOp::mul_by(RatFun(Rat(1)));
    for (int j = 0; j <= p.order(); ++j) {
      if (!p.coeff(j).is_zero()) {
        RatFun cn = poly_at_ratfun(p.coeff(j).num(), inv);
        RatFun cd = poly_at_ratfun(p.coeff(j).den(), inv);
        acc = acc + power.scale(cn / cd);
      }
      if (j < p.order()) power = sub * power;
    }
  }
  return normalize(acc);
}

ThetaForm ThetaForm::shift_theta(const Rat& s) const {
  std::vector<Poly> out(c_.size());
  for (size_t k = 0; k < c_.size(); ++k) out[k] = c_[k].shift(s);
  return ThetaForm(std::move(out));
}

ThetaForm to_theta(const DiffOp& p) {
  if (!p.polynomial_coeffs())
    fail(ErrorKind::ShapeError, "theta form needs polynomial coefficients");
  // falling-factorial basis polynomials ff[i](theta) = theta(theta-1)...(theta-i+1)
  int maxi = 0;
  for (int j = 0; j <= p.order(); ++j)
    maxi = std::max(maxi, p.coeff(j).num().degree());
  std::vector<Poly> ff(size_t(maxi) + 1);
  ff[0] = Poly(Rat(1));
  for (int i = 1; i <= maxi; ++i)
    ff[size_t(i)] = ff[size_t(i - 1)] * Poly({Rat(1 - i), Rat(1)});
  std::vector<Poly> out(size_t(p.order()) + 1);
  for (int j = 0; j <= p.order(); ++j) {
    const Poly& cj = p.coeff(j).num();
    if (p.coeff(j).is_zero()) continue;
    for (int i = 0; i <= cj.degree(); ++i) {
      const Rat& pij = cj.coeff(i);
      if (pij == 0) continue;
      if (i > j)
        fail(ErrorKind::ShapeError,
             "term x^i d^j with i > j; left-multiply d^(i-j) first");
      // x^i d^j = ff_i(theta) d^(j-i)
      out[size_t(j - i)] = out[size_t(j - i)] + ff[size_t(i)] * pij;
    }
  }
  return ThetaForm(std::move(out));
}

DiffOp from_theta(const ThetaForm& t) {
  DiffOp acc;
  for (int k = 0; k < static_cast<int>(t.coeffs().size()); ++k) {
    Poly f = t.coeff(k);
    if (f.is_zero()) continue;
    // rewrite f(theta) in the falling-factorial basis by forward differences:
    // f = sum_i (Delta^i f)(0)/i! * theta(theta-1)...(theta-i+1)
    std::vector<Poly> diffs{f};
    while (!diffs.back().is_zero())
      diffs.push_back(diffs.back().shift(1) - diffs.back());
    Rat fact(1);
    std::vector<RatFun> coeffs;
    for (size_t i = 0; i + 1 < diffs.size(); ++i) {
      if (i > 0) fact *= Rat(long(i));
      Rat a = diffs[i].eval(0) / fact;
      if (a == 0) continue;
      // a * x^i d^(i+k)
      std::vector<RatFun> mono(i + size_t(k) + 1, RatFun());
      mono.back() = RatFun(Poly::monomial(a, int(i)));
      acc = acc + DiffOp(std::move(mono));
    }
  }
  return acc;
}

std::pair<ThetaForm, int> left_divide_by_d(const ThetaForm& t) {
  ThetaForm cur = t;
  int divisions = 0;
  while (!cur.is_zero() && cur.coeff(0).is_zero()) {
    std::vector<Poly> next(cur.coeffs().size() - 1);
    for (size_t k = 1; k < cur.coeffs().size(); ++k)
      next[k - 1] = cur.coeffs()[k].shift(-1);
    cur = ThetaForm(std::move(next));
    ++divisions;
  }
  return {cur, divisions};
}

DiffOp mc(const DiffOp& p, const Rat& mu) {
  DiffOp q = clear_denominators(p).op;
  int r = 0;
  for (int j = 0; j <= q.order(); ++j)
    if (!q.coeff(j).is_zero())
      r = std::max(r, q.coeff(j).num().degree() - j);
  if (r > 0) q = DiffOp::d(r) * q;
  ThetaForm t = to_theta(q).shift_theta(-mu);
  DiffOp c = from_theta(t);
  // divide by d from the left as many times as possible (exact Ore
  // division; the quotient need not stay expressible in theta, which is
  // where the order drops happen)
  while (c.order() >= 2) {
    LeftDivision div = ore_left_factor_divide(c, DiffOp::d());
    if (!div.remainder.is_zero()) break;
    c = div.quotient;
  }
  return normalize(c).op;
}

DiffOp theta_shift(const DiffOp& p, const Rat& mu) {
  DiffOp q = clear_denominators(p).op;
  return normalize(from_theta(to_theta(q).shift_theta(-mu))).op;
}

bool mc_compose_check(const DiffOp& p, const Rat& mu1, const Rat& mu2) {
  DiffOp lhs = mc(mc(p, mu2), mu1);
  DiffOp rhs = mc(p, mu1 + mu2);
  return equals_up_to_left_factor(lhs, rhs).has_value();
}

LeftDivision ore_left_factor_divide(const DiffOp& p, const DiffOp& y) {
  if (y.order() < 1) fail(ErrorKind::Usage, "left factor must have order >= 1");
  if (y.coeff(y.order()).is_zero())
    fail(ErrorKind::DivisionDegenerate, "left factor leading coefficient is 0");
  DiffOp quotient, rem = p;
  const RatFun& lead = y.coeff(y.order());
  while (rem.order() >= y.order()) {
    int k = rem.order() - y.order();
    RatFun q = rem.coeff(rem.order()) / lead;
    DiffOp mono(std::vector<RatFun>(size_t(k) + 1, RatFun()));
    {
      std::vector<RatFun> c(size_t(k) + 1, RatFun());
      c.back() = q;
      mono = DiffOp(std::move(c));
    }
    quotient = quotient + mono;
    rem = rem - y * mono;
  }
  return {quotient, rem};
}

std::optional<RatFun> equals_up_to_left_factor(const DiffOp& p, const DiffOp& q) {
  if (p.is_zero() && q.is_zero()) return RatFun(Rat(1));
  if (p.is_zero() || q.is_zero() || p.order() != q.order()) return std::nullopt;
  RatFun f = p.coeff(p.order()) / q.coeff(q.order());
  for (int j = 0; j <= p.order(); ++j)
    if (p.coeff(j) != f * q.coeff(j)) return std::nullopt;
  return f;
}

bool same_operator(const DiffOp& p, const DiffOp& q) {
  return normalize(p).op == normalize(q).op;
}

}  // namespace fuchsia

#include "poly.hpp"

#include <algorithm>
#include <sstream>

namespace fuchsia {

Poly Poly::monomial(const Rat& c, int deg, char var) {
  Poly p;
  p.var_ = var;
  if (c != 0) {
    p.c_.assign(size_t(deg) + 1, Rat(0));
    p.c_[size_t(deg)] = c;
  }
  return p;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (Rat& c : r.c_) c = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.var_ = var_;
  r.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  Poly r;
  r.var_ = var_;
  r.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  r.trim();
  return r;
}

Poly Poly::operator*(const Rat& s) const {
  if (s == 0) return Poly();
  Poly r = *this;
  for (Rat& c : r.c_) c *= s;
  return r;
}

Poly Poly::operator/(const Rat& s) const {
  if (s == 0) fail(ErrorKind::DegenerateDenominator, "poly / 0");
  return *this * (1 / Rat(s));
}

Poly Poly::derivative() const {
  Poly r;
  r.var_ = var_;
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Rat(long(i));
  r.trim();
  return r;
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::compose_affine(const Rat& a, const Rat& b) const {
  Poly arg({b, a}, var_);
  Poly acc;
  acc.var_ = var_;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * arg + Poly(c_[i]);
  acc.var_ = var_;
  return acc;
}

Poly Poly::pow(int e) const {
  Poly acc(Rat(1));
  acc.var_ = var_;
  Poly b = *this;
  for (int n = e; n > 0; n >>= 1) {
    if (n & 1) acc = acc * b;
    b = b * b;
  }
  return acc;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
  if (d.is_zero()) fail(ErrorKind::DegenerateDenominator, "poly divrem by 0");
  Poly q, r = *this;
  q.var_ = var_;
  const Rat& lc = d.leading();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int k = r.degree() - d.degree();
    Rat c = r.leading() / lc;
    q = q + Poly::monomial(c, k, var_);
    r = r - d * Poly::monomial(c, k, var_);
  }
  return {q, r};
}

Poly Poly::div_exact(const Poly& d) const {
  auto [q, r] = divrem(d);
  if (!r.is_zero()) fail(ErrorKind::Internal, "inexact poly division");
  return q;
}

Rat Poly::content() const {
  Rat g(0);
  for (const Rat& c : c_) g = rat_gcd(g, c);
  return g;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this / leading();
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = coeff(i);
    if (c == 0) continue;
    Rat a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    bool unit = (a == 1) && i > 0;
    if (!unit) os << rat_str(a);
    if (i > 0) {
      if (!unit) os << "*";
      os << var_;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x.divrem(y).second;
    // scale to unit content to keep the numbers small
    if (!r.is_zero()) r = (r / r.content());
    x = y;
    y = r;
  }
  return x.monic();
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly g = poly_gcd(a, b);
  return (a * b).div_exact(g).monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  if (p.is_zero() || p.degree() == 0) return out;
  Poly f = p.monic();
  Poly a = poly_gcd(f, f.derivative());
  Poly b = f.div_exact(a);
  Poly c = f.derivative().div_exact(a);
  Poly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly g = poly_gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = b.div_exact(g);
    c = d.div_exact(g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

namespace {

int sign_at(const std::vector<Poly>& chain, const Rat& x, int* variations) {
  int var = 0, prev = 0;
  for (const Poly& p : chain) {
    int s = sgn(p.eval(x));
    if (s != 0) {
      if (prev != 0 && s != prev) ++var;
      prev = s;
    }
  }
  *variations = var;
  return prev;
}

std::vector<Poly> sturm_chain(const Poly& f) {
  std::vector<Poly> chain{f, f.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    Poly r = chain[chain.size() - 2].divrem(chain.back()).second;
    if (r.is_zero()) break;
    r = -(r / r.content());
    chain.push_back(r);
  }
  return chain;
}

// All integer roots of a squarefree monic integer-coefficient polynomial,
// by Sturm counting plus interval bisection. No factorization of the
// constant term is needed; monicity makes every rational root an integer.
std::vector<mpz_class> integer_roots_monic(const Poly& g) {
  std::vector<mpz_class> roots;
  if (g.degree() <= 0) return roots;
  Poly f = g;

  // direct hits at 0 and ±1 keep the main loop free of tiny corner cases
  for (long r : {0L, 1L, -1L}) {
    if (f.eval(Rat(r)) == 0) {
      roots.emplace_back(r);
      f = f.div_exact(Poly({-Rat(r), Rat(1)}));
    }
  }
  if (f.degree() <= 0) return roots;

  Rat bound(1);
  for (const Rat& c : f.coeffs()) {
    Rat a = abs(c);
    if (a > bound) bound = a;
  }
  bound += 1;
  // non-integer endpoints so the chain is never evaluated at a root
  Rat lo = -bound - Rat(1, 3), hi = bound + Rat(1, 3);

  auto chain = sturm_chain(f);
  struct Iv {
    Rat lo, hi;
    int vlo, vhi;
  };
  int vlo, vhi;
  sign_at(chain, lo, &vlo);
  sign_at(chain, hi, &vhi);
  std::vector<Iv> work{{lo, hi, vlo, vhi}};
  while (!work.empty()) {
    Iv iv = work.back();
    work.pop_back();
    if (iv.vlo == iv.vhi) continue;
    if (iv.hi - iv.lo < 1) {
      // at most one integer in the interval
      mpz_class cand;
      mpz_fdiv_q(cand.get_mpz_t(), iv.hi.get_num().get_mpz_t(),
                 iv.hi.get_den().get_mpz_t());
      Rat c(cand);
      if (c > iv.lo && c <= iv.hi && f.eval(c) == 0) roots.push_back(cand);
      continue;
    }
    Rat mid = (iv.lo + iv.hi) / 2;
    if (f.eval(mid) == 0) {
      // monic integer polynomial: a rational root is an integer
      roots.push_back(mid.get_num());
      mid += Rat(1, 7);  // nudge off the root before resplitting
    }
    int vm;
    sign_at(chain, mid, &vm);
    work.push_back({iv.lo, mid, iv.vlo, vm});
    work.push_back({mid, iv.hi, vm, iv.vhi});
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace

RationalRoots rational_roots(const Poly& p) {
  if (p.is_zero()) fail(ErrorKind::Usage, "rational_roots of 0");
  RationalRoots out;
  out.residual = p;
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    // map x -> y/lc over a denominator-cleared model; then roots are integers
    Rat den(1);
    for (const Rat& c : factor.coeffs())
      den = Rat(lcm(den.get_num(), c.get_den()));
    Poly fz = factor * den;  // integer coefficients
    const Rat lc = fz.leading();
    std::vector<Rat> mc(size_t(fz.degree()) + 1);
    for (int i = 0; i <= fz.degree(); ++i)
      mc[size_t(i)] = fz.coeff(i) * rat_pow(lc, fz.degree() - i - 1);
    Poly monic_model(std::move(mc));
    for (const mpz_class& y : integer_roots_monic(monic_model)) {
      Rat root = Rat(y) / lc;
      out.roots.emplace_back(root, mult);
      Poly lin({-root, Rat(1)});
      for (int k = 0; k < mult; ++k)
        out.residual = out.residual.div_exact(lin);
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace fuchsia

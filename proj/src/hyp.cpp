#include "hyp.hpp"

#include <cmath>

namespace fuchsia {

Rat pochhammer(const Rat& a, long n) {
  Rat acc(1);
  for (long k = 0; k < n; ++k) acc *= a + k;
  return acc;
}

bool terminating(const HypParams& h) {
  return is_integer(h.a[0]) && h.a[0] <= 0;
}

HypParams at_index(const HypParams& h, long n) {
  HypParams s = h;
  s.a[0] -= n;
  s.a[1] -= n;
  s.b[0] -= n;
  s.b[1] -= n;
  return s;
}

Rat terminating_4f3_at1(const HypParams& h) {
  if (!terminating(h))
    fail(ErrorKind::Usage, "series does not terminate");
  long last = -as_long(h.a[0]).value();
  for (const Rat& beta : h.b) {
    if (is_integer(beta)) {
      auto b = as_long(beta);
      if (b && *b <= 0 && -*b < last)
        fail(ErrorKind::PoleBeforeTermination,
             "lower parameter " + rat_str(beta) + " hits zero before the end");
    }
  }
  Rat sum(0), term(1);
  for (long k = 0;; ++k) {
    sum += term;
    if (k >= last) break;
    Rat den = (h.b[0] + k) * (h.b[1] + k) * (h.b[2] + k) * (k + 1);
    term *= (h.a[0] + k) * (h.a[1] + k) * (h.a[2] + k) * (h.a[3] + k) / den;
  }
  return sum;
}

template <class T>
UV<T> uv_level0(const HypParamsT<T>& p) {
  const auto& a = p.a;
  const auto& b = p.b;
  UV<T> r;
  r.u1 = -(b[0] - a[1]) * (b[0] + b[1] - a[2] - a[3]) /
         (b[0] * (b[2] - a[0] - T(1)));
  r.v1 = -(a[1] * (b[1] - a[2]) * (b[1] - a[3])) /
         (b[0] * b[1] * (b[2] - a[0] - T(1)));
  r.u2 = -(b[1] - a[0]) * (b[0] + b[1] - a[2] - a[3]) /
         (b[1] * (b[2] - a[1] - T(1)));
  r.v2 = -(a[0] * (b[0] - a[2]) * (b[0] - a[3])) /
         (b[0] * b[1] * (b[2] - a[1] - T(1)));
  return r;
}

template <class T>
UV<T> uv_level1(const HypParamsT<T>& p) {
  const auto& a = p.a;
  const auto& b = p.b;
  UV<T> r;
  r.u1 = -(b[0] - a[1]) * (b[0] + b[1] - a[2] - a[3]) /
         (a[0] * (b[2] - a[0] - T(1)));
  r.v1 = -((b[1] - a[2]) * (b[1] - a[3])) / (a[0] * (b[2] - a[0] - T(1)));
  // the alpha0<->alpha1, beta1<->beta2 swap of the first pair
  r.u2 = -(b[1] - a[0]) * (b[1] + b[0] - a[2] - a[3]) /
         (a[1] * (b[2] - a[1] - T(1)));
  r.v2 = -((b[0] - a[2]) * (b[0] - a[3])) / (a[1] * (b[2] - a[1] - T(1)));
  return r;
}

template <class T, class UVF>
static QCoeffs<T> q_combine(const HypParamsT<T>& p, UVF uv) {
  UV<T> base = uv(p);
  UV<T> e1 = uv(p.plus_e1());
  UV<T> e12 = uv(p.plus_e12());
  QCoeffs<T> q;
  q.q1 = base.u1 * e1.u2 + base.v1 + base.u1 * e1.v2 / e12.u1;
  q.q2 = -(base.u1 * e12.v1 * e1.v2) / e12.u1;
  return q;
}

template <class T>
QCoeffs<T> q_level0(const HypParamsT<T>& p) {
  return q_combine<T>(p, uv_level0<T>);
}

template <class T>
QCoeffs<T> q_level1(const HypParamsT<T>& p) {
  return q_combine<T>(p, uv_level1<T>);
}

template <class T>
T q0_level1(const HypParamsT<T>& p) {
  const auto& a = p.a;
  const auto& b = p.b;
  T s = b[0] + b[1] - a[2] - a[3];
  T t1 = (b[0] - a[2] + T(1)) * (b[0] - a[3] + T(1)) * s /
         (a[0] * a[1] * (b[2] - a[0] - T(1)) * (b[2] - a[1] - T(1)) *
          (s + T(2)));
  T t2 = (a[0] * a[1] - b[0] * s) /
         (a[0] * a[1] * (b[2] - a[0] - T(1)) * (b[2] - a[1] - T(1)));
  return t1 + t2;
}

template UV<Rat> uv_level0(const HypParamsT<Rat>&);
template UV<RatFun> uv_level0(const HypParamsT<RatFun>&);
template UV<Rat> uv_level1(const HypParamsT<Rat>&);
template UV<RatFun> uv_level1(const HypParamsT<RatFun>&);
template QCoeffs<Rat> q_level0(const HypParamsT<Rat>&);
template QCoeffs<RatFun> q_level0(const HypParamsT<RatFun>&);
template QCoeffs<Rat> q_level1(const HypParamsT<Rat>&);
template QCoeffs<RatFun> q_level1(const HypParamsT<RatFun>&);
template Rat q0_level1(const HypParamsT<Rat>&);
template RatFun q0_level1(const HypParamsT<RatFun>&);

UV<Rat> uv0(const HypParams& h) { return uv_level0<Rat>(h); }
QCoeffs<Rat> q0_coeffs(const HypParams& h) { return q_level0<Rat>(h); }
UV<Rat> uv1(const HypParams& h) { return uv_level1<Rat>(h); }
Q1Coeffs q1_coeffs(const HypParams& h) {
  QCoeffs<Rat> q = q_level1<Rat>(h);
  return {q.q1, q.q2, q0_level1<Rat>(h)};
}

namespace {

// parameter vector shifted by -n e12 with the index kept symbolic
HypParamsT<RatFun> symbolic_index(const HypParams& h) {
  HypParamsT<RatFun> s;
  Poly n = Poly::variable('n');
  for (int j = 0; j < 4; ++j) s.a[size_t(j)] = RatFun(Poly(h.a[size_t(j)]));
  for (int j = 0; j < 3; ++j) s.b[size_t(j)] = RatFun(Poly(h.b[size_t(j)]));
  RatFun nn{Poly({Rat(0), Rat(1)}, 'n')};
  s.a[0] = s.a[0] - nn;
  s.a[1] = s.a[1] - nn;
  s.b[0] = s.b[0] - nn;
  s.b[1] = s.b[1] - nn;
  return s;
}

}  // namespace

DiffEq2 rc_hat0(const HypParams& alpha_hat) {
  if (alpha_hat.a[0] != 0)
    fail(ErrorKind::Usage, "terminating family needs alpha_0 = 0");
  QCoeffs<RatFun> q = q_level0<RatFun>(symbolic_index(alpha_hat));
  return {q.q1, q.q2};
}

DiffEq2 rc_hat1(const HypParams& alpha) {
  QCoeffs<RatFun> q = q_level1<RatFun>(symbolic_index(alpha));
  return {q.q1, q.q2};
}

Transformed4F3 transform_4f3(const HypParams& h) {
  if (!terminating(h)) fail(ErrorKind::Usage, "transformation needs a terminating series");
  if (!balanced(h))
    fail(ErrorKind::BalanceViolation, "transformation needs a balanced series");
  long n = -as_long(h.a[0]).value();
  Rat a = h.a[1], bb = h.a[2], c = h.a[3];
  Rat d = h.b[0], e = h.b[1], f = h.b[2];
  (void)bb;
  (void)c;
  Transformed4F3 t;
  Rat en = pochhammer(e, n) * pochhammer(f, n);
  if (en == 0) fail(ErrorKind::DegenerateDenominator, "prefactor pole");
  t.prefactor = pochhammer(e - a, n) * pochhammer(f - a, n) / en;
  t.params.a = {h.a[0], a, d - h.a[2], d - h.a[3]};
  t.params.b = {d, a + 1 - n - e, a + 1 - n - f};
  return t;
}

Rat gauss_coeff(const GaussParams& g, long n) {
  Rat den = pochhammer(g.c, n) * pochhammer(Rat(1), n);
  if (den == 0)
    fail(ErrorKind::PoleInCoefficient, "lower parameter pole in a Gauss stream");
  return pochhammer(g.a, n) * pochhammer(g.b, n) / den;
}

Rat product_2f1_coeff(const GaussParams& g1, const GaussParams& g2, long n) {
  Rat acc(0);
  for (long k = 0; k <= n; ++k)
    acc += gauss_coeff(g1, k) * gauss_coeff(g2, n - k);
  return acc;
}

// ---- numeric layer ----

namespace {

constexpr double kPi = 3.14159265358979323846;

bool near_nonpositive_integer(double x, double tol = 1e-9) {
  return x < 0.5 && std::fabs(x - std::round(x)) < tol;
}

// log |Gamma(x)| and the sign of Gamma(x); x must not be a nonpositive integer
double log_abs_gamma(double x, int* sign) {
  if (x > 0) {
    *sign = 1;
    return std::lgamma(x);
  }
  double s = std::sin(kPi * x);
  *sign = s > 0 ? 1 : -1;
  return std::log(kPi / std::fabs(s)) - std::lgamma(1 - x);
}

double term_direct(const std::array<double, 4>& a,
                   const std::array<double, 4>& b, long n) {
  double lg = 0;
  int sign = 1, s = 0;
  for (double aj : a) {
    lg += log_abs_gamma(aj + double(n), &s);
    sign *= s;
  }
  for (double bj : b) {
    if (near_nonpositive_integer(bj + double(n))) return 0.0;  // 1/Gamma = 0
    lg -= log_abs_gamma(bj + double(n), &s);
    sign *= s;
  }
  return sign * std::exp(lg);
}

// series coefficients of prod(1+a_j/N)/prod(1+b_j/N) in 1/N up to order 4
std::array<double, 5> ratio_series(const std::array<double, 4>& a,
                                   const std::array<double, 4>& b) {
  auto elem = [](const std::array<double, 4>& v) {
    std::array<double, 5> e{1, 0, 0, 0, 0};
    for (double x : v)
      for (int k = 4; k >= 1; --k) e[size_t(k)] += e[size_t(k) - 1] * x;
    return e;
  };
  std::array<double, 5> num = elem(a), den = elem(b), out{};
  // divide truncated series
  for (int k = 0; k <= 4; ++k) {
    double c = num[size_t(k)];
    for (int j = 1; j <= k; ++j) c -= den[size_t(j)] * out[size_t(k - j)];
    out[size_t(k)] = c;
  }
  return out;
}

}  // namespace

SumInfo reg_4f3_tilde_at1(const std::array<double, 4>& a,
                          const std::array<double, 4>& b) {
  for (double aj : a)
    if (near_nonpositive_integer(aj))
      fail(ErrorKind::GammaPole, "upper parameter at a Gamma pole");
  double bal = b[0] + b[1] + b[2] + b[3] - a[0] - a[1] - a[2] - a[3];
  if (bal < 1.5 - 1e-9)
    fail(ErrorKind::BalanceViolation, "series is not balanced");

  double minarg = 1e300;
  for (double aj : a) minarg = std::min(minarg, aj);
  for (double bj : b) minarg = std::min(minarg, bj);
  long n_direct = std::max(4L, long(std::ceil(2.0 - minarg)));

  SumInfo info;
  double sum = 0, term = 0;
  long n = 0;
  const long n_switch = 4000, n_max = 1000000;
  int small_streak = 0;
  for (;; ++n) {
    if (n <= n_direct) {
      term = term_direct(a, b, n);
    } else {
      double num = 1, den = 1;
      for (double aj : a) num *= aj + double(n - 1);
      for (double bj : b) den *= bj + double(n - 1);
      term *= num / den;
    }
    sum += term;
    if (n > n_direct) {
      if (std::fabs(term) < 1e-16 * std::fabs(sum))
        ++small_streak;
      else
        small_streak = 0;
      if (small_streak >= 20) break;
    }
    if (n >= n_switch) {
      // exact asymptotic tail: T(N) = t_N g(N) with
      // g(N) = 1 + r(N) g(N+1), r expanded in 1/N
      auto r = ratio_series(a, b);
      double r1 = r[1], r2 = r[2], r3 = r[3], r4 = r[4];
      if (std::fabs(1 + r1) < 1e-9)
        fail(ErrorKind::NonConvergent, "tail exponent too close to -1");
      double g1 = -1.0 / (1 + r1);
      double g0 = -g1 - (r2 / r1) * g1;
      double gm1 = (r2 * (g1 + g0) + r3 * g1) / (1 - r1);
      double gm2 =
          (gm1 * (1 - r1 + r2) + r3 * (g1 + g0) + r4 * g1) / (2 - r1);
      double N = double(n + 1);
      double tN = term;
      {  // t_{n+1} from t_n
        double num = 1, den = 1;
        for (double aj : a) num *= aj + double(n);
        for (double bj : b) den *= bj + double(n);
        tN *= num / den;
      }
      sum += tN * (g1 * N + g0 + gm1 / N + gm2 / (N * N));
      info.tail_accelerated = true;
      break;
    }
    if (n >= n_max) fail(ErrorKind::NonConvergent, "term budget exhausted");
  }
  info.value = sum;
  info.terms = n;
  return info;
}

double y_family(const HypParams& h, int i) {
  if (!balanced(h)) fail(ErrorKind::BalanceViolation, "y family needs balance");
  auto d = [](const Rat& r) { return r.get_d(); };
  std::array<double, 4> A{d(h.a[0]), d(h.a[1]), d(h.a[2]), d(h.a[3])};
  std::array<double, 3> B{d(h.b[0]), d(h.b[1]), d(h.b[2])};
  std::array<double, 4> ta{}, tb{};
  double sign = 1;
  if (i == 0) {
    ta = A;
    tb = {1.0, B[0], B[1], B[2]};
  } else if (i >= 1 && i <= 3) {
    double bi = B[size_t(i) - 1];
    for (int j = 0; j < 4; ++j) ta[size_t(j)] = A[size_t(j)] + 1 - bi;
    tb = {2 - bi, B[0] + 1 - bi, B[1] + 1 - bi, B[2] + 1 - bi};
  } else if (i >= 4 && i <= 7) {
    double ai = A[size_t(i) - 4];
    ta = {ai, ai + 1 - B[0], ai + 1 - B[1], ai + 1 - B[2]};
    for (int j = 0; j < 4; ++j) tb[size_t(j)] = ai + 1 - A[size_t(j)];
    sign = -1;
  } else {
    fail(ErrorKind::Usage, "y index out of range");
  }
  return sign * reg_4f3_tilde_at1(ta, tb).value;
}

double d_ij(const HypParams& h, int i, int j, long n) {
  HypParams s = at_index(h, n);
  return y_family(s, i) - y_family(s, j);
}

HypParams rc1_parameter_list(const ZParams& A, int k) {
  Rat h(1, 2);
  auto E = [&](int e0, int e1, int e2, int e3) -> Rat {
    return (e0 * A.A0 + e1 * A.A1 + e2 * A.A2 + e3 * A.A3 + 1) / 2;
  };
  switch (k) {
    case 1:
      return {{h, A.A0 + h, E(1, -1, -1, -1), E(1, -1, 1, 1)},
              {E(1, -1, -1, 1) + h, E(1, -1, 1, -1) + h, A.A0 + 1}};
    case 2:
      return {{h, A.A2 + h, E(-1, -1, 1, -1), E(1, -1, 1, 1)},
              {E(-1, -1, 1, 1) + h, E(1, -1, 1, -1) + h, A.A2 + 1}};
    case 3:
      return {{A.A0 + h, A.A2 + h, E(1, -1, 1, 1), E(1, -1, 1, -1)},
              {E(1, -1, 1, 1) + h, E(1, -1, 1, -1) + h, A.A0 + A.A2 + 1}};
    case 4:
      return {{A.A2 + h, A.A3 + h, E(1, -1, 1, 1), E(-1, -1, 1, 1)},
              {E(1, -1, 1, 1) + h, E(-1, -1, 1, 1) + h, A.A2 + A.A3 + 1}};
    default:
      fail(ErrorKind::Usage, "k must be 1..4");
  }
}

Rat w_gauge_prefactor(const ZParams& A, int k, long n) {
  Rat h(1, 2);
  Rat nf = pochhammer(1, n);
  switch (k) {
    case 1:
      return pochhammer(h, n) / nf;
    case 2:
      return pochhammer(h, n) * pochhammer(h - A.A2, n) *
             pochhammer(h + A.A2, n) /
             (nf * pochhammer(h - A.A0, n) * pochhammer(h + A.A0, n));
    case 3:
      return pochhammer(h - A.A2, n) * pochhammer(h + A.A2, n) /
             (nf * pochhammer(h, n));
    case 4:
      return pochhammer(h - A.A2, n) * pochhammer(h + A.A2, n) *
             pochhammer(h - A.A3, n) * pochhammer(h + A.A3, n) /
             (nf * pochhammer(h, n) * pochhammer(h - A.A0, n) *
              pochhammer(h + A.A0, n));
    default:
      fail(ErrorKind::Usage, "k must be 1..4");
  }
}

std::vector<double> w_solution(const ZParams& A, int k, int i, int j, int N) {
  if (i == j || i < 0 || i > 7 || j < 0 || j > 7)
    fail(ErrorKind::Usage, "need distinct i, j in 0..7");
  HypParams base = rc1_parameter_list(A, k);
  std::vector<double> out(size_t(N) + 1);
  for (long n = 0; n <= N; ++n)
    out[size_t(n)] = w_gauge_prefactor(A, k, n).get_d() * d_ij(base, i, j, n);
  return out;
}

}  // namespace fuchsia

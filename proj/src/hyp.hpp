#pragma once

#include <array>
#include <vector>

#include "diffeq.hpp"

namespace fuchsia {

Rat pochhammer(const Rat& a, long n);

// Parameter vector of a 4F3 over any commutative field T (exact rationals
// or rational functions in the index).
template <class T>
struct HypParamsT {
  std::array<T, 4> a;  // alpha_0..alpha_3
  std::array<T, 3> b;  // beta_1..beta_3

  HypParamsT plus_e1() const {
    HypParamsT h = *this;
    h.a[0] = h.a[0] + T(1);
    h.b[0] = h.b[0] + T(1);
    return h;
  }
  HypParamsT plus_e2() const {
    HypParamsT h = *this;
    h.a[1] = h.a[1] + T(1);
    h.b[1] = h.b[1] + T(1);
    return h;
  }
  HypParamsT plus_e12(const T& k = T(1)) const {
    HypParamsT h = *this;
    h.a[0] = h.a[0] + k;
    h.a[1] = h.a[1] + k;
    h.b[0] = h.b[0] + k;
    h.b[1] = h.b[1] + k;
    return h;
  }
};

using HypParams = HypParamsT<Rat>;

inline Rat balance(const HypParams& h) {
  return h.b[0] + h.b[1] + h.b[2] - h.a[0] - h.a[1] - h.a[2] - h.a[3];
}
inline bool balanced(const HypParams& h) { return balance(h) == 1; }
bool terminating(const HypParams& h);

// the shifted vector (n; alpha) = -n e12 + alpha
HypParams at_index(const HypParams& h, long n);

// Exact value of the terminating balanced-or-not sum at 1; requires alpha_0
// a nonpositive integer and no lower-parameter pole before termination.
Rat terminating_4f3_at1(const HypParams& h);

// Contiguous-relation coefficients, terminating level:
// F(alpha) = U1 F(alpha+e1) + V1 F(alpha+e12)
// F(alpha) = U2 F(alpha+e2) + V2 F(alpha+e12)
template <class T>
struct UV {
  T u1, v1, u2, v2;
};
template <class T>
UV<T> uv_level0(const HypParamsT<T>& p);
template <class T>
UV<T> uv_level1(const HypParamsT<T>& p);

// Composite three-term coefficients (same combination at both levels):
// F(alpha) = q1 F(alpha+e12) + q2 F(alpha+2 e12)   [+ q0, level 1 only]
template <class T>
struct QCoeffs {
  T q1, q2;
};
template <class T>
QCoeffs<T> q_level0(const HypParamsT<T>& p);
template <class T>
QCoeffs<T> q_level1(const HypParamsT<T>& p);
template <class T>
T q0_level1(const HypParamsT<T>& p);  // the non-homogeneous term

UV<Rat> uv0(const HypParams& h);
QCoeffs<Rat> q0_coeffs(const HypParams& h);
UV<Rat> uv1(const HypParams& h);
struct Q1Coeffs {
  Rat q1, q2, q0;
};
Q1Coeffs q1_coeffs(const HypParams& h);

// D_n = q1(n;alpha) D_{n-1} + q2(n;alpha) D_{n-2} with coefficients as
// rational functions in n (terminating level needs alpha_0 = 0).
DiffEq2 rc_hat0(const HypParams& alpha_hat);
DiffEq2 rc_hat1(const HypParams& alpha);

// Parameter transformation of a terminating balanced series:
// value(h) = prefactor * value(transformed).
struct Transformed4F3 {
  HypParams params;
  Rat prefactor;
};
Transformed4F3 transform_4f3(const HypParams& h);

struct GaussParams {
  Rat a, b, c;
};
// (a)_n (b)_n / ((c)_n n!)
Rat gauss_coeff(const GaussParams& g, long n);
// [X^n] of the product of the two series, by Cauchy convolution
Rat product_2f1_coeff(const GaussParams& g1, const GaussParams& g2, long n);

// ---- non-terminating layer (double precision) ----

// Regularized sum_{n>=0} prod Gamma(a_j+n) / prod Gamma(b_j+n); a
// lower-parameter Gamma pole zeroes its term, an upper-parameter pole
// throws GammaPole. Balanced decay 1/n^2 is summed with an exact
// asymptotic tail so the value is accurate to ~1e-12 relative.
struct SumInfo {
  double value = 0;
  long terms = 0;
  bool tail_accelerated = false;
};
SumInfo reg_4f3_tilde_at1(const std::array<double, 4>& a,
                          const std::array<double, 4>& b);

// y_0..y_7 of the regularized family; index semantics follow the
// definitions used by the solution tables.
double y_family(const HypParams& h, int i);

// y_i(n;alpha) - y_j(n;alpha)
double d_ij(const HypParams& h, int i, int j, long n);

// Gauge-weighted solutions W_{k,ij}(n;A), k = 1..4, for n = 0..N.
struct ZParams {
  Rat A0, A1, A2, A3;
};
HypParams rc1_parameter_list(const ZParams& A, int k);   // sol1..sol4
Rat w_gauge_prefactor(const ZParams& A, int k, long n);  // exact Pochhammer rule
std::vector<double> w_solution(const ZParams& A, int k, int i, int j, int N);

}  // namespace fuchsia

#include "pfaffian.hpp"

#include <array>
#include <functional>

namespace fuchsia {

namespace {

MPoly T(int i) { return MPoly::variable(i); }

MPoly t_sq_m1(int i) { return T(i) * T(i) - MPoly(Rat(1)); }

// D = -1 + t1^2 + t2^2 + t3^2 - 2 t1 t2 t3
MPoly cubic_d() {
  return MPoly(Rat(-1)) + T(0) * T(0) + T(1) * T(1) + T(2) * T(2) -
         MPoly::term(Rat(2), 1, 1, 1);
}

struct BParams {
  Rat a0, b1, b2, b3;
};

using Entry = std::function<MPoly(const BParams&)>;

// quadratic shorthand q_ij = t_i t_j - t_k (indices 0-based)
MPoly q12() { return T(0) * T(1) - T(2); }
MPoly q13() { return T(0) * T(2) - T(1); }
MPoly q23() { return T(1) * T(2) - T(0); }

MPoly p152(const BParams& p) { return -p.b2 * q12() + p.b3 * (T(0) * q13()); }
MPoly p153(const BParams& p) {
  return p.b1 * t_sq_m1(1) - (p.b1 + p.b3) * (T(0) * q23());
}
MPoly p154(const BParams& p) { return p.b2 * q23() - p.b1 * (T(2) * q13()); }
MPoly p155(const BParams& p) {
  return -p.a0 * (t_sq_m1(0) * q23()) + q12() * q13();
}
MPoly p157(const BParams& p) { return -(1 + p.a0) * (q23() * q13()); }

MPoly m181(const BParams& p) {
  return -(p.b2 * p.b3) * (t_sq_m1(0) * q23()) +
         (p.b1 * (p.b2 + p.b3)) * (q12() * q13());
}
MPoly m182(const BParams& p) {
  return p.b3 * (MPoly(Rat(1)) - T(2) * T(2)) +
         p.b2 * (MPoly(Rat(1)) - T(1) * T(1));
}
MPoly m183(const BParams& p) {
  return (p.a0 * p.b1) * (T(1) * q12() * q13()) -
         (p.a0 * p.b3) * (q13() * q23()) +
         p.b1 * (T(2) * t_sq_m1(0) * t_sq_m1(1));
}
MPoly m184(const BParams& p) {
  return (p.a0 * p.b1) * (T(2) * q13() * q12()) -
         (p.a0 * p.b2) * (q12() * q23()) +
         p.b1 * (T(1) * t_sq_m1(0) * t_sq_m1(2));
}
MPoly m185(const BParams& p) {
  MPoly t2mt3t1 = T(1) - T(2) * T(0);
  return p.a0 * t2mt3t1 + p.b3 * t2mt3t1 +
         p.b2 * (T(1) * T(0) * T(0) - T(2) * T(0));
}
MPoly m186(const BParams& p) {
  MPoly t3mt1t2 = T(2) - T(0) * T(1);
  return p.a0 * t3mt1t2 + p.b3 * (T(0) * T(0) * T(2) - T(0) * T(1)) +
         p.b2 * t3mt1t2;
}
MPoly m187(const BParams& p) {
  return (p.a0 * p.a0) * (q23() * q13() * q12()) -
         (p.a0 + p.b2 + p.b3) * (T(0) * q23() * cubic_d()) +
         p.b1 * (t_sq_m1(0) * cubic_d()) +
         t_sq_m1(0) * t_sq_m1(1) * t_sq_m1(2);
}
MPoly m188(const BParams& p) {
  MPoly bracket = MPoly::term(Rat(-1), 1, 2, 0) + MPoly::term(Rat(2), 0, 1, 1) +
                  MPoly::term(Rat(-1), 1, 0, 2) + MPoly::term(Rat(1), 3, 0, 0) +
                  MPoly::term(Rat(-1), 1, 0, 0);
  return p.a0 * bracket + Rat(2) * (t_sq_m1(0) * q23());
}

// sigma_{23}, sigma_{12}, sigma_{13} act on (t, b) jointly
struct Sigma {
  std::array<int, 3> perm;  // variable permutation (slot v -> slot perm[v])
  BParams apply(const BParams& p) const {
    Rat b[3] = {p.b1, p.b2, p.b3};
    Rat nb[3];
    for (int v = 0; v < 3; ++v) nb[perm[size_t(v)]] = b[v];
    return {p.a0, nb[0], nb[1], nb[2]};
  }
  MPoly operator()(const Entry& e, const BParams& p) const {
    return e(apply(p)).permute_vars(perm);
  }
};

const Sigma s23{{0, 2, 1}};
const Sigma s12{{1, 0, 2}};
const Sigma s13{{2, 1, 0}};

}  // namespace

PfaffianForm build_omega8(const Rat& a0, const Rat& a1, const Rat& a2,
                          const Rat& a3) {
  BParams p{a0, (-a1 + a2 + a3) / 2, (a1 - a2 + a3) / 2, (a1 + a2 - a3) / 2};
  PfaffianForm w;
  w.size = 8;
  w.nvars = 3;
  MPoly D = cubic_d();
  w.den = {t_sq_m1(0) * D, t_sq_m1(1) * D, t_sq_m1(2) * D};
  w.num.assign(3, std::vector<std::vector<MPoly>>(
                      8, std::vector<MPoly>(8, MPoly())));

  // entries are written over the displayed denominators; `over` is the
  // displayed one so the numerator is scaled by den[v]/over
  auto set = [&](int v, int r, int c, const MPoly& numer, const MPoly& over) {
    // den[v] = over * cof exactly, with cof a product of the declared factors
    MPoly cof(Rat(1));
    if (over == MPoly(Rat(1)))
      cof = w.den[size_t(v)];
    else if (over == t_sq_m1(v))
      cof = D;
    else if (over == D)
      cof = t_sq_m1(v);
    w.num[size_t(v)][size_t(r)][size_t(c)] = numer * cof;
  };
  const MPoly one(Rat(1));

  // ---- M1 ----
  {
    int v = 0;
    MPoly tv = t_sq_m1(0), tvD = tv * D;
    set(v, 0, 1, one, one);
    set(v, 1, 0, MPoly(p.b1), tv);
    set(v, 1, 1, T(0) * p.a0, tv);
    set(v, 1, 4, -q12(), tv);
    set(v, 1, 5, -q13(), tv);
    set(v, 1, 6, q23(), tv);
    set(v, 2, 4, one, one);
    set(v, 3, 5, one, one);
    set(v, 4, 1, p152(p), tvD);
    set(v, 4, 2, p153(p), tvD);
    set(v, 4, 3, p154(p), tvD);
    set(v, 4, 4, p155(p), tvD);
    set(v, 4, 5, one, tv);
    set(v, 4, 6, p157(p), tvD);
    set(v, 4, 7, T(1) - T(2) * T(0), tvD);
    set(v, 5, 1, s23(p152, p), tvD);
    set(v, 5, 2, s23(p154, p), tvD);
    set(v, 5, 3, s23(p153, p), tvD);
    set(v, 5, 4, one, tv);
    set(v, 5, 5, s23(p155, p), tvD);
    set(v, 5, 6, s23(p157, p), tvD);
    set(v, 5, 7, -q12(), tvD);
    set(v, 6, 7, one, D);
    set(v, 7, 0, m181(p), tvD);
    set(v, 7, 1, m182(p), D);
    set(v, 7, 2, m183(p), tvD);
    set(v, 7, 3, m184(p), tvD);
    set(v, 7, 4, m185(p), tv);
    set(v, 7, 5, m186(p), tv);
    set(v, 7, 6, m187(p), tvD);
    set(v, 7, 7, m188(p), tvD);
  }
  // ---- M2 ----
  {
    int v = 1;
    MPoly tv = t_sq_m1(1), tvD = tv * D;
    set(v, 0, 2, one, one);
    set(v, 1, 4, one, one);
    set(v, 2, 0, MPoly(p.b2), tv);
    set(v, 2, 2, T(1) * p.a0, tv);
    set(v, 2, 4, -q12(), tv);
    set(v, 2, 5, q13(), tv);
    set(v, 2, 6, -q23(), tv);
    set(v, 3, 6, one, one);
    set(v, 4, 1, s12(p153, p), tvD);
    set(v, 4, 2, s12(p152, p), tvD);
    set(v, 4, 3, s12(p154, p), tvD);
    set(v, 4, 4, s12(p155, p), tvD);
    set(v, 4, 5, s12(p157, p), tvD);
    set(v, 4, 6, one, tv);
    set(v, 4, 7, -q23(), tvD);
    set(v, 5, 7, one, D);
    set(v, 6, 1, s12([](const BParams& q) { return s23(p154, q); }, p), tvD);
    set(v, 6, 2, s12([](const BParams& q) { return s23(p152, q); }, p), tvD);
    set(v, 6, 3, s12([](const BParams& q) { return s23(p153, q); }, p), tvD);
    set(v, 6, 4, one, tv);
    set(v, 6, 5, s12([](const BParams& q) { return s23(p157, q); }, p), tvD);
    set(v, 6, 6, s12([](const BParams& q) { return s23(p155, q); }, p), tvD);
    set(v, 6, 7, -q12(), tvD);
    set(v, 7, 0, s12(m181, p), tvD);
    set(v, 7, 1, s12(m183, p), tvD);
    set(v, 7, 2, s12(m182, p), D);
    set(v, 7, 3, s12(m184, p), tvD);
    set(v, 7, 4, s12(m185, p), tv);
    set(v, 7, 5, s12(m187, p), tvD);
    set(v, 7, 6, s12(m186, p), tv);
    set(v, 7, 7, s12(m188, p), tvD);
  }
  // ---- M3 ----
  {
    int v = 2;
    MPoly tv = t_sq_m1(2), tvD = tv * D;
    set(v, 0, 3, one, one);
    set(v, 1, 5, one, one);
    set(v, 2, 6, one, one);
    set(v, 3, 0, MPoly(p.b3), tv);
    set(v, 3, 3, T(2) * p.a0, tv);
    set(v, 3, 4, q12(), tv);
    set(v, 3, 5, -q13(), tv);
    set(v, 3, 6, -q23(), tv);
    set(v, 4, 7, one, D);
    set(v, 5, 1, s13([](const BParams& q) { return s23(p153, q); }, p), tvD);
    set(v, 5, 2, s13([](const BParams& q) { return s23(p154, q); }, p), tvD);
    set(v, 5, 3, s13([](const BParams& q) { return s23(p152, q); }, p), tvD);
    set(v, 5, 4, s13([](const BParams& q) { return s23(p157, q); }, p), tvD);
    set(v, 5, 5, s13([](const BParams& q) { return s23(p155, q); }, p), tvD);
    set(v, 5, 6, one, tv);
    set(v, 5, 7, -q23(), tvD);
    set(v, 6, 1, s13(p154, p), tvD);
    set(v, 6, 2, s13(p153, p), tvD);
    set(v, 6, 3, s13(p152, p), tvD);
    set(v, 6, 4, s13(p157, p), tvD);
    set(v, 6, 5, one, tv);
    set(v, 6, 6, s13(p155, p), tvD);
    set(v, 6, 7, -q13(), tvD);
    set(v, 7, 0, s13(m181, p), tvD);
    set(v, 7, 1, s13(m184, p), tvD);
    set(v, 7, 2, s13(m183, p), tvD);
    set(v, 7, 3, s13(m182, p), D);
    set(v, 7, 4, s13(m187, p), tvD);
    set(v, 7, 5, s13(m186, p), tv);
    set(v, 7, 6, s13(m185, p), tv);
    set(v, 7, 7, s13(m188, p), tvD);
  }
  return w;
}

PfaffianForm build_omega6(const Rat& a0, const Rat& a1, const Rat& a2,
                          const Rat& a3) {
  BParams p{a0, (-a1 + a2 + a3) / 2, (a1 - a2 + a3) / 2, (a1 + a2 - a3) / 2};
  const Rat &b1 = p.b1, &b2 = p.b2, &b3 = p.b3;
  PfaffianForm w;
  w.size = 6;
  w.nvars = 2;
  MPoly dt = T(0) - T(1);  // t1 - t2
  w.den = {t_sq_m1(0) * dt, t_sq_m1(1) * dt};
  w.num.assign(2, std::vector<std::vector<MPoly>>(
                      6, std::vector<MPoly>(6, MPoly())));
  auto set = [&](int v, int r, int c, const MPoly& numer, const MPoly& over) {
    MPoly cof(Rat(1));
    if (over == MPoly(Rat(1)))
      cof = w.den[size_t(v)];
    else if (over == t_sq_m1(v))
      cof = dt;
    else if (over == dt)
      cof = t_sq_m1(v);
    w.num[size_t(v)][size_t(r)][size_t(c)] = numer * cof;
  };
  const MPoly one(Rat(1));

  // ---- N1 ----
  {
    int v = 0;
    MPoly tv = t_sq_m1(0), tvdt = tv * dt;
    set(v, 0, 1, one, one);
    set(v, 1, 3, one, dt);
    set(v, 2, 4, one, dt);
    MPoly n142 = -a0 * (T(0) + T(1)) - (a0 * a0) * T(0) + (b1 - b3) * dt;
    MPoly n144 = T(0) * T(0) + Rat(2) * (T(0) * T(1)) - MPoly(Rat(3)) +
                 a0 * (Rat(2) * (T(0) * T(0)) - T(0) * T(1) - MPoly(Rat(1)));
    MPoly n145 = Rat(2) * (T(1) * T(1) - MPoly(Rat(1))) -
                 a0 * (T(0) * T(0) - Rat(2) * (T(0) * T(1)) + MPoly(Rat(1)));
    set(v, 3, 0, MPoly(-b1 * (2 + a0)), tv);
    set(v, 3, 1, n142, tv);
    set(v, 3, 2, Rat(-(b1 + b3)) * dt, tv);
    set(v, 3, 3, n144, tvdt);
    set(v, 3, 4, n145, tvdt);
    set(v, 3, 5,
        MPoly(Rat(1)) - Rat(2) * (T(0) * T(1)) + T(0) * T(0), tvdt);
    set(v, 4, 4, one, dt);
    set(v, 4, 5, one, dt);
    MPoly n161 = MPoly((2 + a0) * b1 - (b1 + b2) * (b1 + b3));
    MPoly n162 = (-a0 * (b1 + b3)) * (T(0) * dt) +
                 (a0 * (2 + a0)) * (T(0) * dt) -
                 (a0 * b2) * (MPoly(Rat(1)) - Rat(2) * (T(0) * T(1)) + T(0) * T(0)) +
                 (2 * b2) * (T(1) * T(1) - MPoly(Rat(1))) +
                 (2 * b3) * (dt * dt);
    MPoly n163 = (-a0 * b3) * (T(1) * dt) + (2 * b3) * (dt * dt) +
                 (2 * b1) * (MPoly(Rat(1)) - Rat(2) * (T(0) * T(1)) + T(0) * T(0)) +
                 (a0 * b1) * (MPoly(Rat(1)) - T(0) * T(1));
    MPoly n164 = MPoly(Rat(2)) - Rat(2) * (T(0) * T(0)) +
                 a0 * (MPoly(Rat(1)) - T(0) * T(0)) +
                 (2 * b3) * (T(0) * dt) +
                 b2 * (MPoly(Rat(1)) - Rat(2) * (T(0) * T(1)) + T(0) * T(0)) -
                 b1 * (MPoly(Rat(1)) - T(0) * T(0));
    MPoly n165 = MPoly(Rat(2)) - Rat(2) * (T(1) * T(1)) +
                 a0 * (Rat(3) * (T(0) * T(0)) - Rat(4) * (T(0) * T(1)) -
                       T(1) * T(1) + MPoly(Rat(2))) +
                 (a0 * a0) * (MPoly(Rat(1)) - T(0) * T(1)) +
                 b3 * (T(0) * T(0) - T(1) * T(1)) +
                 b1 * (T(0) * T(0) + T(1) * T(1) - MPoly(Rat(2)));
    MPoly n166 = Rat(-2) * (T(0) * T(0)) + Rat(4) * (T(0) * T(1)) -
                 MPoly(Rat(2)) +
                 a0 * (T(0) * T(0) + T(0) * T(1) - MPoly(Rat(2)));
    set(v, 5, 0, n161, tv);
    set(v, 5, 1, n162, tvdt);
    set(v, 5, 2, n163, tvdt);
    set(v, 5, 3, n164, tvdt);
    set(v, 5, 4, n165, tvdt);
    set(v, 5, 5, n166, tvdt);
  }
  // ---- N2 ----
  {
    int v = 1;
    MPoly tv = t_sq_m1(1), tvdt = tv * dt;
    set(v, 0, 2, one, one);
    set(v, 1, 4, one, dt);
    set(v, 2, 0, MPoly(b1 + b2), tv);
    set(v, 2, 1, T(0) * a0, tv);
    set(v, 2, 2, T(1) * a0, tv);
    set(v, 2, 3, -(T(0) * T(0) - MPoly(Rat(1))), tvdt);
    set(v, 2, 4, Rat(2) * (MPoly(Rat(1)) - T(0) * T(1)), tvdt);
    set(v, 3, 3, -one, dt);
    set(v, 3, 5, -one, dt);
    MPoly n252 = ((2 + a0) * a0) * T(0) + (b2 + b3) * dt;
    MPoly n255 = -(T(1) * T(1)) - Rat(2) * (T(0) * T(1)) + MPoly(Rat(3)) +
                 a0 * (T(0) * T(0) - T(1) * T(1) + MPoly(Rat(1)) -
                       T(0) * T(1));
    set(v, 4, 0, MPoly(b1 * (2 + a0)), tv);
    set(v, 4, 1, n252, tv);
    set(v, 4, 2, (b1 + b3) * dt, tv);
    set(v, 4, 3, Rat(-(2 + a0)) * (T(0) * T(0) - MPoly(Rat(1))), tvdt);
    set(v, 4, 4, n255, tvdt);
    set(v, 4, 5, -(T(0) * T(0) - MPoly(Rat(1))), tvdt);
    MPoly n261 = MPoly((2 + a0) * a0 * b1 + (b1 + b3) * (b1 + b2));
    MPoly n262 = ((2 + a0) * a0 * a0) * (T(0) * dt) +
                 (a0 * b1) * (T(0) * dt) +
                 (a0 * b2) * (MPoly(Rat(1)) - Rat(2) * (T(0) * T(1)) + T(0) * T(0)) +
                 (a0 * b3) * (Rat(2) * (T(0) * T(0)) - Rat(3) * (T(0) * T(1)) +
                              T(1) * T(1)) +
                 (2 * b2) * (MPoly(Rat(1)) - T(1) * T(1));
    MPoly n263 = (a0 * b3) * (T(0) * dt) -
                 (2 * b1) * (MPoly(Rat(1)) - T(1) * T(1)) +
                 (a0 * b1) * (T(1) * T(1) + T(0) * T(0) - MPoly(Rat(1)) -
                              T(0) * T(1));
    MPoly n264 = (2 * a0 + a0 * a0 + b1 + b3) * (MPoly(Rat(1)) - T(0) * T(0)) -
                 (b2 + b3) * (MPoly(Rat(1)) - T(1) * T(1));
    MPoly n265 = a0 * (T(1) * T(1) - Rat(2) * (T(0) * T(1)) + MPoly(Rat(1))) +
                 (a0 * a0) * (T(0) * dt) - (2 * b3) * (T(1) * dt) +
                 (2 * b1) * (MPoly(Rat(1)) - T(0) * T(1));
    MPoly n266 = Rat(-2) * (T(1) * T(1) - MPoly(Rat(1))) +
                 a0 * (MPoly(Rat(2)) - T(0) * T(0) - T(1) * T(1));
    set(v, 5, 0, n261, tv);
    set(v, 5, 1, n262, tvdt);
    set(v, 5, 2, n263, tvdt);
    set(v, 5, 3, n264, tvdt);
    set(v, 5, 4, n265, tvdt);
    set(v, 5, 5, n266, tvdt);
  }
  return w;
}

namespace {

using Mat = std::vector<std::vector<MPoly>>;

Mat mat_mul(const Mat& a, const Mat& b) {
  size_t n = a.size();
  Mat c(n, std::vector<MPoly>(n, MPoly()));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < n; ++j) {
        if (b[k][j].is_zero()) continue;
        c[i][j] = c[i][j] + a[i][k] * b[k][j];
      }
    }
  return c;
}

Mat curl_lhs(const PfaffianForm& w, int i, int j) {
  // d_i^2 (dP_j/dt_i d_j - P_j dd_j/dt_i) - d_j^2 (dP_i/dt_j d_i - P_i dd_i/dt_j)
  size_t n = size_t(w.size);
  const Mat &Pi = w.num[size_t(i)], &Pj = w.num[size_t(j)];
  const MPoly &di = w.den[size_t(i)], &dj = w.den[size_t(j)];
  MPoly ddj = dj.partial(i), ddi = di.partial(j);
  MPoly di2 = di * di, dj2 = dj * dj;
  Mat out(n, std::vector<MPoly>(n, MPoly()));
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) {
      MPoly a = Pj[r][c].partial(i) * dj - Pj[r][c] * ddj;
      MPoly b = Pi[r][c].partial(j) * di - Pi[r][c] * ddi;
      out[r][c] = di2 * a - dj2 * b;
    }
  return out;
}

}  // namespace

bool check_integrability(const PfaffianForm& w) {
  for (int i = 0; i < w.nvars; ++i)
    for (int j = i + 1; j < w.nvars; ++j) {
      Mat lhs = curl_lhs(w, i, j);
      Mat ab = mat_mul(w.num[size_t(i)], w.num[size_t(j)]);
      Mat ba = mat_mul(w.num[size_t(j)], w.num[size_t(i)]);
      MPoly didj = w.den[size_t(i)] * w.den[size_t(j)];
      for (size_t r = 0; r < size_t(w.size); ++r)
        for (size_t c = 0; c < size_t(w.size); ++c)
          if (lhs[r][c] != didj * (ab[r][c] - ba[r][c])) return false;
    }
  return true;
}

bool d_omega_nonzero(const PfaffianForm& w) {
  for (int i = 0; i < w.nvars; ++i)
    for (int j = i + 1; j < w.nvars; ++j) {
      Mat lhs = curl_lhs(w, i, j);
      for (const auto& row : lhs)
        for (const MPoly& e : row)
          if (!e.is_zero()) return true;
    }
  return false;
}

}  // namespace fuchsia

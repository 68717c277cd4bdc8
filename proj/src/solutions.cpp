#include "catalog.hpp"

namespace fuchsia {

namespace {

using Stream = std::vector<Rat>;

// coefficients of (1-x)^lambda up to x^N
Stream binom_series(const Rat& lambda, int N) {
  Stream c(size_t(N) + 1);
  c[0] = 1;
  for (int k = 1; k <= N; ++k)
    c[size_t(k)] = c[size_t(k) - 1] * (-(lambda - (k - 1))) / k;
  return c;
}

Stream mul_trunc(const Stream& a, const Stream& b) {
  int N = static_cast<int>(a.size()) - 1;
  Stream c(size_t(N) + 1, Rat(0));
  for (int i = 0; i <= N; ++i) {
    if (a[size_t(i)] == 0) continue;
    for (int j = 0; i + j <= N; ++j) c[size_t(i + j)] += a[size_t(i)] * b[size_t(j)];
  }
  return c;
}

struct P4 {
  Rat A0, A1, A2, A3;
  Rat E(int e0, int e1, int e2, int e3) const {
    return (e0 * A0 + e1 * A1 + e2 * A2 + e3 * A3 + 1) / 2;
  }
};

Rat poch(const Rat& a, long n) { return pochhammer(a, n); }

// prefactor(n) * 4F3(shifted at n) streams; `tops`/`bots` are the Pochhammer
// factors of the prefactor, `f` the base parameter list of the terminating
// sum with alpha_0 = alpha_1 = 0 slots already holding -n shifts
Stream sum_4f3_stream(const std::vector<Rat>& tops, const std::vector<Rat>& bots,
                      const HypParams& base, int N) {
  Stream c(size_t(N) + 1);
  for (long n = 0; n <= N; ++n) {
    Rat pre(1);
    for (const Rat& t : tops) pre *= poch(t, n);
    for (const Rat& b : bots) {
      Rat q = poch(b, n);
      if (q == 0) fail(ErrorKind::DegenerateParams, "prefactor pole");
      pre /= q;
    }
    c[size_t(n)] = pre * terminating_4f3_at1(at_index(base, n));
  }
  return c;
}

// prefactor(n) * [X^n] 2F1 * 2F1 streams
Stream product_stream(const std::vector<Rat>& tops, const std::vector<Rat>& bots,
                      const GaussParams& g1, const GaussParams& g2, int N) {
  Stream c(size_t(N) + 1);
  for (long n = 0; n <= N; ++n) {
    Rat pre(1);
    for (const Rat& t : tops) pre *= poch(t, n);
    for (const Rat& b : bots) {
      Rat q = poch(b, n);
      if (q == 0) fail(ErrorKind::DegenerateParams, "prefactor pole");
      pre /= q;
    }
    c[size_t(n)] = pre * product_2f1_coeff(g1, g2, n);
  }
  return c;
}

// f^(0,0)(A;x), the holomorphic stream at 0 for the order-4 operator
Stream z00_stream(const P4& A, int N, int variant) {
  switch (variant) {
    case 0: {
      HypParams base{{Rat(0), A.A0, A.E(-1, 1, -1, 1), A.E(-1, 1, 1, -1)},
                     {A.E(1, 1, -1, -1), A.E(1, 1, 1, 1), 1 - A.A0}};
      return sum_4f3_stream({A.E(-1, -1, -1, -1), A.E(-1, -1, 1, 1)},
                            {Rat(1), Rat(3, 2) - A.A0}, base, N);
    }
    case 1: {
      HypParams base{{Rat(0), A.A0 - A.A2, A.E(-1, 1, -1, 1), A.E(-1, 1, -1, -1)},
                     {A.E(1, 1, -1, -1), A.E(1, 1, -1, 1), 1 - A.A0 - A.A2}};
      return sum_4f3_stream(
          {1 - A.A0 - A.A2, A.E(-1, -1, 1, -1), A.E(-1, -1, 1, 1)},
          {Rat(1), 1 - A.A0, Rat(3, 2) - A.A0}, base, N);
    }
    case 2:
      return product_stream({1 - A.A0}, {Rat(3, 2) - A.A0},
                            {A.E(-1, 1, -1, 1), A.E(-1, 1, 1, -1), 1 - A.A0},
                            {A.E(-1, -1, -1, -1), A.E(-1, -1, 1, 1), 1 - A.A0},
                            N);
    case 3:
      return product_stream(
          {1 - A.A0 - A.A2, 1 - A.A0 + A.A2}, {1 - A.A0, Rat(3, 2) - A.A0},
          {A.E(-1, 1, -1, 1), A.E(-1, 1, -1, -1), 1 - A.A0 - A.A2},
          {A.E(-1, -1, 1, -1), A.E(-1, -1, 1, 1), 1 - A.A0 + A.A2}, N);
    default:
      fail(ErrorKind::Usage, "variant out of range");
  }
}

// f^(inf,+A2)(A;x) reciprocal-coordinate stream
Stream zinf_stream(const P4& A, int N, int variant) {
  Rat h(1, 2);
  switch (variant) {
    case 0: {
      HypParams base{{Rat(0), -A.A2, A.E(-1, 1, 1, 1), A.E(1, 1, 1, -1)},
                     {A.E(-1, 1, -1, -1), A.E(1, 1, -1, 1), 1 + A.A2}};
      return sum_4f3_stream({h + A.A2, A.E(-1, -1, 1, -1), A.E(1, -1, 1, 1)},
                            {Rat(1), 1 + A.A2 - A.A3, 1 + A.A2 + A.A3}, base,
                            N);
    }
    case 1: {
      HypParams base{{Rat(0), -A.A0 - A.A2, A.E(-1, 1, 1, 1), A.E(-1, 1, 1, -1)},
                     {A.E(-1, 1, -1, -1), A.E(-1, 1, -1, 1), 1 - A.A0 + A.A2}};
      return sum_4f3_stream(
          {h + A.A2, 1 - A.A0 + A.A2, A.E(1, -1, 1, 1), A.E(1, -1, 1, -1)},
          {Rat(1), 1 + A.A2, 1 + A.A2 - A.A3, 1 + A.A2 + A.A3}, base, N);
    }
    case 2: {
      HypParams base{{Rat(0), -A.A2 - A.A3, A.E(1, 1, 1, -1), A.E(-1, 1, 1, -1)},
                     {A.E(-1, 1, -1, -1), A.E(1, 1, -1, -1), 1 + A.A2 - A.A3}};
      return sum_4f3_stream({h + A.A2, A.E(-1, -1, 1, 1), A.E(1, -1, 1, 1)},
                            {Rat(1), 1 + A.A2, 1 + A.A2 + A.A3}, base, N);
    }
    case 3:
      return product_stream({h + A.A2, 1 + A.A2},
                            {1 + A.A2 - A.A3, 1 + A.A2 + A.A3},
                            {A.E(-1, 1, 1, 1), A.E(1, 1, 1, -1), 1 + A.A2},
                            {A.E(1, -1, 1, 1), A.E(-1, -1, 1, -1), 1 + A.A2},
                            N);
    case 4:
      return product_stream(
          {h + A.A2, 1 - A.A0 + A.A2, 1 + A.A0 + A.A2},
          {1 + A.A2, 1 + A.A2 - A.A3, 1 + A.A2 + A.A3},
          {A.E(-1, 1, 1, 1), A.E(-1, 1, 1, -1), 1 - A.A0 + A.A2},
          {A.E(1, -1, 1, 1), A.E(1, -1, 1, -1), 1 + A.A0 + A.A2}, N);
    case 5:
      return product_stream(
          {h + A.A2}, {1 + A.A2},
          {A.E(1, 1, 1, -1), A.E(-1, 1, 1, -1), 1 + A.A2 - A.A3},
          {A.E(1, -1, 1, 1), A.E(-1, -1, 1, 1), 1 + A.A2 + A.A3}, N);
    default:
      fail(ErrorKind::Usage, "variant out of range");
  }
}

// f_Q^(0,0)(A;x) stream
Stream q00_stream(const P4& A, int N, int variant) {
  switch (variant) {
    case 0: {
      HypParams base{{Rat(0), A.A0 - A.A2, A.E(1, -1, 1, -1), A.E(1, -1, 1, 1)},
                     {A.E(1, -1, -1, -1), A.E(1, -1, -1, 1), 1 + A.A0 + A.A2}};
      return sum_4f3_stream(
          {1 + 2 * A.A2, A.E(-1, 1, 1, 1), A.E(-1, 1, 1, -1)},
          {1 + A.A2, 1 - A.A0 + A.A2, Rat(1)}, base, N);
    }
    case 1: {
      HypParams base{{Rat(0), -A.A2 + A.A3, A.E(-1, -1, 1, 1), A.E(1, -1, 1, 1)},
                     {A.E(-1, -1, -1, 1), A.E(1, -1, -1, 1), 1 + A.A2 + A.A3}};
      return sum_4f3_stream(
          {1 + 2 * A.A2, 1 + A.A2 + A.A3, A.E(1, 1, 1, -1), A.E(-1, 1, 1, -1)},
          {1 + A.A2, 1 - A.A0 + A.A2, 1 + A.A0 + A.A2, Rat(1)}, base, N);
    }
    case 2: {
      HypParams base{{Rat(0), -A.A2, A.E(-1, -1, 1, 1), A.E(1, -1, 1, -1)},
                     {A.E(-1, -1, -1, -1), A.E(1, -1, -1, 1), 1 + A.A2}};
      return sum_4f3_stream(
          {1 + 2 * A.A2, A.E(1, 1, 1, 1), A.E(-1, 1, 1, -1)},
          {1 - A.A0 + A.A2, 1 + A.A0 + A.A2, Rat(1)}, base, N);
    }
    case 3:
      return product_stream(
          {1 + 2 * A.A2}, {1 + A.A2},
          {A.E(-1, 1, 1, 1), A.E(-1, 1, 1, -1), 1 - A.A0 + A.A2},
          {A.E(1, -1, 1, -1), A.E(1, -1, 1, 1), 1 + A.A0 + A.A2}, N);
    case 4:
      return product_stream(
          {1 + 2 * A.A2, 1 + A.A2 + A.A3, 1 + A.A2 - A.A3},
          {1 + A.A2, 1 - A.A0 + A.A2, 1 + A.A0 + A.A2},
          {A.E(1, 1, 1, -1), A.E(-1, 1, 1, -1), 1 + A.A2 - A.A3},
          {A.E(-1, -1, 1, 1), A.E(1, -1, 1, 1), 1 + A.A2 + A.A3}, N);
    case 5:
      return product_stream(
          {1 + A.A2, 1 + 2 * A.A2}, {1 - A.A0 + A.A2, 1 + A.A0 + A.A2},
          {A.E(1, 1, 1, 1), A.E(-1, 1, 1, -1), 1 + A.A2},
          {A.E(-1, -1, 1, 1), A.E(1, -1, 1, -1), 1 + A.A2}, N);
    default:
      fail(ErrorKind::Usage, "variant out of range");
  }
}

// f_Q^(0,+)(A;x) stream (exponent A0 - A2)
Stream q0p_stream(const P4& A, int N, int variant) {
  switch (variant) {
    case 0:
      return product_stream(
          {1 + A.A0 + A.A2}, {1 + A.A0},
          {A.E(1, -1, -1, 1), A.E(1, -1, -1, -1), 1 + A.A0 - A.A2},
          {A.E(1, 1, 1, 1), A.E(1, 1, 1, -1), 1 + A.A0 + A.A2}, N);
    case 1:
      return product_stream(
          {1 + A.A0 - A.A3, 1 + A.A0 + A.A3}, {1 + A.A0, 1 + A.A0 - A.A2},
          {A.E(1, -1, -1, 1), A.E(1, -1, 1, 1), 1 + A.A0 + A.A3},
          {A.E(1, 1, -1, -1), A.E(1, 1, 1, -1), 1 + A.A0 - A.A3}, N);
    case 2:
      return product_stream({1 + A.A0}, {1 + A.A0 - A.A2},
                            {A.E(1, -1, 1, -1), A.E(1, -1, -1, 1), 1 + A.A0},
                            {A.E(1, 1, -1, -1), A.E(1, 1, 1, 1), 1 + A.A0},
                            N);
    default:
      fail(ErrorKind::Usage, "variant out of range");
  }
}

struct DFParams {
  Rat a, b, c, g;
};

// inner stream of f_DF^(0,0)/(1-x)^(b+c+1)
Stream df00_inner(const DFParams& d, int N, int variant) {
  const Rat &a = d.a, &b = d.b, &c = d.c, &g = d.g;
  Rat g2 = g / 2;
  switch (variant) {
    case 0:
      return product_stream({-a - c - g}, {-a - c - g2},
                            {-c, -a - b - c - g2 - 1, -a - c},
                            {b + 1, -a - g2, -a - c - g}, N);
    case 1:
      return product_stream({-2 * a - b - c - g - 1, b - c + 1},
                            {-a - c, -a - c - g2},
                            {-c, -c - g2, b - c + 1},
                            {-a, -a - g2, -2 * a - b - c - g - 1}, N);
    case 2:
      return product_stream({-a - c - g2}, {-a - c},
                            {-c, -a - b - c - g - 1, -a - c - g2},
                            {b + 1, -a, -a - c - g2}, N);
    default:
      fail(ErrorKind::Usage, "variant out of range");
  }
}

// inner stream of f_DF^(0,1)/x^(a+c+1)(1-x)^(b+c+1)
Stream df01_inner(const DFParams& d, int N, int variant) {
  const Rat &a = d.a, &b = d.b, &c = d.c, &g = d.g;
  Rat g2 = g / 2;
  switch (variant) {
    case 0:
      return product_stream({1 - g}, {1 - g2},
                            {b + 1, -a - g2, -a - c - g},
                            {a + 1, -b - g2, a + c + 2}, N);
    case 1:
      return product_stream({1 - g, a + b + 2, -a - b - g},
                            {1 - g2, -a - c - g, a + c + 2},
                            {c + 1, -a - g2, -a - b - g},
                            {a + 1, -c - g2, a + b + 2}, N);
    case 2:
      return product_stream({1 - g2, 1 - g}, {-a - c - g, a + c + 2},
                            {a + 1, -a - b - c - g - 1, 1 - g2},
                            {b + 1, c + 1, 1 - g2}, N);
    default:
      fail(ErrorKind::Usage, "variant out of range");
  }
}

Stream df00_stream(const DFParams& d, int N, int variant) {
  return mul_trunc(binom_series(d.b + d.c + 1, N), df00_inner(d, N, variant));
}

Stream df01_stream(const DFParams& d, int N, int variant) {
  return mul_trunc(binom_series(d.b + d.c + 1, N), df01_inner(d, N, variant));
}

Rat need(const ParamMap& m, const std::string& k) {
  auto it = m.find(k);
  if (it == m.end()) fail(ErrorKind::MissingParam, "missing parameter " + k);
  return it->second;
}

P4 p4_of(const ParamMap& m) {
  Params p = Params::from_map(m);
  return {p.A0, p.A1, p.A2, p.A3};
}

DFParams df_of(const ParamMap& m) {
  return {need(m, "a"), need(m, "b"), need(m, "c"), need(m, "g")};
}

}  // namespace

FrobSeries solution_family(const std::string& name, const ParamMap& params,
                           int N, int variant) {
  auto bad_variant = [&](int count) {
    if (variant < 0 || variant >= count)
      fail(ErrorKind::Usage, "variant out of range for " + name);
  };
  auto A = [&]() { return p4_of(params); };
  auto D = [&]() { return df_of(params); };
  FrobSeries s;
  s.base = PointAt::finite(0);

  if (name == "Z.00") {
    bad_variant(4);
    s.rho = 0;
    s.c = z00_stream(A(), N, variant);
  } else if (name == "Z.02A0") {
    bad_variant(4);
    P4 a = A();
    s.rho = 2 * a.A0;
    a.A0 = -a.A0;
    s.c = z00_stream(a, N, variant);
  } else if (name == "Z.1+A1" || name == "Z.1-A1") {
    bad_variant(4);
    P4 a = A();
    bool plus = name == "Z.1+A1";
    s.base = PointAt::finite(1);
    s.rho = plus ? Rat(Rat(1, 2) + a.A1) : Rat(Rat(1, 2) - a.A1);
    P4 swapped{plus ? -a.A1 : a.A1, a.A0, a.A2, a.A3};
    s.c = mul_trunc(binom_series(a.A0 - Rat(1, 2), N),
                    z00_stream(swapped, N, variant));
  } else if (name == "Z.inf+A2" || name == "Z.inf-A2" || name == "Z.inf+A3" ||
             name == "Z.inf-A3") {
    bad_variant(6);
    P4 a = A();
    if (name == "Z.inf-A2") a.A2 = -a.A2;
    if (name == "Z.inf+A3") std::swap(a.A2, a.A3);
    if (name == "Z.inf-A3") {
      Rat t = -a.A3;
      a.A3 = a.A2;
      a.A2 = t;
    }
    s.base = PointAt::infinity();
    s.rho = 1 - a.A0 + a.A2;
    s.c = zinf_stream(a, N, variant);
  } else if (name == "Q.00") {
    bad_variant(6);
    s.rho = 0;
    s.c = q00_stream(A(), N, variant);
  } else if (name == "Q.0+" || name == "Q.0-") {
    bad_variant(3);
    P4 a = A();
    if (name == "Q.0-") a.A0 = -a.A0;
    s.rho = a.A0 - a.A2;
    s.c = q0p_stream(a, N, variant);
  } else if (name == "Q.10") {
    bad_variant(6);
    P4 a = A();
    std::swap(a.A0, a.A1);
    s.base = PointAt::finite(1);
    s.rho = 0;
    s.c = q00_stream(a, N, variant);
  } else if (name == "Q.1+" || name == "Q.1-") {
    bad_variant(3);
    P4 a = A();
    Rat A1 = name == "Q.1+" ? a.A1 : -a.A1;
    P4 b{A1, a.A0, a.A2, a.A3};
    s.base = PointAt::finite(1);
    s.rho = A1 - a.A2;
    s.c = q0p_stream(b, N, variant);
  } else if (name == "Q.inf0") {
    bad_variant(6);
    P4 a = A();
    P4 b{a.A3, a.A1, a.A2, a.A0};
    s.base = PointAt::infinity();
    s.rho = 1 + 2 * a.A2;
    s.c = q00_stream(b, N, variant);
  } else if (name == "Q.inf+" || name == "Q.inf-") {
    bad_variant(3);
    P4 a = A();
    Rat A3 = name == "Q.inf+" ? a.A3 : -a.A3;
    P4 b{A3, a.A1, a.A2, a.A0};
    s.base = PointAt::infinity();
    s.rho = 1 + a.A2 + A3;
    s.c = q0p_stream(b, N, variant);
  } else if (name == "DF.00") {
    bad_variant(3);
    s.rho = 0;
    s.c = df00_stream(D(), N, variant);
  } else if (name == "DF.01") {
    bad_variant(3);
    DFParams d = D();
    s.rho = d.a + d.c + 1;
    s.c = df01_stream(d, N, variant);
  } else if (name == "DF.02") {
    bad_variant(3);
    DFParams d = D();
    s.rho = 2 * d.a + 2 * d.c + d.g + 2;
    DFParams e{-d.c - d.g / 2 - 1, d.a + d.b + d.c + d.g / 2 + 1,
               -d.a - d.g / 2 - 1, d.g};
    s.c = df00_stream(e, N, variant);
  } else if (name == "DF.10" || name == "DF.11" || name == "DF.12") {
    DFParams d = D();
    DFParams e{d.b, d.a, d.c, d.g};
    s.base = PointAt::finite(1);
    if (name == "DF.10") {
      bad_variant(3);
      s.rho = 0;
      s.c = df00_stream(e, N, variant);
    } else if (name == "DF.11") {
      bad_variant(3);
      s.rho = d.b + d.c + 1;
      s.c = df01_stream(e, N, variant);
    } else {
      bad_variant(3);
      s.rho = 2 * d.b + 2 * d.c + d.g + 2;
      DFParams f{-e.c - e.g / 2 - 1, e.a + e.b + e.c + e.g / 2 + 1,
                 -e.a - e.g / 2 - 1, e.g};
      s.c = df00_stream(f, N, variant);
    }
  } else if (name == "DF.inf0" || name == "DF.inf1" || name == "DF.inf2") {
    DFParams d = D();
    s.base = PointAt::infinity();
    if (name == "DF.inf0") {
      bad_variant(3);
      s.rho = -2 * d.c;
      DFParams e{-d.a - d.b - d.c - d.g - 2, d.b, d.c, d.g};
      s.c = df00_stream(e, N, variant);
    } else if (name == "DF.inf1") {
      bad_variant(3);
      s.rho = -d.a - d.b - 2 * d.c - d.g - 1;
      DFParams e{d.a, d.c, d.b, d.g};
      s.c = df01_stream(e, N, variant);
    } else {
      bad_variant(3);
      s.rho = -2 * d.a - 2 * d.b - 2 * d.c - d.g - 2;
      DFParams e{d.a, d.c, d.b, d.g};
      s.c = df00_stream(e, N, variant);
    }
  } else {
    fail(ErrorKind::UnknownName, "unknown solution family '" + name + "'");
  }
  return s;
}

int solution_variant_count(const std::string& name) {
  if (name.rfind("Z.inf", 0) == 0) return 6;
  if (name.rfind("Z.", 0) == 0) return 4;
  if (name == "Q.00" || name == "Q.10" || name == "Q.inf0") return 6;
  if (name.rfind("Q.", 0) == 0) return 3;
  if (name.rfind("DF.", 0) == 0) return 3;
  fail(ErrorKind::UnknownName, "unknown solution family '" + name + "'");
}

std::vector<std::string> solution_names() {
  return {"Z.00",    "Z.02A0",  "Z.1+A1",  "Z.1-A1",  "Z.inf+A2", "Z.inf-A2",
          "Z.inf+A3", "Z.inf-A3", "Q.00",   "Q.0+",    "Q.0-",     "Q.10",
          "Q.1+",    "Q.1-",    "Q.inf0",  "Q.inf+",  "Q.inf-",   "DF.00",
          "DF.01",   "DF.02",   "DF.10",   "DF.11",   "DF.12",    "DF.inf0",
          "DF.inf1", "DF.inf2"};
}

std::string solution_operator(const std::string& name) {
  if (name.rfind("Z.", 0) == 0) return "Z";
  if (name.rfind("Q.", 0) == 0) return "Q";
  if (name.rfind("DF.", 0) == 0) return "DF";
  fail(ErrorKind::UnknownName, "unknown solution family '" + name + "'");
}

}  // namespace fuchsia

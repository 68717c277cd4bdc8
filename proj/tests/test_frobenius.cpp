#include <doctest.h>

#include "catalog.hpp"
#include "diffeq.hpp"
#include "frobenius.hpp"
#include "rnd.hpp"

using namespace fuchsia;

namespace {

Params draw_params(Rng& rng) {
  return rng.draw_until<Params>(
      [&] {
        return Params{rng.rat_small(), rng.rat_small(), rng.rat_small(),
                      rng.rat_small()};
      },
      [](const Params& p) { return !p.degenerate(); });
}

// reduced ratios of an extracted order-2 recurrence
DiffEq2 as_diffeq(const Recurrence& rec) {
  REQUIRE(rec.order() == 2);
  return {rec.ratio(1), rec.ratio(2)};
}

}  // namespace

TEST_CASE("recurrence extraction against the displayed recurrences") {
  Rng rng(101);
  for (int trial = 0; trial < 5; ++trial) {
    Params A = draw_params(rng);
    ParamMap m = A.to_map();
    SUBCASE("") {}  // keep one loop body
    {
      DiffEq2 got = as_diffeq(recurrence_at(make("Z", m), PointAt::finite(0),
                                            Rat(0)));
      DiffEq2 paper = paper_recurrence("Rc0", m);
      CHECK(got.p1 == paper.p1);
      CHECK(got.p2 == paper.p2);
    }
    {
      DiffEq2 got = as_diffeq(recurrence_at(make("Z", m), PointAt::finite(0),
                                            Rat(A.A0 - Rat(1, 2))));
      DiffEq2 paper = paper_recurrence("Rc1", m);
      CHECK(got.p1 == paper.p1);
      CHECK(got.p2 == paper.p2);
    }
    {
      DiffEq2 got = as_diffeq(recurrence_at(make("Z", m), PointAt::infinity(),
                                            Rat(1 - A.A0 + A.A2)));
      DiffEq2 paper = paper_recurrence("RcInf", m);
      CHECK(got.p1 == paper.p1);
      CHECK(got.p2 == paper.p2);
    }
    {
      DiffEq2 got = as_diffeq(recurrence_at(make("Q", m), PointAt::finite(0),
                                            Rat(0)));
      DiffEq2 paper = paper_recurrence("RcQ00", m);
      CHECK(got.p1 == paper.p1);
      CHECK(got.p2 == paper.p2);
    }
    {
      DiffEq2 got = as_diffeq(recurrence_at(make("Q", m), PointAt::finite(0),
                                            Rat(A.A0 - A.A2)));
      DiffEq2 paper = paper_recurrence("RcQ0plus", m);
      CHECK(got.p1 == paper.p1);
      CHECK(got.p2 == paper.p2);
    }
  }
}

TEST_CASE("Gauss recurrence at the origin") {
  ParamMap g{{"a", Rat(1, 3)}, {"b", Rat(1, 5)}, {"c", Rat(2, 7)}};
  Recurrence rec = recurrence_at(make("Gauss", g), PointAt::finite(0), Rat(0));
  REQUIRE(rec.order() == 1);
  // C_n = ((a+n-1)(b+n-1) / ((c+n-1) n)) C_{n-1}
  Poly n({Rat(0), Rat(1)}, 'n');
  RatFun expect((n + Poly(Rat(1, 3) - 1)) * (n + Poly(Rat(1, 5) - 1)),
                (n + Poly(Rat(2, 7) - 1)) * n);
  CHECK(rec.ratio(1) == expect);
}

TEST_CASE("series generation and the residual oracle") {
  Rng rng(103);
  SUBCASE("Gauss series has Pochhammer coefficients") {
    GaussParams g{Rat(1, 3), Rat(1, 5), Rat(2, 7)};
    ParamMap m{{"a", g.a}, {"b", g.b}, {"c", g.c}};
    FrobSeries s = series(make("Gauss", m), PointAt::finite(0), Rat(0), 20);
    for (long n = 0; n <= 20; ++n) CHECK(s.c[size_t(n)] == gauss_coeff(g, n));
    Residual r = verify_series(make("Gauss", m), s);
    CHECK(r.ok());
  }
  SUBCASE("all four exponents of Z generate valid truncations") {
    Params A = draw_params(rng);
    ParamMap m = A.to_map();
    DiffOp z = make("Z", m);
    for (const Rat& rho : {Rat(0), Rat(A.A0 - Rat(1, 2)),
                           Rat(A.A0 + Rat(1, 2)), Rat(2 * A.A0)}) {
      int extra = resonance_count(z, PointAt::finite(0), rho, 30);
      std::vector<Rat> init(size_t(extra) + 1, Rat(1));
      FrobSeries s = series(z, PointAt::finite(0), rho, 30, init);
      CHECK(verify_series(z, s).ok());
    }
  }
  SUBCASE("series at 1 and infinity run through the same machinery") {
    Params A = draw_params(rng);
    DiffOp z = make("Z", A.to_map());
    FrobSeries s1 =
        series(z, PointAt::finite(1), Rat(Rat(1, 2) + A.A1), 25);
    CHECK(verify_series(z, s1).ok());
    FrobSeries si =
        series(z, PointAt::infinity(), Rat(1 - A.A0 + A.A2), 25);
    CHECK(verify_series(z, si).ok());
  }
  SUBCASE("a logarithmic resonance is refused") {
    // Gauss with c = 0 forces a log at the second exponent
    ParamMap m{{"a", Rat(1, 3)}, {"b", Rat(1, 5)}, {"c", Rat(-1)}};
    CHECK_THROWS_AS(
        (void)series(make("Gauss", m), PointAt::finite(0), Rat(0), 10), Error);
  }
  SUBCASE("perturbing one coefficient breaks the oracle") {
    Params A = draw_params(rng);
    DiffOp z = make("Z", A.to_map());
    FrobSeries s = series(z, PointAt::finite(0), Rat(0), 20);
    s.c[7] += 1;
    CHECK(!verify_series(z, s).ok());
  }
}

TEST_CASE("Riemann-Liouville coefficient rule") {
  Rng rng(107);
  SUBCASE("mu = 0 is the identity") {
    FrobSeries s{Rat(1, 3), {Rat(1), Rat(2), Rat(5)}, PointAt::finite(0)};
    CHECK_THROWS_AS((void)riemann_liouville(s, Rat(0)), Error);
  }
  SUBCASE("transport of the product solution onto Ztilde at 0") {
    Params A = draw_params(rng);
    GaussParams g1 = gauss_factor_1(A), g2 = gauss_factor_2(A);
    FrobSeries u;
    u.rho = -A.A0;
    u.base = PointAt::finite(0);
    u.c.resize(31);
    for (long n = 0; n <= 30; ++n) u.c[size_t(n)] = product_2f1_coeff(g1, g2, n);
    FrobSeries v = riemann_liouville(u, Rat(1, 2));
    CHECK(v.rho == Rat(1, 2) - A.A0);
    // matches the Frobenius solution of Ztilde with that exponent
    DiffOp zt = make("Ztilde", A.to_map());
    FrobSeries w = series(zt, PointAt::finite(0), v.rho, 30);
    CHECK(v.c == w.c);
    CHECK(verify_series(zt, v).ok());
  }
  SUBCASE("infinity-side rule lands on Ztilde at infinity") {
    Params A = draw_params(rng);
    DiffOp l = make("L", A.to_map());
    DiffOp zt = make("Ztilde", A.to_map());
    for (const Rat& rho : {Rat(1 + A.A2), Rat(1 - A.A2), Rat(1 + A.A3),
                           Rat(1 - A.A3)}) {
      FrobSeries u = series(l, PointAt::infinity(), rho, 30);
      FrobSeries v = riemann_liouville(u, Rat(1, 2));
      CHECK(v.rho == rho - Rat(1, 2));
      FrobSeries w = series(zt, PointAt::infinity(), v.rho, 30);
      CHECK(v.c == w.c);
    }
  }
}

TEST_CASE("polynomial solutions of L at integer A2") {
  Rng rng(109);
  for (int m = 0; m <= 3; ++m) {
    Params A = rng.draw_until<Params>(
        [&] {
          return Params{rng.rat_small(), rng.rat_small(), Rat(m + 1),
                        rng.rat_small()};
        },
        [](const Params& p) {
          return !is_integer(p.A3) && !is_integer(p.A0) &&
                 !is_integer(2 * p.A0);
        });
    FrobSeries s = polynomial_solution_L(A);
    CHECK(int(s.c.size()) == m + 1);
    CHECK(s.c.back() == 1);
    DiffOp l = make("L", A.to_map());
    Residual r = verify_series(l, s);
    CHECK(r.identically_zero());
    if (m >= 1) {
      // a_{m-1} = -m(m^2+m-2+alpha)/(m^2 - A3^2)
      Rat alpha =
          (A.A1 * A.A1 - A.A0 * A.A0 - A.A2 * A.A2 - A.A3 * A.A3 + 5) / 2;
      Rat expect = -Rat(m) * (Rat(m) * m + m - 2 + alpha) /
                   (Rat(m) * m - A.A3 * A.A3);
      CHECK(s.c[size_t(m) - 1] == expect);
    }
  }
  SUBCASE("integer A3 is refused") {
    Params A{Rat(1, 7), Rat(2, 7), Rat(2), Rat(3)};
    CHECK_THROWS_AS((void)polynomial_solution_L(A), Error);
  }
  SUBCASE("m = 0 gives the constant solution since l4 vanishes") {
    Params A{Rat(1, 7), Rat(2, 7), Rat(1), Rat(4, 13)};
    FrobSeries s = polynomial_solution_L(A);
    CHECK(s.c == std::vector<Rat>{Rat(1)});
  }
}

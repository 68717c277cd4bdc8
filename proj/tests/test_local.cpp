#include <doctest.h>

#include <algorithm>

#include "catalog.hpp"
#include "local.hpp"
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

ParamMap full_map(const Params& p) {
  ParamMap m = p.to_map();
  m["a"] = p.df_a();
  m["b"] = p.df_b();
  m["c"] = p.df_c();
  m["g"] = p.df_g();
  return m;
}

bool scheme_matches(const DiffOp& op, const std::string& name,
                    const ParamMap& params) {
  RiemannScheme scheme = expected_scheme(name);
  for (const auto& col : scheme.columns) {
    Exponents got = local_exponents(op, col.point);
    if (got.residual.degree() != 0) return false;
    std::vector<Rat> expect;
    for (const auto& e : col.exponents) expect.push_back(e.eval(params));
    std::vector<Rat> have = got.flat();
    std::sort(expect.begin(), expect.end());
    std::sort(have.begin(), have.end());
    if (expect != have) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("shift data of elementary operators") {
  ShiftCoeffs d = shift_coeffs(DiffOp::d());
  REQUIRE(d.size() == 1);
  CHECK(d.at(-1) == Poly({Rat(0), Rat(1)}, 'n'));  // e_{-1}(m) = m
  DiffOp xd = DiffOp::mul_by(RatFun(Poly::variable())) * DiffOp::d();
  ShiftCoeffs t = shift_coeffs(xd);
  REQUIRE(t.size() == 1);
  CHECK(t.at(0) == Poly({Rat(0), Rat(1)}, 'n'));  // e_0(m) = m
}

TEST_CASE("shift bands of L match the polynomial-solution display") {
  Rng rng(61);
  for (int trial = 0; trial < 3; ++trial) {
    Params A = draw_params(rng);
    ShiftCoeffs sc = shift_coeffs(make("L", A.to_map()));
    REQUIRE(sc.count(0));
    REQUIRE(sc.count(-1));
    REQUIRE(sc.count(-2));
    // p_k = ((k+1)^2 - A2^2)((k+1)^2 - A3^2)
    Poly k1 = Poly({Rat(1), Rat(1)}, 'n');
    Poly p = (k1 * k1 - Poly(Rat(A.A2 * A.A2))) *
             (k1 * k1 - Poly(Rat(A.A3 * A.A3)));
    CHECK(sc.at(0) == p);
    // q_{k-1} = -k(2k+1)(k^2+k-2+alpha)
    Rat alpha = (A.A1 * A.A1 - A.A0 * A.A0 - A.A2 * A.A2 - A.A3 * A.A3 + 5) / 2;
    Poly ks = Poly({Rat(0), Rat(1)}, 'n');
    Poly q = -(ks * Poly({Rat(1), Rat(2)}, 'n') *
               (ks * ks + ks + Poly(Rat(alpha - 2))));
    CHECK(sc.at(-1) == q);
    // r_{k-2} = k(k-1)(k^2 - A0^2)
    Poly r = ks * Poly({Rat(-1), Rat(1)}, 'n') *
             (ks * ks - Poly(Rat(A.A0 * A.A0)));
    CHECK(sc.at(-2) == r);
  }
}

TEST_CASE("local exponents at the three kinds of points") {
  ParamMap m{{"A0", Rat(1, 7)},
             {"A1", Rat(2, 7)},
             {"A2", Rat(3, 11)},
             {"A3", Rat(4, 13)}};
  SUBCASE("Ztilde at 0") {
    Exponents e = local_exponents(make("Ztilde", m), PointAt::finite(0));
    std::vector<Rat> have = e.flat();
    std::sort(have.begin(), have.end());
    std::vector<Rat> expect{Rat(1, 2) - Rat(1, 7), Rat(0), Rat(1),
                            Rat(1, 2) + Rat(1, 7)};
    std::sort(expect.begin(), expect.end());
    CHECK(have == expect);
  }
  SUBCASE("Gauss at 0") {
    ParamMap g{{"a", Rat(1, 3)}, {"b", Rat(1, 5)}, {"c", Rat(2, 7)}};
    Exponents e = local_exponents(make("Gauss", g), PointAt::finite(0));
    std::vector<Rat> have = e.flat();
    std::sort(have.begin(), have.end());
    CHECK(have == std::vector<Rat>{Rat(0), Rat(5, 7)});
  }
  SUBCASE("Q at infinity") {
    Exponents e = local_exponents(make("Q", m), PointAt::infinity());
    std::vector<Rat> have = e.flat();
    std::sort(have.begin(), have.end());
    std::vector<Rat> expect{1 + Rat(6, 11), 1 + Rat(3, 11) - Rat(4, 13),
                            1 + Rat(3, 11) + Rat(4, 13)};
    std::sort(expect.begin(), expect.end());
    CHECK(have == expect);
  }
  SUBCASE("irregular singular point is refused") {
    // x^3 d^2 - 1 has an irregular point at 0
    DiffOp p({RatFun(Rat(-1)), RatFun(), RatFun(Poly::monomial(1, 3))});
    CHECK_THROWS_AS((void)local_exponents(p, PointAt::finite(0)), Error);
  }
}

TEST_CASE("Riemann schemes agree with the tables at 5 draws") {
  Rng rng(67);
  for (int trial = 0; trial < 5; ++trial) {
    Params A = draw_params(rng);
    ParamMap m = full_map(A);
    for (const char* name :
         {"Z", "Zt", "Ztilde", "K", "L", "Q", "R", "DF", "Diag2"})
      CHECK(scheme_matches(make(name, m), name, m));
    ParamMap g{{"a", rng.rat_small()},
               {"b", rng.rat_small()},
               {"c", rng.rat_small()}};
    CHECK(scheme_matches(make("Gauss", g), "Gauss", g));
  }
}

TEST_CASE("Fuchs relation at desk scale") {
  Rng rng(71);
  auto exponent_sum = [](const DiffOp& op, const std::vector<PointAt>& points) {
    Rat sum(0);
    for (const PointAt& pt : points)
      for (const Rat& e : local_exponents(op, pt).flat()) sum += e;
    return sum;
  };
  std::vector<PointAt> pts{PointAt::finite(0), PointAt::finite(1),
                           PointAt::infinity()};
  for (int trial = 0; trial < 3; ++trial) {
    Params A = draw_params(rng);
    ParamMap m = full_map(A);
    // order-4, 3 singular points: baseline (k-2) n (n-1)/2 = 6
    CHECK(is_integer(exponent_sum(make("Z", m), pts) - 6));
    // order-3 operators: baseline 3
    CHECK(is_integer(exponent_sum(make("Q", m), pts) - 3));
    CHECK(is_integer(exponent_sum(make("DF", m), pts) - 3));
  }
}

TEST_CASE("normal form and the fundamental invariants") {
  SUBCASE("an operator already in normal form is unchanged") {
    Poly q2({Rat(1, 2), Rat(3)});
    Poly q3({Rat(-1), Rat(0), Rat(2)});
    Poly q4({Rat(5), Rat(1)});
    DiffOp p({RatFun(q4), RatFun(q3), RatFun(q2), RatFun(), RatFun(Rat(1))});
    NormalFormQ nf = normal_form_q(p);
    CHECK(nf.q2 == RatFun(q2));
    CHECK(nf.q3 == RatFun(q3));
    CHECK(nf.q4 == RatFun(q4));
  }
  SUBCASE("rescaling the unknown does not move the q-triple") {
    Rng rng(73);
    for (int trial = 0; trial < 4; ++trial) {
      Poly q2({rng.rat_small(), rng.rat_small()});
      Poly q3({rng.rat_small(), rng.rat_small()});
      Poly q4({rng.rat_small()});
      DiffOp f({RatFun(q4), RatFun(q3), RatFun(q2), RatFun(), RatFun(Rat(1))});
      NormalFormQ base = normal_form_q(f);
      DiffOp conj = ad_conjugate(f, {{rng.rat_small(), rng.rat_small()}}).op;
      NormalFormQ nf = normal_form_q(conj);
      CHECK(nf.q2 == base.q2);
      CHECK(nf.q3 == base.q3);
      CHECK(nf.q4 == base.q4);
    }
  }
  SUBCASE("theta3 vanishes for the self-adjoint family") {
    Rng rng(79);
    for (int trial = 0; trial < 3; ++trial) {
      Params A = draw_params(rng);
      DiffOp zt = make("Ztilde", A.to_map());
      ThetaInvariants ti = theta_invariants(zt);
      CHECK(ti.theta3.is_zero());
      CHECK(is_self_adjoint(zt));
      // addition does not change theta3: Z in x has theta3 = 0 as well
      CHECK(theta_invariants(make("Z", A.to_map())).theta3.is_zero());
      // and the q-triple of Ztilde satisfies q3 = q2'
      NormalFormQ nf = normal_form_q(zt);
      CHECK(nf.q3 == nf.q2.derivative());
    }
  }
  SUBCASE("d^4 has vanishing invariants") {
    ThetaInvariants ti = theta_invariants(DiffOp::d(4));
    CHECK(ti.theta3.is_zero());
    CHECK(ti.theta4.is_zero());
  }
  SUBCASE("theta3 is antisymmetric under the adjoint") {
    Rng rng(83);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<RatFun> c;
      for (int j = 0; j <= 4; ++j)
        c.emplace_back(Poly({rng.rat_small(), rng.rat_small()}));
      if (c.back().is_zero()) c.back() = RatFun(Rat(1));
      DiffOp p(std::move(c));
      CHECK(theta_invariants(adjoint(p)).theta3 == -theta_invariants(p).theta3);
    }
  }
}

TEST_CASE("self-adjointness verdicts") {
  Rng rng(89);
  Params A = draw_params(rng);
  CHECK(is_self_adjoint(make("Ztilde", A.to_map())));
  CHECK(is_self_adjoint(DiffOp::d(2)));
  ParamMap g{{"a", Rat(1, 3)}, {"b", Rat(1, 5)}, {"c", Rat(2, 7)}};
  CHECK(!is_self_adjoint(make("Gauss", g)));
  // DF adjoint map: S(a,b,c,g)* = S(-1-a,-1-b,-1-c,-g)
  ParamMap d1{{"a", Rat(1, 3)},
              {"b", Rat(1, 5)},
              {"c", Rat(2, 7)},
              {"g", Rat(3, 11)}};
  ParamMap d2{{"a", Rat(-4, 3)},
              {"b", Rat(-6, 5)},
              {"c", Rat(-9, 7)},
              {"g", Rat(-3, 11)}};
  DiffOp adj = normalize(adjoint(make("DF", d1))).op;
  CHECK(equals_up_to_left_factor(adj, normalize(make("DF", d2)).op).has_value());
}

TEST_CASE("catalog symmetry remarks") {
  Rng rng(97);
  Params A = draw_params(rng);
  auto same = [](const DiffOp& a, const DiffOp& b) {
    return equals_up_to_left_factor(normalize(a).op, normalize(b).op)
        .has_value();
  };
  SUBCASE("Z under sign flips and A2<->A3") {
    DiffOp z = make("Z", A.to_map());
    for (auto& flip : std::vector<Params>{{A.A0, -A.A1, A.A2, A.A3},
                                          {A.A0, A.A1, -A.A2, A.A3},
                                          {A.A0, A.A1, A.A2, -A.A3},
                                          {A.A0, A.A1, A.A3, A.A2}})
      CHECK(same(z, make("Z", flip.to_map())));
  }
  SUBCASE("Ztilde under x -> 1-x with A0<->A1") {
    DiffOp zt = make("Ztilde", A.to_map());
    Params sw{A.A1, A.A0, A.A2, A.A3};
    DiffOp other =
        change_var(make("Ztilde", sw.to_map()), VarMap::affine(-1, 1)).op;
    CHECK(same(zt, other));
    CHECK(same(zt, make("Ztilde", Params{-A.A0, -A.A1, -A.A2, -A.A3}.to_map())));
  }
  SUBCASE("L shares both symmetries") {
    DiffOp l = make("L", A.to_map());
    Params sw{A.A1, A.A0, A.A2, A.A3};
    CHECK(same(l, change_var(make("L", sw.to_map()), VarMap::affine(-1, 1)).op));
    CHECK(same(l, make("L", Params{A.A0, A.A1, A.A3, A.A2}.to_map())));
  }
  SUBCASE("R is invariant only under the A3 flip") {
    DiffOp r = make("R", A.to_map());
    CHECK(same(r, make("R", Params{A.A0, A.A1, A.A2, -A.A3}.to_map())));
    CHECK(!same(r, make("R", Params{-A.A0, A.A1, A.A2, A.A3}.to_map())));
    Params sw{A.A1, A.A0, A.A2, A.A3};
    CHECK(same(r, change_var(make("R", sw.to_map()), VarMap::affine(-1, 1)).op));
  }
  SUBCASE("Q under the reciprocal map picks up Ad(x^(1+2A2))") {
    DiffOp q = make("Q", A.to_map());
    Params sw{A.A3, A.A1, A.A2, A.A0};
    DiffOp lhs = change_var(make("Q", sw.to_map()), VarMap::reciprocal()).op;
    DiffOp rhs = ad_conjugate(q, {{Rat(0), Rat(1 + 2 * A.A2)}}).op;
    CHECK(same(lhs, rhs));
  }
  SUBCASE("the t-form footnote: Ad then t = 1-2x recovers Ztilde") {
    DiffOp zt_t = make("Zt", A.to_map());
    DiffOp conj = ad_conjugate(zt_t, {{Rat(1), Rat(Rat(1, 2) - A.A0)}}).op;
    DiffOp in_x = change_var(conj, VarMap::affine(-2, 1)).op;
    CHECK(same(in_x, make("Ztilde", A.to_map())));
  }
}

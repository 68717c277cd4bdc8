#pragma once

#include <map>
#include <string>
#include <vector>

#include "frobenius.hpp"
#include "hyp.hpp"
#include "mpoly.hpp"

namespace fuchsia {

using ParamMap = std::map<std::string, Rat>;

// Parameter dictionary A = (A0..A3) with the derived a-, b- and (a,b,c,g)
// systems.
struct Params {
  Rat A0, A1, A2, A3;

  static Params from_map(const ParamMap& m);
  ParamMap to_map() const;

  Rat a0() const { return 2 * A0 - 3; }
  Rat a(int i) const;                       // a_i = A_i^2 - (A0-1)^2, i=1..3
  Rat b(int i) const;                       // b_i = (a1+a2+a3)/2 - a_i
  Rat Aeps(int e0, int e1, int e2, int e3) const;  // (sum e_i A_i + 1)/2

  // Dotsenko-Fateev dictionary (both directions)
  Rat df_a() const { return Aeps(1, -1, 1, 1) - 1; }
  Rat df_b() const { return Aeps(-1, 1, 1, 1) - 1; }
  Rat df_c() const { return Aeps(1, 1, 1, -1) - 1; }
  Rat df_g() const { return -2 * A2; }
  static Params from_abcg(const Rat& a, const Rat& b, const Rat& c,
                          const Rat& g);

  // true when any of 2A_i, A_i +- A_j, A_eps is an integer
  bool degenerate() const;

  ZParams z() const { return {A0, A1, A2, A3}; }
};

// Constructor for every named operator. Parameter keys: A0..A3 for the
// A-family; a,b,c,g for DF; a,b,c for Gauss; m (plus a2,b2,c2,b1 for the
// order-6 family) where applicable.
DiffOp make(const std::string& name, const ParamMap& params);
std::vector<std::string> catalog_names();

// w = z1 z2 for z_i'' = S_i z_i: the displayed order-4 operator when
// S1 != S2, the order-3 one when S1 == S2. Not normalized.
DiffOp tensor_product(const RatFun& s1, const RatFun& s2);

// S-function of a Gauss operator after removing the first-order term.
RatFun gauss_s_function(const GaussParams& g);

// Ad(lambda1 lambda2) K_{S1,S2}: the equation satisfied by products of
// solutions of the two Gauss operators, normalized.
DiffOp tensor_product_gauss(const GaussParams& g1, const GaussParams& g2);

// The quadratic whose roots are the apparent singular points of the
// Gauss tensor product.
Poly apparent_quadratic(const GaussParams& g1, const GaussParams& g2);

// The two Gauss factors attached to Z(A)
GaussParams gauss_factor_1(const Params& p);
GaussParams gauss_factor_2(const Params& p);

// Closed-form local solution streams. `variant` selects among the
// several displayed expressions of the same solution (0-based); all
// variants of one name agree coefficient-wise.
FrobSeries solution_family(const std::string& name, const ParamMap& params,
                           int N, int variant = 0);
int solution_variant_count(const std::string& name);
std::vector<std::string> solution_names();
// the operator annihilating a named solution family
std::string solution_operator(const std::string& name);

// Degree-m polynomial solution of L(A) with A2 = m+1 (requires A3
// non-integral).
FrobSeries polynomial_solution_L(const Params& p);

// ---- partial differential descriptors (documentation + diagonal check) ----

// multi-index (i,j,k) for d1^i d2^j d3^k -> coefficient
using PDOp = std::map<std::array<int, 3>, MPoly>;

std::vector<PDOp> z3_operators(const Rat& a0, const Rat& a1, const Rat& a2,
                               const Rat& a3);
// b-form row i (1..3): lhs = (t_i^2-1) d_ii, rhs = the displayed right side
struct BFormRow {
  PDOp lhs, rhs;
};
BFormRow z3_bform(int i, const Rat& a0, const Rat& a1, const Rat& a2,
                  const Rat& a3);

std::vector<PDOp> z2_operators(const Rat& a0, const Rat& a1, const Rat& a2,
                               const Rat& a3);

// Restriction of P1 to the diagonal t1 = t2: rewrites in (t, s = t2 - t1),
// checks that every ds-term vanishes at s = 0, and returns the resulting
// ordinary operator in t.
DiffOp restrict_p1_to_diagonal(const Rat& a0, const Rat& a1, const Rat& a2,
                               const Rat& a3);

}  // namespace fuchsia

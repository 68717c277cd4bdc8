#pragma once

#include <map>
#include <string>
#include <vector>

#include "ratfun.hpp"

namespace fuchsia {

// Homogeneous order-2 linear difference equation
// C_n = p1(n) C_{n-1} + p2(n) C_{n-2}, rational functions in n.
struct DiffEq2 {
  RatFun p1, p2;
};

// substitute n -> n + s
RatFun ratfun_shift(const RatFun& f, const Rat& s);

// H(n) = p1(n) p1(n+1) / p2(n+1), reduced
RatFun invariant(const DiffEq2& d);

bool essentially_same(const DiffEq2& d1, const DiffEq2& d2);

// lambda(n) = w^-(n+1) prod_j Gamma(n+v_j+1) / prod_i Gamma(n+u_i+1),
// as the Pochhammer rule lambda(n)/lambda(0) = w^-n prod(v_j+1)_n / prod(u_i+1)_n.
struct GaugeFactor {
  Rat w;
  std::vector<Rat> us, vs;  // shifts, sorted ascending, with multiplicity
  Rat ratio(long n) const;  // lambda(n)/lambda(0), exact
};

// Pochhammer rule with {C_n} = lambda(n) {D_n} for src: C and dst: D;
// requires essentially_same(src, dst). Throws NonLinearFactor when the
// coefficient ratio has irrational roots.
GaugeFactor gauge_factor(const DiffEq2& src, const DiffEq2& dst);

// Exact solution values C_0..C_N; the first inits.size() values seed the
// recurrence (paper "C_-1 = 0, C_0 = 1" is inits = {1}).
std::vector<Rat> solve(const DiffEq2& d, const std::vector<Rat>& inits, int N);

// The displayed recurrences at instantiated parameters:
// Rc0, Rc1, RcInf, RcQ00, RcQ0plus.
DiffEq2 paper_recurrence(const std::string& name,
                         const std::map<std::string, Rat>& params);

}  // namespace fuchsia

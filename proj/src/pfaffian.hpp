#pragma once

#include <vector>

#include "mpoly.hpp"

namespace fuchsia {

// Matrix 1-form omega = sum_v M_v dt_v with M_v = num[v] / den[v]; entries
// are multivariate rational functions sharing the per-variable denominator.
struct PfaffianForm {
  int size = 0;
  int nvars = 0;
  std::vector<std::vector<std::vector<MPoly>>> num;  // [var][row][col]
  std::vector<MPoly> den;                            // [var]

  MRatFun entry(int var, int row, int col) const {
    return MRatFun(num[size_t(var)][size_t(row)][size_t(col)],
                   den[size_t(var)]);
  }
  // in-place perturbation of one entry by +1 (mutation control)
  void perturb(int var, int row, int col) {
    num[size_t(var)][size_t(row)][size_t(col)] =
        num[size_t(var)][size_t(row)][size_t(col)] + den[size_t(var)];
  }
};

// The rank-8 form in (t1,t2,t3) and the rank-6 form in (t1,t2), at
// instantiated parameters (a0,a1,a2,a3).
PfaffianForm build_omega8(const Rat& a0, const Rat& a1, const Rat& a2,
                          const Rat& a3);
PfaffianForm build_omega6(const Rat& a0, const Rat& a1, const Rat& a2,
                          const Rat& a3);

// d omega = omega ^ omega as an exact polynomial identity.
bool check_integrability(const PfaffianForm& w);

// true iff some d_i M_j - d_j M_i is nonzero
bool d_omega_nonzero(const PfaffianForm& w);

}  // namespace fuchsia

#include "catalog.hpp"

namespace fuchsia {

namespace {

using Idx = std::array<int, 3>;

void add(PDOp& op, const Idx& idx, const MPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, fresh] = op.emplace(idx, coeff);
  if (!fresh) {
    it->second = it->second + coeff;
    if (it->second.is_zero()) op.erase(it);
  }
}

MPoly T(int i) { return MPoly::variable(i); }
MPoly C(const Rat& c) { return MPoly(c); }

// E_k for the cyclic index triple (i,j,k): the generator attached to a_k
PDOp e_operator(int i, int j, int k, const Rat& a0, const Rat& ak) {
  PDOp op;
  Idx dii{0, 0, 0}, djj{0, 0, 0}, dij{0, 0, 0}, di{0, 0, 0}, dj{0, 0, 0};
  dii[size_t(i)] = 2;
  djj[size_t(j)] = 2;
  dij[size_t(i)] = dij[size_t(j)] = 1;
  di[size_t(i)] = 1;
  dj[size_t(j)] = 1;
  add(op, dii, C(1) - T(i) * T(i));
  add(op, dij, (T(k) - T(i) * T(j)) * Rat(2));
  add(op, djj, C(1) - T(j) * T(j));
  add(op, di, T(i) * a0);
  add(op, dj, T(j) * a0);
  add(op, {0, 0, 0}, C(ak));
  return op;
}

}  // namespace

std::vector<PDOp> z3_operators(const Rat& a0, const Rat& a1, const Rat& a2,
                               const Rat& a3) {
  // E1 acts in (t2,t3), E2 in (t3,t1), E3 in (t1,t2)
  return {e_operator(1, 2, 0, a0, a1), e_operator(2, 0, 1, a0, a2),
          e_operator(0, 1, 2, a0, a3)};
}

BFormRow z3_bform(int i, const Rat& a0, const Rat& a1, const Rat& a2,
                  const Rat& a3) {
  if (i < 1 || i > 3) fail(ErrorKind::Usage, "row must be 1..3");
  Rat as[3] = {a1, a2, a3};
  Rat b[3];
  for (int k = 0; k < 3; ++k) b[k] = (a1 + a2 + a3) / 2 - as[k];
  int v = i - 1, w = (i) % 3, u = (i + 1) % 3;  // v = t_i slot, w,u the others
  BFormRow row;
  Idx dvv{0, 0, 0};
  dvv[size_t(v)] = 2;
  add(row.lhs, dvv, T(v) * T(v) - C(1));
  auto dpair = [](int x, int y) {
    Idx d{0, 0, 0};
    d[size_t(x)] += 1;
    d[size_t(y)] += 1;
    return d;
  };
  add(row.rhs, dpair(v, w), T(u) - T(v) * T(w));
  add(row.rhs, dpair(v, u), T(w) - T(u) * T(v));
  add(row.rhs, dpair(w, u), (T(v) - T(w) * T(u)) * Rat(-1));
  Idx dv{0, 0, 0};
  dv[size_t(v)] = 1;
  add(row.rhs, dv, T(v) * a0);
  add(row.rhs, {0, 0, 0}, C(b[size_t(v)]));
  return row;
}

std::vector<PDOp> z2_operators(const Rat& a0, const Rat& a1, const Rat& a2,
                               const Rat& a3) {
  PDOp p1;
  add(p1, {2, 0, 0}, C(1) - T(0) * T(0));
  add(p1, {1, 1, 0}, (C(1) - T(0) * T(1)) * Rat(2));
  add(p1, {0, 2, 0}, C(1) - T(1) * T(1));
  add(p1, {1, 0, 0}, T(0) * a0);
  add(p1, {0, 1, 0}, T(1) * a0);
  add(p1, {0, 0, 0}, C(a3));

  PDOp p2;
  MPoly lead = (T(0) - T(1)) * Rat(2);
  add(p2, {1, 2, 0}, lead * (C(1) - T(1) * T(1)));
  add(p2, {1, 1, 0}, lead * (T(1) * a0 + T(0) * a0));
  add(p2, {1, 0, 0}, lead * a1);
  add(p2, {2, 1, 0}, lead * (C(1) - T(0) * T(0)));
  add(p2, {0, 1, 0}, lead * a2);
  Rat s = -(2 + a0);
  add(p2, {0, 2, 0}, (C(1) - T(1) * T(1)) * s);
  add(p2, {0, 1, 0}, T(1) * (a0 * s));
  add(p2, {0, 0, 0}, C(a1 * s));
  add(p2, {2, 0, 0}, (C(1) - T(0) * T(0)) * (-s));
  add(p2, {1, 0, 0}, T(0) * (a0 * (-s)));
  add(p2, {0, 0, 0}, C(a2 * (-s)));
  return {p1, p2};
}

DiffOp restrict_p1_to_diagonal(const Rat& a0, const Rat& a1, const Rat& a2,
                               const Rat& a3) {
  PDOp p1 = z2_operators(a0, a1, a2, a3)[0];
  // coordinates t1 = t, t2 = t + s (slots: 0 = t, 1 = s);
  // d1 = dt - ds, d2 = ds
  std::array<MPoly, 3> args{T(0), T(0) + T(1), MPoly()};
  std::map<std::pair<int, int>, MPoly> collected;  // (dt-power, ds-power)
  for (const auto& [idx, coeff] : p1) {
    if (idx[2] != 0) fail(ErrorKind::Internal, "unexpected t3 derivative");
    MPoly cts = coeff.subs(args);
    int i = idx[0], j = idx[1];
    Rat binom(1);
    for (int k = 0; k <= i; ++k) {
      MPoly c = cts * (k % 2 ? -binom : binom);
      auto key = std::make_pair(i - k, j + k);
      auto [it, fresh] = collected.emplace(key, c);
      if (!fresh) it->second = it->second + c;
      binom = binom * Rat(i - k) / Rat(k + 1);
    }
  }
  int max_dt = 0;
  for (const auto& [key, c] : collected)
    if (key.second == 0) max_dt = std::max(max_dt, key.first);
  std::vector<Poly> coeffs(size_t(max_dt) + 1);
  for (const auto& [key, c] : collected) {
    // value at s = 0: drop every term carrying s
    std::vector<Rat> tc;
    for (const auto& [e, v] : c.terms()) {
      if (e[1] != 0) continue;
      if (static_cast<int>(tc.size()) <= e[0]) tc.resize(size_t(e[0]) + 1, Rat(0));
      tc[size_t(e[0])] = v;
    }
    Poly restricted(std::move(tc));
    if (key.second > 0) {
      if (!restricted.is_zero())
        fail(ErrorKind::ShapeError, "restriction leaves a transverse term");
      continue;
    }
    coeffs[size_t(key.first)] = restricted;
  }
  return DiffOp::from_poly_coeffs(coeffs);
}

}  // namespace fuchsia

#include "local.hpp"

#include <sstream>

namespace fuchsia {

ShiftCoeffs shift_coeffs(const DiffOp& p) {
  if (!p.polynomial_coeffs())
    fail(ErrorKind::ShapeError, "shift data needs polynomial coefficients");
  ShiftCoeffs out;
  // falling factorials m(m-1)...(m-j+1) in the recurrence variable
  std::vector<Poly> ff(size_t(p.order()) + 1);
  ff[0] = Poly(Rat(1));
  for (int j = 1; j <= p.order(); ++j) {
    ff[size_t(j)] = ff[size_t(j - 1)] * Poly({Rat(1 - j), Rat(1)}, 'n');
    ff[size_t(j)].set_var('n');
  }
  for (int j = 0; j <= p.order(); ++j) {
    const Poly& cj = p.coeff(j).num();
    if (p.coeff(j).is_zero()) continue;
    for (int i = 0; i <= cj.degree(); ++i) {
      if (cj.coeff(i) == 0) continue;
      Poly& e = out[i - j];
      e = e + ff[size_t(j)] * cj.coeff(i);
      e.set_var('n');
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

DiffOp translate_to_origin(const DiffOp& p, const PointAt& point) {
  if (point.at_infinity) return change_var(p, VarMap::reciprocal()).op;
  if (point.x == 0) return normalize(p).op;
  // the local coordinate at 1 is 1 - x, matching the solution tables;
  // elsewhere it is x - point
  if (point.x == 1) return change_var(p, VarMap::affine(-1, 1)).op;
  return change_var(p, VarMap::affine(1, point.x)).op;
}

Exponents local_exponents(const DiffOp& p, const PointAt& point) {
  DiffOp q = translate_to_origin(p, point);
  ShiftCoeffs sc = shift_coeffs(q);
  if (sc.empty()) fail(ErrorKind::Usage, "zero operator");
  const Poly& indicial = sc.begin()->second;
  if (indicial.degree() < q.order())
    fail(ErrorKind::IrregularSingular,
         "irregular singular point at " + point.str());
  RationalRoots rr = rational_roots(indicial);
  return {rr.roots, rr.residual};
}

Rat ExponentForm::eval(const std::map<std::string, Rat>& params) const {
  Rat v = constant;
  for (const auto& [sym, k] : coeffs) {
    auto it = params.find(sym);
    if (it == params.end()) fail(ErrorKind::MissingParam, "missing parameter " + sym);
    v += k * it->second;
  }
  return v;
}

std::string ExponentForm::str() const {
  std::ostringstream os;
  bool first = true;
  if (constant != 0 || coeffs.empty()) {
    os << rat_str(constant);
    first = false;
  }
  for (const auto& [sym, k] : coeffs) {
    if (k == 0) continue;
    if (first) {
      if (k == -1)
        os << "-";
      else if (k != 1)
        os << rat_str(k) << "*";
    } else {
      os << (sgn(k) < 0 ? " - " : " + ");
      Rat a = abs(k);
      if (a != 1) os << rat_str(a) << "*";
    }
    os << sym;
    first = false;
  }
  return os.str();
}

ExponentForm ef(const Rat& c) { return {c, {}}; }
ExponentForm ef(const Rat& c, const std::string& sym, const Rat& k) {
  ExponentForm e{c, {}};
  if (k != 0) e.coeffs[sym] = k;
  return e;
}

namespace {

ExponentForm lin(const Rat& c,
                 std::initializer_list<std::pair<const char*, Rat>> terms) {
  ExponentForm e{c, {}};
  for (const auto& [sym, k] : terms)
    if (k != 0) e.coeffs[sym] += k;
  return e;
}

RiemannScheme::Column col(const PointAt& p, std::vector<ExponentForm> e) {
  return {p, std::move(e)};
}

const Rat kHalf(1, 2);

}  // namespace

RiemannScheme expected_scheme(const std::string& name) {
  PointAt x0 = PointAt::finite(0), x1 = PointAt::finite(1),
          xm1 = PointAt::finite(-1), xi = PointAt::infinity();
  if (name == "Z") {
    return {{col(x0, {ef(0), lin(-kHalf, {{"A0", 1}}), lin(kHalf, {{"A0", 1}}),
                      lin(0, {{"A0", 2}})}),
             col(x1, {lin(kHalf, {{"A1", -1}}), ef(0), ef(1),
                      lin(kHalf, {{"A1", 1}})}),
             col(xi, {lin(1, {{"A0", -1}, {"A2", 1}}),
                      lin(1, {{"A0", -1}, {"A2", -1}}),
                      lin(1, {{"A0", -1}, {"A3", 1}}),
                      lin(1, {{"A0", -1}, {"A3", -1}})})}};
  }
  if (name == "Zt") {
    RiemannScheme z = expected_scheme("Z");
    return {{col(x1, z.columns[0].exponents), col(xm1, z.columns[1].exponents),
             col(xi, z.columns[2].exponents)}};
  }
  if (name == "Ztilde") {
    return {{col(x0, {lin(kHalf, {{"A0", -1}}), ef(0), ef(1),
                      lin(kHalf, {{"A0", 1}})}),
             col(x1, {lin(kHalf, {{"A1", -1}}), ef(0), ef(1),
                      lin(kHalf, {{"A1", 1}})}),
             col(xi, {lin(kHalf, {{"A2", 1}}), lin(kHalf, {{"A2", -1}}),
                      lin(kHalf, {{"A3", 1}}), lin(kHalf, {{"A3", -1}})})}};
  }
  if (name == "L") {
    return {{col(x0, {lin(0, {{"A0", -1}}), ef(0), ef(1), lin(0, {{"A0", 1}})}),
             col(x1, {lin(0, {{"A1", -1}}), ef(0), ef(1), lin(0, {{"A1", 1}})}),
             col(xi, {lin(1, {{"A2", 1}}), lin(1, {{"A3", -1}}),
                      lin(1, {{"A3", 1}}), lin(1, {{"A2", -1}})})}};
  }
  if (name == "K") {
    return {{col(x0, {ef(0), lin(0, {{"A0", 1}}), lin(1, {{"A0", 1}}),
                      lin(0, {{"A0", 2}})}),
             col(x1, {lin(0, {{"A1", -1}}), ef(0), ef(1), lin(0, {{"A1", 1}})}),
             col(xi, {lin(1, {{"A0", -1}, {"A2", -1}}),
                      lin(1, {{"A0", -1}, {"A3", 1}}),
                      lin(1, {{"A0", -1}, {"A3", -1}}),
                      lin(1, {{"A0", -1}, {"A2", 1}})})}};
  }
  if (name == "Q") {
    return {{col(x0, {ef(0), lin(0, {{"A0", -1}, {"A2", -1}}),
                      lin(0, {{"A0", 1}, {"A2", -1}})}),
             col(x1, {ef(0), lin(0, {{"A1", -1}, {"A2", -1}}),
                      lin(0, {{"A1", 1}, {"A2", -1}})}),
             col(xi, {lin(1, {{"A2", 2}}), lin(1, {{"A2", 1}, {"A3", -1}}),
                      lin(1, {{"A2", 1}, {"A3", 1}})})}};
  }
  if (name == "R") {
    return {{col(x0, {ef(0), lin(0, {{"A0", 2}}), lin(0, {{"A0", 1}, {"A2", 1}})}),
             col(x1, {ef(0), lin(0, {{"A1", 2}}), lin(0, {{"A1", 1}, {"A2", 1}})}),
             col(xi, {lin(1, {{"A0", -1}, {"A1", -1}}),
                      lin(1, {{"A0", -1}, {"A1", -1}, {"A2", -1}, {"A3", -1}}),
                      lin(1, {{"A0", -1}, {"A1", -1}, {"A2", -1}, {"A3", 1}})})}};
  }
  if (name == "DF") {
    return {{col(x0, {ef(0), lin(1, {{"a", 1}, {"c", 1}}),
                      lin(2, {{"a", 2}, {"c", 2}, {"g", 1}})}),
             col(x1, {ef(0), lin(1, {{"b", 1}, {"c", 1}}),
                      lin(2, {{"b", 2}, {"c", 2}, {"g", 1}})}),
             col(xi, {lin(0, {{"c", -2}}),
                      lin(-1, {{"a", -1}, {"b", -1}, {"c", -2}, {"g", -1}}),
                      lin(-2, {{"a", -2}, {"b", -2}, {"c", -2}, {"g", -1}})})}};
  }
  if (name == "Gauss") {
    return {{col(x0, {ef(0), lin(1, {{"c", -1}})}),
             col(x1, {ef(0), lin(0, {{"c", 1}, {"a", -1}, {"b", -1}})}),
             col(xi, {lin(0, {{"a", 1}}), lin(0, {{"b", 1}})})}};
  }
  if (name == "Diag2") {
    return {{col(xm1, {ef(0), lin(-kHalf, {{"A0", 1}})}),
             col(x1, {ef(0), lin(-kHalf, {{"A0", 1}})}),
             col(xi, {lin(1, {{"A0", -1}, {"A3", 1}}),
                      lin(1, {{"A0", -1}, {"A3", -1}})})}};
  }
  fail(ErrorKind::UnknownName, "no scheme table for '" + name + "'");
}

NormalFormQ normal_form_q(const DiffOp& p) {
  if (p.order() != 4) fail(ErrorKind::Usage, "normal form needs order 4");
  const RatFun& lead = p.coeff(4);
  RatFun q1 = p.coeff(3) / lead, q2 = p.coeff(2) / lead,
         q3 = p.coeff(1) / lead, q4 = p.coeff(0) / lead;
  RatFun q1d = q1.derivative(), q1dd = q1d.derivative(),
         q1ddd = q1dd.derivative();
  NormalFormQ out;
  out.q2 = q2 - Rat(3, 2) * q1d - Rat(3, 8) * (q1 * q1);
  out.q3 = q3 - Rat(1, 2) * (q1 * q2) + Rat(1, 8) * (q1 * q1 * q1) - q1dd;
  out.q4 = q4 - Rat(1, 4) * (q1 * q3) + Rat(1, 16) * (q1 * q1 * q2) -
           Rat(3, 256) * (q1 * q1 * q1 * q1) - Rat(1, 4) * (q2 * q1d) +
           Rat(3, 32) * (q1 * q1 * q1d) + Rat(3, 16) * (q1d * q1d) -
           Rat(1, 4) * q1ddd;
  return out;
}

ThetaInvariants theta_invariants(const DiffOp& p) {
  NormalFormQ q = normal_form_q(p);
  ThetaInvariants out;
  out.theta3 = q.q3 - q.q2.derivative();
  out.theta4 = q.q4 - Rat(1, 2) * q.q3.derivative() -
               Rat(9, 100) * (q.q2 * q.q2) +
               Rat(1, 5) * q.q2.derivative().derivative();
  return out;
}

bool is_self_adjoint(const DiffOp& p) {
  return equals_up_to_left_factor(normalize(adjoint(p)).op, normalize(p).op)
      .has_value();
}

}  // namespace fuchsia

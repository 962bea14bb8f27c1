#include "qci/curve.hpp"

#include <string>
#include <vector>

#include "qci/errors.hpp"

namespace qci {

CurveInput CurveInput::make(HomogPoly f) {
  const int d = f.degree();
  const std::uint32_t p = f.field().prime();
  if (d < 2) throw GuardError("curve degree must be at least 2, got " + std::to_string(d));
  if (f.is_zero()) throw GuardError("curve equation is the zero polynomial");
  if (p <= static_cast<std::uint32_t>(d) || p % static_cast<std::uint32_t>(d) == 0)
    throw GuardError("prime " + std::to_string(p) + " must exceed and not divide the degree " + std::to_string(d));
  return CurveInput(std::move(f));
}

QciInput CurveInput::jacobian() const {
  auto [fx, fy, fz] = partials(f_);
  return QciInput::make({std::move(fx), std::move(fy), std::move(fz)});
}

std::string to_string(CurveClass c) {
  switch (c) {
    case CurveClass::Smooth: return "smooth";
    case CurveClass::LinesThroughPoint: return "lines-through-point";
    case CurveClass::Free: return "free";
    case CurveClass::NearlyFree: return "nearly-free";
    case CurveClass::Generic: return "generic";
    case CurveClass::NotReduced: return "not-reduced";
  }
  return "?";
}

DpwVerdict dpw_certify(int d, int r, std::int64_t tau) {
  const std::int64_t D = d, R = r;
  DpwVerdict v;
  v.lower = (D - 1) * (D - R - 1);
  v.upper = v.lower + R * R;
  v.lower_pass = v.lower <= tau;
  v.upper_pass = tau <= v.upper;
  v.ii_applicable = 2 * R + 1 > D;
  if (v.ii_applicable) {
    v.ii_bound = v.upper - (2 * R + 1 - D) * (2 * R + 2 - D) / 2;
    v.ii_pass = tau <= v.ii_bound;
  }
  return v;
}

bool free_lower_bound_check(int d, std::int64_t tau) {
  const std::int64_t D = d;
  // compare 4*tau against the bound scaled by 4 to stay in integers
  if (D % 2 == 1) return 4 * tau >= 3 * (D - 1) * (D - 1);
  return 4 * tau >= 4 + 3 * D * (D - 2);
}

std::optional<int> high_tau_case(int d, int r, std::int64_t tau) {
  const std::int64_t D = d;
  if (r == 1 && tau == D * D - 3 * D + 3) return 1;
  if (r == 1 && tau == D * D - 3 * D + 2) return 2;
  if (r == 2 && tau == D * D - 4 * D + 7) return 3;
  if (r == 2 && tau == D * D - 4 * D + 6) return 4;
  return std::nullopt;
}

CurveClass classify_curve(CurveReport& rep) {
  if (!rep.qci.invariants) return rep.curve_class;
  const auto& inv = *rep.qci.invariants;
  const int d = rep.d;
  const int r = inv.r;
  const std::int64_t tau = inv.t;
  const std::int64_t D = d;
  const std::int64_t free_value = (D - 1) * (D - 1 - r) + static_cast<std::int64_t>(r) * r;

  rep.exponents.reset();
  rep.free_lower_bound.reset();
  rep.high_tau_case.reset();

  if (r == 0) {
    if (tau != (D - 1) * (D - 1))
      throw InvariantError("r = 0 but tau = " + std::to_string(tau) + " differs from (d-1)^2");
    rep.curve_class = CurveClass::LinesThroughPoint;
  } else if (tau == free_value) {
    rep.curve_class = CurveClass::Free;
    rep.exponents = std::pair{r, d - 1 - r};
    if (2 * r + 1 > d) throw InvariantError("free curve with 2r + 1 > d");
    rep.free_lower_bound = free_lower_bound_check(d, tau);
    if (!*rep.free_lower_bound) throw InvariantError("free curve below the freeness lower bound on tau");
  } else if (tau == free_value - 1) {
    rep.curve_class = CurveClass::NearlyFree;
  } else {
    rep.curve_class = CurveClass::Generic;
  }

  // the three freeness tests: tau identity, h1 splitting, c2(E(r)) = 0
  if (r >= 1) {
    const bool by_tau = rep.curve_class == CurveClass::Free;
    if (by_tau != inv.splits || by_tau != (inv.c2_at_r == 0))
      throw InvariantError("freeness tests disagree (tau, splits, c2)");
    if ((rep.curve_class == CurveClass::NearlyFree) != (inv.c2_at_r == 1))
      throw InvariantError("nearly-free classification disagrees with c2(E(r)) = 1");
  }
  if (r == 1 && rep.curve_class != CurveClass::Free && rep.curve_class != CurveClass::NearlyFree)
    throw InvariantError("r = 1 curve is neither free nor nearly free");

  if (rep.curve_class != CurveClass::LinesThroughPoint && tau > D * D - 3 * D + 3)
    throw InvariantError("tau exceeds d^2 - 3d + 3 for a curve that is not a pencil of lines");
  if (d > 7 && rep.curve_class != CurveClass::LinesThroughPoint && tau > D * D - 4 * D + 5) {
    rep.high_tau_case = high_tau_case(d, r, tau);
    if (!rep.high_tau_case)
      throw InvariantError("tau > d^2 - 4d + 5 with d > 7 outside the four admissible cases");
  }
  return rep.curve_class;
}

CurveReport analyze_curve(const CurveInput& curve, AnalysisOptions options) {
  const HomogPoly& f = curve.f();
  const int d = curve.degree();
  const auto [fx, fy, fz] = partials(f);

  const HomogPoly euler = multiply(variable(f.field(), 0), fx) + multiply(variable(f.field(), 1), fy) +
                          multiply(variable(f.field(), 2), fz);
  if (!(euler == f.scaled(f.field().from_int(d)))) throw InvariantError("Euler identity fails on the partials");

  CurveReport rep;
  rep.d = d;
  rep.qci = analyze_qci(curve.jacobian(), options);
  switch (rep.qci.dimension) {
    case DimensionClass::Empty:
      rep.curve_class = CurveClass::Smooth;
      rep.tau = 0;
      return rep;
    case DimensionClass::DimGe1:
      rep.curve_class = CurveClass::NotReduced;
      rep.refusal = "curve not reduced (Jacobian scheme positive-dimensional)";
      return rep;
    case DimensionClass::Dim0:
      break;
  }
  const auto& inv = *rep.qci.invariants;
  rep.tau = inv.t;
  rep.r = inv.r;
  rep.c2_at_r = inv.c2_at_r;
  rep.dpw = dpw_certify(d, inv.r, inv.t);
  classify_curve(rep);
  return rep;
}

namespace family {

CurveInput lines_through_point(const PrimeField& field, int d) {
  if (d < 2) throw GuardError("lines_through_point needs d >= 2");
  if (field.prime() <= static_cast<std::uint32_t>(d))
    throw GuardError("lines_through_point needs p > d for distinct slopes");
  HomogPoly f(field, 0, {1});
  for (int i = 1; i <= d; ++i) {
    const HomogPoly line = variable(field, 0) - variable(field, 1).scaled(field.from_int(i));
    f = multiply(f, line);
  }
  return CurveInput::make(std::move(f));
}

CurveInput smooth_plus_line(const PrimeField& field, int d) {
  if (d < 3) throw GuardError("smooth_plus_line needs d >= 3");
  if (field.prime() % static_cast<std::uint32_t>(d - 1) == 0)
    throw GuardError("smooth_plus_line needs p not dividing d-1");
  const int e = d - 1;
  const std::vector<std::pair<Monomial, std::int64_t>> g_terms{{{e, 0, 0}, 1}, {{0, e, 0}, 1}, {{0, 0, e}, 1}};
  const HomogPoly g = HomogPoly::from_terms(field, e, g_terms);
  return CurveInput::make(multiply(variable(field, 0), g));
}

QciInput ci_qci(const PrimeField& field, int a, int c) {
  if (a < 1 || c < a + 1) throw GuardError("ci_qci needs 1 <= a and a + 1 <= c");
  if (field.prime() % static_cast<std::uint32_t>(c) == 0) throw GuardError("ci_qci needs p not dividing c");
  const std::vector<std::pair<Monomial, std::int64_t>> fa_terms{{{a, 0, 0}, 1}, {{0, a - 1, 1}, 1}};
  const std::vector<std::pair<Monomial, std::int64_t>> fc_terms{{{c, 0, 0}, 1}, {{0, c, 0}, 1}, {{0, 0, c}, 1}};
  HomogPoly fa = HomogPoly::from_terms(field, a, fa_terms);
  HomogPoly fb = multiply(variable(field, 0), fa);
  HomogPoly fc = HomogPoly::from_terms(field, c, fc_terms);
  return QciInput::make({std::move(fa), std::move(fb), std::move(fc)});
}

}  // namespace family

}  // namespace qci

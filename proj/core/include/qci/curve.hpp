#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "qci/poly.hpp"
#include "qci/qci.hpp"

namespace qci {

/// Plane curve f = 0 of degree d >= 2 over F_p with p > d (hence p does not divide d).
class CurveInput {
 public:
  static CurveInput make(HomogPoly f);

  const HomogPoly& f() const noexcept { return f_; }
  int degree() const noexcept { return f_.degree(); }
  const PrimeField& field() const noexcept { return f_.field(); }

  /// The q.c.i. (f_x, f_y, f_z) of type (d-1, d-1, d-1).
  QciInput jacobian() const;

 private:
  explicit CurveInput(HomogPoly f) : f_(std::move(f)) {}
  HomogPoly f_;
};

enum class CurveClass { Smooth, LinesThroughPoint, Free, NearlyFree, Generic, NotReduced };
std::string to_string(CurveClass c);

struct DpwVerdict {
  std::int64_t lower = 0;  ///< (d-1)(d-r-1)
  std::int64_t upper = 0;  ///< (d-1)(d-r-1) + r^2
  bool lower_pass = false;
  bool upper_pass = false;
  bool ii_applicable = false;  ///< 2r + 1 > d
  std::int64_t ii_bound = 0;
  bool ii_pass = true;

  bool all_pass() const noexcept { return lower_pass && upper_pass && ii_pass; }
};

DpwVerdict dpw_certify(int d, int r, std::int64_t tau);

/// Lower bound on tau forced by freeness: 3(d-1)^2/4 for odd d, 1 + 3d(d-2)/4 for even d.
bool free_lower_bound_check(int d, std::int64_t tau);

/// For d > 7 and tau > d^2-4d+5, the index (1..4) of the matching case:
/// (d^2-3d+3, r=1), (d^2-3d+2, r=1), (d^2-4d+7, r=2), (d^2-4d+6, r=2).
std::optional<int> high_tau_case(int d, int r, std::int64_t tau);

struct CurveReport {
  int d = 0;
  std::int64_t tau = 0;
  std::optional<int> r;
  CurveClass curve_class = CurveClass::Generic;
  std::optional<std::pair<int, int>> exponents;
  std::optional<DpwVerdict> dpw;
  std::optional<bool> free_lower_bound;
  std::optional<int> high_tau_case;
  std::optional<std::int64_t> c2_at_r;
  std::optional<std::string> refusal;
  QciReport qci;
};

/// Runs the q.c.i. pipeline on the partials and classifies the curve. Throws
/// InvariantError when cross-checks between independent tests disagree.
CurveReport analyze_curve(const CurveInput& curve, AnalysisOptions options = {});

/// Fills curve_class, exponents and the high-tau case from the invariants.
CurveClass classify_curve(CurveReport& report);

namespace family {

/// prod_{i=1..d} (x - i*y); needs p > d so the slopes are distinct.
CurveInput lines_through_point(const PrimeField& field, int d);
/// x * (x^{d-1} + y^{d-1} + z^{d-1}); needs p not dividing d-1.
CurveInput smooth_plus_line(const PrimeField& field, int d);
/// (F_a, x*F_a, F_c) with F_a = x^a + y^{a-1} z and F_c = x^c + y^c + z^c,
/// type (a, a+1, c); needs 1 <= a, a+1 <= c and p not dividing c.
QciInput ci_qci(const PrimeField& field, int a, int c);

}  // namespace family

}  // namespace qci

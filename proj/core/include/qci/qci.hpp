#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qci/field.hpp"
#include "qci/matrix.hpp"
#include "qci/poly.hpp"

namespace qci {

/// Three forms F_a, F_b, F_c with a <= b <= c over a common prime field.
///
/// `make` sorts the forms by degree (stably) and remembers where each one
/// came from so reports can echo the caller's order.
class QciInput {
 public:
  static QciInput make(std::array<HomogPoly, 3> forms);

  const std::array<HomogPoly, 3>& forms() const noexcept { return forms_; }
  const HomogPoly& form(int i) const noexcept { return forms_[static_cast<std::size_t>(i)]; }
  int a() const noexcept { return forms_[0].degree(); }
  int b() const noexcept { return forms_[1].degree(); }
  int c() const noexcept { return forms_[2].degree(); }
  const PrimeField& field() const noexcept { return forms_[0].field(); }
  /// Input position of the form stored in sorted slot i.
  const std::array<int, 3>& input_order() const noexcept { return order_; }

  /// Stabilization bound a + b + c - 2.
  int k_star() const noexcept { return a() + b() + c() - 2; }

 private:
  QciInput(std::array<HomogPoly, 3> forms, std::array<int, 3> order)
      : forms_(std::move(forms)), order_(order) {}

  std::array<HomogPoly, 3> forms_;
  std::array<int, 3> order_;
};

enum class DimensionClass { Empty, Dim0, DimGe1 };
std::string to_string(DimensionClass c);

struct AnalysisOptions {
  /// Number of times the plateau window may slide forward by 3 degrees.
  int max_window_extensions = 2;
};

struct HilbertTable {
  std::vector<std::size_t> values;  ///< h_{S/J}(k), k = 0 .. values.size()-1
  int k_star = 0;                   ///< bound in effect after any window extensions
  int extensions = 0;
  std::optional<std::size_t> plateau;
};

struct SyzygyTable {
  int k_min = 0;                     ///< a - c
  int k_max = 0;                     ///< a + b - c + 1 (one past the Koszul degree)
  std::vector<std::size_t> dims;     ///< h^0(E(k)) for k = k_min .. k_max
  int r = 0;
  std::vector<int> generator_degrees;

  std::size_t h0(int k) const { return k < k_min ? 0 : dims.at(static_cast<std::size_t>(k - k_min)); }
};

/// A syzygy (A, B, C) with A F_a + B F_b + C F_c = 0. Components whose degree
/// would be negative are absent.
using Syzygy = std::array<std::optional<HomogPoly>, 3>;

struct BoundsI {
  std::int64_t lower = 0;  ///< c(a+b-c-r)
  std::int64_t upper = 0;  ///< r^2 + r(c-a-b) + ab
  bool lower_pass = false;
  bool upper_pass = false;
};

struct BoundsII {
  bool applicable = false;  ///< 2r > a+b-c
  std::int64_t bound = 0;
  bool pass = true;
};

struct BoundsReport {
  BoundsI i;
  BoundsII ii;
  bool all_pass() const noexcept { return i.lower_pass && i.upper_pass && ii.pass; }
};

/// Twists of a graded free resolution 0 -> (+) O(-u) -> (+) O(-v) -> I_T -> 0.
struct Resolution {
  std::vector<int> generators;  ///< v
  std::vector<int> relations;   ///< u
  friend bool operator==(const Resolution&, const Resolution&) = default;
};

enum class QciClass { CompleteIntersection, AciSplit, C2One, Generic };
std::string to_string(QciClass c);

struct Classification {
  QciClass tag = QciClass::Generic;
  /// Which of the three r = a-c+1 signatures matched, when r = a-c+1.
  std::optional<int> r_case;
  /// (p, m) with E = O(p) + O(m), when E splits.
  std::optional<std::pair<int, int>> split_type;
  std::optional<Resolution> predicted_resolution;
  std::optional<bool> resolution_verified;
};

struct QciInvariants {
  std::int64_t t = 0;
  int r = 0;
  std::int64_t gamma = 0;  ///< ac - t
  int c1 = 0;              ///< c - a - b
  std::int64_t c2 = 0;     ///< ab - t
  std::int64_t c2_at_r = 0;
  BoundsReport bounds;
  int m0 = 0;
  std::size_t h1_at_m0 = 0;
  bool splits = false;
  SyzygyTable syzygies;
  Syzygy r_witness;
  Classification classification;
};

struct QciReport {
  DimensionClass dimension = DimensionClass::Empty;
  HilbertTable hilbert;
  std::optional<QciInvariants> invariants;
};

// Pure numeric identities.

/// r(c-a-b) + ab - t + r^2; throws InvariantError when negative.
std::int64_t c2_at_r(int a, int b, int c, std::int64_t t, int r);
BoundsReport certify_bounds(int a, int b, int c, std::int64_t t, int r);
/// ac - t; throws InvariantError when negative.
std::int64_t linked_degree(int a, int c, std::int64_t t);
/// floor((a+b-c)/2) - 1: one below the normalized twist of E, where
/// h^1 vanishes exactly for split bundles.
int splitting_twist(int a, int b, int c) noexcept;
/// 0 -> O(-r-c) + O(r-a-b) -> O(-a) + O(-b) + O(-c) -> I_T -> 0.
Resolution split_resolution(int a, int b, int c, int r);
/// Resolution of I_T when E(r) has a section vanishing at a single point.
Resolution c2_one_resolution(int a, int b, int c, int r);
/// Matches (a, b, t) against the three signatures allowed when r = a-c+1;
/// nullopt if none fits.
std::optional<int> r_case_signature(int a, int b, int c, std::int64_t t);

/// Degree-by-degree linear algebra on one q.c.i. triple. Results of the
/// per-degree eliminations are cached, so one engine should serve one
/// analysis. Not thread-safe; separate engines are independent.
class QciEngine {
 public:
  explicit QciEngine(QciInput input, AnalysisOptions options = {});

  const QciInput& input() const noexcept { return input_; }
  const PrimeField& field() const noexcept { return input_.field(); }

  /// Matrix of (A,B,C) -> A F_a + B F_b + C F_c from S_{m-a} + S_{m-b} + S_{m-c} to S_m.
  DenseMatrix graded_map_matrix(int m) const;
  std::size_t ideal_dim(int m);
  std::size_t quotient_hilbert(int k);

  const HilbertTable& hilbert_table();
  DimensionClass dimension_class();
  /// Requires Dim0.
  std::size_t degree_t();

  /// Kernel of the graded map in source degree m = k + c, i.e. H^0(E(k)).
  const std::vector<std::vector<Scalar>>& syzygies_at(int k);
  const SyzygyTable& syzygy_table();
  Syzygy minimal_syzygy();

  /// dim (J^sat)_m via g * S_e in J_{m+e}, e = max(1, k*+1-m).
  std::size_t saturation_dim(int m);
  /// h^1(E(k)) = dim (J^sat)_{c+k} - dim J_{c+k}.
  std::size_t h1_E(int k);
  bool splits();

  bool verify_resolution(const Resolution& resolution);

  QciReport report();

 private:
  const EchelonForm& ideal_echelon(int m);
  DenseMatrix ideal_generators(int m) const;
  std::vector<int> source_degrees(int m) const;
  void require_dim0();

  QciInput input_;
  AnalysisOptions options_;
  std::map<int, EchelonForm> echelon_cache_;
  std::map<int, std::vector<std::vector<Scalar>>> syzygy_cache_;
  std::map<int, std::size_t> saturation_cache_;
  std::optional<HilbertTable> hilbert_;
  std::optional<DimensionClass> dimension_;
  std::optional<SyzygyTable> syzygies_;
};

// Free-function forms of the engine operations.

DenseMatrix graded_map_matrix(const QciInput& q, int m);
std::size_t quotient_hilbert(const QciInput& q, int k);
DimensionClass dimension_class(const QciInput& q, AnalysisOptions options = {});
std::size_t degree_t(const QciInput& q, AnalysisOptions options = {});
SyzygyTable syzygy_dims(const QciInput& q, AnalysisOptions options = {});
std::size_t saturation_dim(const QciInput& q, int m, AnalysisOptions options = {});
std::size_t h1_E(const QciInput& q, int k, AnalysisOptions options = {});
bool splits(const QciInput& q, AnalysisOptions options = {});
std::vector<int> syzygy_generator_degrees(const QciInput& q, AnalysisOptions options = {});
bool verify_resolution(const QciInput& q, const Resolution& resolution, AnalysisOptions options = {});
QciReport analyze_qci(const QciInput& q, AnalysisOptions options = {});

}  // namespace qci

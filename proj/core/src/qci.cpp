#include "qci/qci.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qci/errors.hpp"

namespace qci {

QciInput QciInput::make(std::array<HomogPoly, 3> forms) {
  const PrimeField field = forms[0].field();
  for (const auto& f : forms)
    if (!(f.field() == field)) throw GuardError("q.c.i. forms live over different prime fields");
  if (std::all_of(forms.begin(), forms.end(), [](const HomogPoly& f) { return f.is_zero(); }))
    throw GuardError("all three forms are zero");

  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return forms[i].degree() < forms[j].degree(); });
  std::array<HomogPoly, 3> sorted{forms[order[0]], forms[order[1]], forms[order[2]]};

  const std::int64_t degree_sum = static_cast<std::int64_t>(sorted[0].degree()) + sorted[1].degree() + sorted[2].degree();
  if (static_cast<std::int64_t>(field.prime()) <= degree_sum)
    throw GuardError("prime " + std::to_string(field.prime()) + " must exceed a+b+c = " + std::to_string(degree_sum));
  return QciInput(std::move(sorted), order);
}

std::string to_string(DimensionClass c) {
  switch (c) {
    case DimensionClass::Empty: return "empty";
    case DimensionClass::Dim0: return "dim0";
    case DimensionClass::DimGe1: return "dim_ge_1";
  }
  return "?";
}

std::string to_string(QciClass c) {
  switch (c) {
    case QciClass::CompleteIntersection: return "complete-intersection";
    case QciClass::AciSplit: return "aci-split";
    case QciClass::C2One: return "c2-one";
    case QciClass::Generic: return "generic";
  }
  return "?";
}

std::int64_t c2_at_r(int a, int b, int c, std::int64_t t, int r) {
  const std::int64_t value = static_cast<std::int64_t>(r) * (c - a - b) + static_cast<std::int64_t>(a) * b - t +
                             static_cast<std::int64_t>(r) * r;
  if (value < 0)
    throw InvariantError("c2(E(r)) = " + std::to_string(value) + " is negative for (a,b,c,t,r) = (" +
                         std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
                         std::to_string(t) + "," + std::to_string(r) + ")");
  return value;
}

BoundsReport certify_bounds(int a, int b, int c, std::int64_t t, int r) {
  const std::int64_t A = a, B = b, C = c, R = r;
  BoundsReport out;
  out.i.lower = C * (A + B - C - R);
  out.i.upper = R * R + R * (C - A - B) + A * B;
  out.i.lower_pass = out.i.lower <= t;
  out.i.upper_pass = t <= out.i.upper;
  out.ii.applicable = 2 * R > A + B - C;
  if (out.ii.applicable) {
    const std::int64_t s = C - A - B + 2 * R;
    out.ii.bound = out.i.upper - (s + 1) * s / 2;
    out.ii.pass = t <= out.ii.bound;
  }
  return out;
}

std::int64_t linked_degree(int a, int c, std::int64_t t) {
  const std::int64_t gamma = static_cast<std::int64_t>(a) * c - t;
  if (gamma < 0) throw InvariantError("t = " + std::to_string(t) + " exceeds ac; linked degree negative");
  return gamma;
}

int splitting_twist(int a, int b, int c) noexcept {
  // E(floor((a+b-c)/2)) is the normalized twist; test one below it
  const int n = a + b - c;
  const int half = n >= 0 ? n / 2 : -((-n + 1) / 2);
  return half - 1;
}

Resolution split_resolution(int a, int b, int c, int r) { return {{a, b, c}, {r + c, a + b - r}}; }

Resolution c2_one_resolution(int a, int b, int c, int r) {
  return {{c + r - 2, a, b, c}, {c + r - 1, c + r - 1, a + b - r}};
}

std::optional<int> r_case_signature(int a, int b, int c, std::int64_t t) {
  const std::int64_t A = a, C = c;
  if (a == b && t == C * (A - 1)) return 1;
  if (a == b && t == C * (A - 1) + 1) return 2;
  if (b == a + 1 && t == A * C) return 3;
  return std::nullopt;
}

QciEngine::QciEngine(QciInput input, AnalysisOptions options) : input_(std::move(input)), options_(options) {}

std::vector<int> QciEngine::source_degrees(int m) const { return {m - input_.a(), m - input_.b(), m - input_.c()}; }

DenseMatrix QciEngine::ideal_generators(int m) const {
  const auto degs = source_degrees(m);
  std::size_t rows = 0;
  for (int d : degs) rows += dim_S(d);
  const std::size_t cols = dim_S(m);
  DenseMatrix g(rows, cols);
  std::size_t row = 0;
  for (int i = 0; i < 3; ++i) {
    const auto terms = input_.form(i).terms();
    for (const auto& mu : graded_basis(degs[static_cast<std::size_t>(i)])) {
      for (const auto& [mono, coeff] : terms) g(row, monomial_index(mu * mono)) = coeff;
      ++row;
    }
  }
  return g;
}

DenseMatrix QciEngine::graded_map_matrix(int m) const { return ideal_generators(m).transpose(); }

const EchelonForm& QciEngine::ideal_echelon(int m) {
  auto it = echelon_cache_.find(m);
  if (it == echelon_cache_.end()) it = echelon_cache_.emplace(m, row_echelon(field(), ideal_generators(m))).first;
  return it->second;
}

std::size_t QciEngine::ideal_dim(int m) { return m < 0 ? 0 : ideal_echelon(m).pivots.size(); }

std::size_t QciEngine::quotient_hilbert(int k) { return dim_S(k) - ideal_dim(k); }

const HilbertTable& QciEngine::hilbert_table() {
  if (hilbert_) return *hilbert_;
  HilbertTable table;
  table.k_star = std::max(0, input_.k_star());
  auto fill_to = [&](int k_max) {
    for (int k = static_cast<int>(table.values.size()); k <= k_max; ++k) table.values.push_back(quotient_hilbert(k));
  };
  while (true) {
    fill_to(table.k_star + 3);
    const auto tail = std::span(table.values).subspan(static_cast<std::size_t>(table.k_star), 4);
    const bool constant = std::all_of(tail.begin(), tail.end(), [&](std::size_t v) { return v == tail[0]; });
    const bool growing = std::is_sorted(tail.begin(), tail.end()) && tail.back() > tail.front();
    if (constant && tail[0] == 0) {
      dimension_ = DimensionClass::Empty;
      break;
    }
    if (constant) {
      dimension_ = DimensionClass::Dim0;
      table.plateau = tail[0];
      break;
    }
    if (growing) {
      dimension_ = DimensionClass::DimGe1;
      break;
    }
    if (table.extensions >= options_.max_window_extensions) {
      std::string seen;
      for (auto v : tail) seen += (seen.empty() ? "" : ",") + std::to_string(v);
      throw NoPlateauError("Hilbert function has no plateau on [" + std::to_string(table.k_star) + ", " +
                           std::to_string(table.k_star + 3) + "]: " + seen);
    }
    ++table.extensions;
    table.k_star += 3;
  }
  hilbert_ = std::move(table);
  return *hilbert_;
}

DimensionClass QciEngine::dimension_class() {
  hilbert_table();
  return *dimension_;
}

void QciEngine::require_dim0() {
  if (dimension_class() != DimensionClass::Dim0)
    throw GuardError("operation needs a zero-dimensional scheme, input is " + to_string(*dimension_));
}

std::size_t QciEngine::degree_t() {
  require_dim0();
  return *hilbert_->plateau;
}

const std::vector<std::vector<Scalar>>& QciEngine::syzygies_at(int k) {
  auto it = syzygy_cache_.find(k);
  if (it == syzygy_cache_.end())
    it = syzygy_cache_.emplace(k, kernel_basis(field(), graded_map_matrix(k + input_.c()))).first;
  return it->second;
}

namespace {

// Multiplies a syzygy vector of source degree m-1 by a variable, landing in source degree m.
std::vector<Scalar> shift_syzygy(const std::vector<Scalar>& v, const std::vector<int>& degs_below, int var) {
  std::vector<Scalar> out;
  std::size_t offset = 0;
  const Monomial step{var == 0, var == 1, var == 2};
  for (int d : degs_below) {
    const std::size_t lo = dim_S(d);
    const std::size_t hi = dim_S(d + 1);
    std::vector<Scalar> block(hi, 0);
    const auto basis = graded_basis(d);
    for (std::size_t j = 0; j < lo; ++j)
      if (v[offset + j] != 0) block[monomial_index(basis[j] * step)] = v[offset + j];
    out.insert(out.end(), block.begin(), block.end());
    offset += lo;
  }
  return out;
}

}  // namespace

const SyzygyTable& QciEngine::syzygy_table() {
  if (syzygies_) return *syzygies_;
  require_dim0();
  const int a = input_.a(), b = input_.b(), c = input_.c();
  SyzygyTable table;
  table.k_min = a - c;
  table.k_max = a + b - c + 1;
  std::optional<int> r;
  for (int k = table.k_min; k <= table.k_max; ++k) {
    const auto& basis = syzygies_at(k);
    table.dims.push_back(basis.size());
    if (!r && k <= a + b - c && !basis.empty()) r = k;
    if (table.dims.size() > 1 && table.dims.back() < table.dims[table.dims.size() - 2])
      throw InvariantError("h0(E(k)) decreased at k = " + std::to_string(k));

    std::size_t carried = 0;
    if (k > table.k_min) {
      const auto& below = syzygies_at(k - 1);
      if (!below.empty()) {
        DenseMatrix images;
        const auto degs = source_degrees(k - 1 + c);
        for (const auto& v : below)
          for (int var = 0; var < 3; ++var) images.append_row(shift_syzygy(v, degs, var));
        carried = rank(field(), images);
      }
    }
    if (carried > basis.size()) throw InvariantError("syzygy images exceed the syzygy space");
    for (std::size_t n = 0; n < basis.size() - carried; ++n) table.generator_degrees.push_back(k);
  }
  if (!r) throw InvariantError("no syzygy found up to the Koszul degree a+b-c");
  table.r = *r;
  syzygies_ = std::move(table);
  return *syzygies_;
}

Syzygy QciEngine::minimal_syzygy() {
  const int r = syzygy_table().r;
  const auto& basis = syzygies_at(r);
  const auto& v = basis.front();
  const auto degs = source_degrees(r + input_.c());
  Syzygy out;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t n = dim_S(degs[i]);
    if (degs[i] >= 0)
      out[i] = HomogPoly(field(), degs[i], std::vector<Scalar>(v.begin() + static_cast<std::ptrdiff_t>(offset),
                                                               v.begin() + static_cast<std::ptrdiff_t>(offset + n)));
    offset += n;
  }
  return out;
}

std::size_t QciEngine::saturation_dim(int m) {
  if (m < 0) return 0;
  if (auto it = saturation_cache_.find(m); it != saturation_cache_.end()) return it->second;
  const int k_star = hilbert_table().k_star;
  const int e = std::max(1, k_star + 1 - m);
  const int top = m + e;

  const QuotientProjector proj(field(), ideal_echelon(top), dim_S(top));
  const std::size_t qdim = proj.quotient_dim();
  std::size_t result = dim_S(m);
  if (qdim > 0) {
    std::vector<std::vector<Scalar>> normal_forms(dim_S(top));
    for (std::size_t j = 0; j < normal_forms.size(); ++j) {
      std::vector<Scalar> unit(dim_S(top), 0);
      unit[j] = 1;
      normal_forms[j] = proj.project(std::move(unit));
    }
    const auto lows = graded_basis(m);
    const auto shifts = graded_basis(e);
    DenseMatrix system(shifts.size() * qdim, lows.size());
    for (std::size_t s = 0; s < shifts.size(); ++s)
      for (std::size_t col = 0; col < lows.size(); ++col) {
        const auto& nf = normal_forms[monomial_index(lows[col] * shifts[s])];
        for (std::size_t q = 0; q < qdim; ++q) system(s * qdim + q, col) = nf[q];
      }
    result -= rank(field(), system);
  }
  saturation_cache_.emplace(m, result);
  return result;
}

std::size_t QciEngine::h1_E(int k) {
  require_dim0();
  const int m = input_.c() + k;
  const std::size_t sat = saturation_dim(m);
  const std::size_t ideal = ideal_dim(m);
  if (sat < ideal) throw InvariantError("saturation smaller than the ideal in degree " + std::to_string(m));
  return sat - ideal;
}

bool QciEngine::splits() { return h1_E(splitting_twist(input_.a(), input_.b(), input_.c())) == 0; }

bool QciEngine::verify_resolution(const Resolution& resolution) {
  require_dim0();
  if (resolution.generators.size() != resolution.relations.size() + 1) return false;
  const auto t = static_cast<std::int64_t>(degree_t());
  const int k_star = hilbert_table().k_star;
  for (int m = k_star; m <= k_star + 3; ++m) {
    std::int64_t predicted = 0;
    for (int v : resolution.generators) predicted += static_cast<std::int64_t>(dim_S(m - v));
    for (int u : resolution.relations) predicted -= static_cast<std::int64_t>(dim_S(m - u));
    if (static_cast<std::int64_t>(saturation_dim(m)) != predicted) return false;
    if (static_cast<std::int64_t>(dim_S(m)) - predicted != t) return false;
  }
  return true;
}

QciReport QciEngine::report() {
  QciReport rep;
  rep.hilbert = hilbert_table();
  rep.dimension = dimension_class();
  if (rep.dimension != DimensionClass::Dim0) return rep;

  const int a = input_.a(), b = input_.b(), c = input_.c();
  QciInvariants inv;
  inv.t = static_cast<std::int64_t>(degree_t());
  inv.syzygies = syzygy_table();
  inv.r = inv.syzygies.r;
  if (inv.r < a - c || inv.r > a + b - c) throw InvariantError("r outside [a-c, a+b-c]");
  inv.gamma = linked_degree(a, c, inv.t);
  inv.c1 = c - a - b;
  inv.c2 = static_cast<std::int64_t>(a) * b - inv.t;
  inv.c2_at_r = c2_at_r(a, b, c, inv.t, inv.r);
  inv.bounds = certify_bounds(a, b, c, inv.t, inv.r);
  inv.m0 = splitting_twist(a, b, c);
  inv.h1_at_m0 = h1_E(inv.m0);
  inv.splits = inv.h1_at_m0 == 0;
  if (inv.splits != (inv.c2_at_r == 0))
    throw InvariantError("splitting test h1(E(m0)) = " + std::to_string(inv.h1_at_m0) +
                         " disagrees with c2(E(r)) = " + std::to_string(inv.c2_at_r));

  const auto& gens = inv.syzygies.generator_degrees;
  if (gens.size() >= 2 && gens[0] + gens[1] <= a + b - c && !inv.splits)
    throw InvariantError("two syzygy generators with r1 + r2 <= a+b-c but E does not split");

  const int k_star = rep.hilbert.k_star;
  if (saturation_dim(k_star + 1) != ideal_dim(k_star + 1))
    throw InvariantError("ideal not saturated above the stabilization bound");

  inv.r_witness = minimal_syzygy();

  Classification& cls = inv.classification;
  if (inv.r == a - c && inv.gamma != 0) throw InvariantError("r = a-c but T is not the complete intersection (a,c)");
  if (inv.r == a - c + 1) {
    cls.r_case = r_case_signature(a, b, c, inv.t);
    if (!cls.r_case)
      throw InvariantError("r = a-c+1 but (a,b,t) = (" + std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(inv.t) + ") matches none of the three cases");
  }
  if (inv.gamma == 0)
    cls.tag = QciClass::CompleteIntersection;
  else if (inv.c2_at_r == 0)
    cls.tag = QciClass::AciSplit;
  else if (inv.c2_at_r == 1)
    cls.tag = QciClass::C2One;
  else
    cls.tag = QciClass::Generic;

  if (inv.c2_at_r == 0) {
    if (2 * inv.r > a + b - c) throw InvariantError("E splits but 2r > a+b-c");
    cls.split_type = std::pair{-inv.r, c - a - b + inv.r};
    cls.predicted_resolution = split_resolution(a, b, c, inv.r);
  } else if (inv.c2_at_r == 1) {
    if (2 * inv.r > a + b - c + 1) throw InvariantError("c2(E(r)) = 1 but 2r > a+b-c+1");
    cls.predicted_resolution = c2_one_resolution(a, b, c, inv.r);
  }
  if (cls.predicted_resolution) {
    cls.resolution_verified = verify_resolution(*cls.predicted_resolution);
    if (!*cls.resolution_verified) throw InvariantError("predicted resolution of I_T does not match the Hilbert function");
  }

  rep.invariants = std::move(inv);
  return rep;
}

DenseMatrix graded_map_matrix(const QciInput& q, int m) { return QciEngine(q).graded_map_matrix(m); }
std::size_t quotient_hilbert(const QciInput& q, int k) { return QciEngine(q).quotient_hilbert(k); }
DimensionClass dimension_class(const QciInput& q, AnalysisOptions options) {
  return QciEngine(q, options).dimension_class();
}
std::size_t degree_t(const QciInput& q, AnalysisOptions options) { return QciEngine(q, options).degree_t(); }
SyzygyTable syzygy_dims(const QciInput& q, AnalysisOptions options) { return QciEngine(q, options).syzygy_table(); }
std::size_t saturation_dim(const QciInput& q, int m, AnalysisOptions options) {
  return QciEngine(q, options).saturation_dim(m);
}
std::size_t h1_E(const QciInput& q, int k, AnalysisOptions options) { return QciEngine(q, options).h1_E(k); }
bool splits(const QciInput& q, AnalysisOptions options) { return QciEngine(q, options).splits(); }
std::vector<int> syzygy_generator_degrees(const QciInput& q, AnalysisOptions options) {
  return QciEngine(q, options).syzygy_table().generator_degrees;
}
bool verify_resolution(const QciInput& q, const Resolution& resolution, AnalysisOptions options) {
  return QciEngine(q, options).verify_resolution(resolution);
}
QciReport analyze_qci(const QciInput& q, AnalysisOptions options) { return QciEngine(q, options).report(); }

}  // namespace qci

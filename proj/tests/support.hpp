#pragma once

// Test-only oracles and random input generators. The oracles here count
// monomials directly and never touch the linear-algebra path they check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qci/curve.hpp"
#include "qci/matrix.hpp"
#include "qci/poly.hpp"
#include "qci/qci.hpp"

namespace qci::testing {

// --- monomial-ideal oracles ------------------------------------------------

inline bool divides(const Monomial& g, const Monomial& m) { return g.x <= m.x && g.y <= m.y && g.z <= m.z; }

inline bool in_monomial_ideal(const std::vector<Monomial>& gens, const Monomial& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return divides(g, m); });
}

/// dim J_k for J generated by monomials.
inline std::size_t monomial_ideal_dim(const std::vector<Monomial>& gens, int k) {
  std::size_t n = 0;
  for (const auto& m : graded_basis(k)) n += in_monomial_ideal(gens, m);
  return n;
}

/// dim (J^sat)_k: m is in J^sat iff m x^N, m y^N, m z^N all lie in J.
inline std::size_t monomial_saturation_dim(const std::vector<Monomial>& gens, int k, int N = 64) {
  std::size_t n = 0;
  for (const auto& m : graded_basis(k)) {
    const bool in = in_monomial_ideal(gens, m * Monomial{N, 0, 0}) && in_monomial_ideal(gens, m * Monomial{0, N, 0}) &&
                    in_monomial_ideal(gens, m * Monomial{0, 0, N});
    n += in;
  }
  return n;
}

inline HomogPoly monomial_form(const PrimeField& f, const Monomial& m) {
  HomogPoly p(f, m.degree());
  p.set_coeff(m, 1);
  return p;
}

inline QciInput monomial_qci(const PrimeField& f, const std::array<Monomial, 3>& gens) {
  return QciInput::make({monomial_form(f, gens[0]), monomial_form(f, gens[1]), monomial_form(f, gens[2])});
}

inline HomogPoly parse(const std::string& text, const PrimeField& f = PrimeField()) { return parse_poly(text, f).poly; }

inline QciInput qci_of(const std::string& fa, const std::string& fb, const std::string& fc,
                       const PrimeField& f = PrimeField()) {
  return QciInput::make({parse(fa, f), parse(fb, f), parse(fc, f)});
}

/// Evaluates A F_a + B F_b + C F_c, the degrees being inferred from the forms.
inline bool is_syzygy(const QciInput& q, const Syzygy& s) {
  std::optional<HomogPoly> total;
  for (int i = 0; i < 3; ++i) {
    if (!s[static_cast<std::size_t>(i)]) continue;
    HomogPoly term = multiply(*s[static_cast<std::size_t>(i)], q.form(i));
    total = total ? *total + term : term;
  }
  return !total || total->is_zero();
}

// --- random generators -----------------------------------------------------

using Rng = std::mt19937_64;

inline Scalar random_scalar(const PrimeField& f, Rng& rng) {
  return static_cast<Scalar>(std::uniform_int_distribution<std::uint32_t>(0, f.prime() - 1)(rng));
}

inline HomogPoly random_form(const PrimeField& f, int degree, Rng& rng) {
  std::vector<Scalar> dense(dim_S(degree));
  for (auto& c : dense) c = random_scalar(f, rng);
  return HomogPoly(f, degree, std::move(dense));
}

inline DenseMatrix random_matrix(const PrimeField& f, std::size_t rows, std::size_t cols, Rng& rng,
                                 double density = 1.0) {
  DenseMatrix m(rows, cols);
  std::bernoulli_distribution keep(density);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (keep(rng)) m(i, j) = random_scalar(f, rng);
  return m;
}

using Point = std::array<Scalar, 3>;

inline Point random_point(const PrimeField& f, Rng& rng) {
  Point p;
  do {
    for (auto& c : p) c = random_scalar(f, rng);
  } while (p[0] == 0 && p[1] == 0 && p[2] == 0);
  return p;
}

/// Random member of the space of degree-k forms satisfying linear conditions
/// given as rows over the monomial basis; nullopt when only zero qualifies.
inline std::optional<HomogPoly> random_in_kernel(const PrimeField& f, int k, const DenseMatrix& conditions, Rng& rng) {
  std::vector<std::vector<Scalar>> basis;
  if (conditions.rows() == 0) {
    for (std::size_t i = 0; i < dim_S(k); ++i) {
      std::vector<Scalar> e(dim_S(k), 0);
      e[i] = 1;
      basis.push_back(e);
    }
  } else {
    basis = kernel_basis(f, conditions);
  }
  if (basis.empty()) return std::nullopt;
  std::vector<Scalar> v(dim_S(k), 0);
  for (const auto& b : basis) {
    const Scalar s = random_scalar(f, rng);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.fma(v[i], s, b[i]);
  }
  HomogPoly out(f, k, std::move(v));
  if (out.is_zero()) return std::nullopt;
  return out;
}

/// Row of monomial values at a point.
inline std::vector<Scalar> evaluation_row(const PrimeField& f, int k, const Point& p) {
  std::vector<Scalar> row;
  for (const auto& m : graded_basis(k)) row.push_back(monomial_form(f, m).evaluate(p));
  return row;
}

/// Conditions "vanish at every point" (order 1) or "vanish with all partials" (order 2).
inline DenseMatrix point_conditions(const PrimeField& f, int k, const std::vector<Point>& points, int order) {
  DenseMatrix c;
  for (const auto& p : points) {
    if (order == 1) {
      if (k >= 0) c.append_row(evaluation_row(f, k, p));
      continue;
    }
    if (k < 1) {
      c.append_row(evaluation_row(f, k, p));
      continue;
    }
    // partials of the basis monomials evaluated at p
    for (int var = 0; var < 3; ++var) {
      std::vector<Scalar> row;
      for (const auto& m : graded_basis(k)) row.push_back(monomial_form(f, m).derivative(var).evaluate(p));
      c.append_row(row);
    }
  }
  return c;
}

/// Draws a random q.c.i. triple with 1 <= a <= b <= c <= max_degree using a
/// mix of constructions (forms through reduced or fat points, complete
/// intersections, monomial triples, unconstrained forms).
inline std::optional<QciInput> random_qci(const PrimeField& f, Rng& rng, int max_degree = 4) {
  std::uniform_int_distribution<int> deg(1, max_degree);
  std::array<int, 3> d{deg(rng), deg(rng), deg(rng)};
  std::sort(d.begin(), d.end());
  const int strategy = std::uniform_int_distribution<int>(0, 5)(rng);
  std::array<std::optional<HomogPoly>, 3> forms;

  if (strategy <= 1) {
    const int order = strategy + 1;
    const int max_pts = std::max<int>(1, static_cast<int>(dim_S(d[0])) / (order == 1 ? 1 : 3));
    const int n = std::uniform_int_distribution<int>(1, std::max(1, max_pts))(rng);
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) pts.push_back(random_point(f, rng));
    for (int i = 0; i < 3; ++i) forms[i] = random_in_kernel(f, d[i], point_conditions(f, d[i], pts, order), rng);
  } else if (strategy == 2) {
    // T is the complete intersection F_a = F_c = 0
    const HomogPoly fa = random_form(f, d[0], rng);
    const HomogPoly fc = random_form(f, d[2], rng);
    HomogPoly fb = multiply(random_form(f, d[1] - d[0], rng), fa);
    if (d[1] == d[2]) fb = fb + fc.scaled(random_scalar(f, rng));
    forms = {fa, fb, fc};
  } else if (strategy == 3) {
    auto mono = [&](int k) {
      const auto basis = graded_basis(k);
      return monomial_form(f, basis[std::uniform_int_distribution<std::size_t>(0, basis.size() - 1)(rng)]);
    };
    forms = {mono(d[0]), mono(d[1]), mono(d[2])};
  } else if (strategy == 4) {
    // points plus a shared linear-multiple relation between F_a and F_b
    const int n = std::uniform_int_distribution<int>(1, std::max<int>(1, static_cast<int>(dim_S(d[0])) - 1))(rng);
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) pts.push_back(random_point(f, rng));
    forms[0] = random_in_kernel(f, d[0], point_conditions(f, d[0], pts, 1), rng);
    if (forms[0]) forms[1] = multiply(random_form(f, d[1] - d[0], rng), *forms[0]);
    forms[2] = random_in_kernel(f, d[2], point_conditions(f, d[2], pts, 1), rng);
  } else {
    forms = {random_form(f, d[0], rng), random_form(f, d[1], rng), random_form(f, d[2], rng)};
  }
  for (const auto& x : forms)
    if (!x) return std::nullopt;
  return QciInput::make({*forms[0], *forms[1], *forms[2]});
}

/// Random plane curve of degree d built to be singular: products of random
/// factors, curves with prescribed double points, or unions of lines with
/// forced concurrences.
inline HomogPoly random_singular_curve(const PrimeField& f, int d, Rng& rng) {
  const int strategy = std::uniform_int_distribution<int>(0, 2)(rng);
  if (strategy == 0) {
    const int k = std::uniform_int_distribution<int>(1, d - 1)(rng);
    return multiply(random_form(f, k, rng), random_form(f, d - k, rng));
  }
  if (strategy == 1) {
    const int max_nodes = std::max(1, static_cast<int>(dim_S(d)) / 3 - 1);
    const int n = std::uniform_int_distribution<int>(1, max_nodes)(rng);
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) pts.push_back(random_point(f, rng));
    if (auto g = random_in_kernel(f, d, point_conditions(f, d, pts, 2), rng)) return *g;
    return multiply(random_form(f, 1, rng), random_form(f, d - 1, rng));
  }
  // lines, each through one of a few chosen points
  const int hubs = std::uniform_int_distribution<int>(1, 3)(rng);
  std::vector<Point> pts;
  for (int i = 0; i < hubs; ++i) pts.push_back(random_point(f, rng));
  HomogPoly g(f, 0, {1});
  for (int i = 0; i < d; ++i) {
    const Point& p = pts[std::uniform_int_distribution<std::size_t>(0, pts.size() - 1)(rng)];
    auto line = random_in_kernel(f, 1, point_conditions(f, 1, {p}, 1), rng);
    g = multiply(g, line ? *line : random_form(f, 1, rng));
  }
  return g;
}

}  // namespace qci::testing

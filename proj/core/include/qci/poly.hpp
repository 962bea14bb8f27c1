#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qci/field.hpp"

namespace qci {

/// x^i y^j z^k.
struct Monomial {
  int x = 0;
  int y = 0;
  int z = 0;

  int degree() const noexcept { return x + y + z; }
  Monomial operator*(const Monomial& o) const noexcept { return {x + o.x, y + o.y, z + o.z}; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// dim S_k = C(k+2, 2), zero for negative k.
std::size_t dim_S(int k) noexcept;

/// Position of a monomial inside its degree, graded lex with x > y > z:
/// x^k, x^{k-1}y, x^{k-1}z, x^{k-2}y^2, ...
inline std::size_t monomial_index(const Monomial& m) noexcept {
  const auto rest = static_cast<std::size_t>(m.y + m.z);
  return rest * (rest + 1) / 2 + static_cast<std::size_t>(m.z);
}

/// All monomials of degree k in the fixed order; empty for k < 0.
std::vector<Monomial> graded_basis(int k);

/// Homogeneous form in k[x,y,z] over F_p, stored densely over the graded
/// basis of its degree. The zero form keeps its declared degree.
class HomogPoly {
 public:
  HomogPoly(PrimeField field, int degree);
  HomogPoly(PrimeField field, int degree, std::vector<Scalar> dense);

  static HomogPoly from_terms(PrimeField field, int degree,
                              std::span<const std::pair<Monomial, std::int64_t>> terms);

  const PrimeField& field() const noexcept { return field_; }
  int degree() const noexcept { return degree_; }
  bool is_zero() const noexcept;

  std::span<const Scalar> dense() const noexcept { return coeffs_; }
  Scalar coeff(const Monomial& m) const noexcept;
  void set_coeff(const Monomial& m, Scalar value);

  /// Nonzero terms in basis order.
  std::vector<std::pair<Monomial, Scalar>> terms() const;

  /// Value at a point of F_p^3.
  Scalar evaluate(std::array<Scalar, 3> point) const;

  HomogPoly operator+(const HomogPoly& o) const;
  HomogPoly operator-(const HomogPoly& o) const;
  HomogPoly scaled(Scalar s) const;

  /// d/dx (var = 0), d/dy (1) or d/dz (2); a degree-0 form differentiates to zero of degree 0.
  HomogPoly derivative(int var) const;

  /// Canonical text accepted by parse_poly, e.g. "2*x^2*y - z^3".
  std::string to_string() const;

  friend bool operator==(const HomogPoly&, const HomogPoly&) = default;

 private:
  PrimeField field_;
  int degree_;
  std::vector<Scalar> coeffs_;
};

HomogPoly multiply(const HomogPoly& g, const HomogPoly& h);

/// (f_x, f_y, f_z).
std::array<HomogPoly, 3> partials(const HomogPoly& f);

HomogPoly variable(PrimeField field, int var);

struct ParsedPoly {
  HomogPoly poly;
  /// Every coefficient vanished mod p although the text was not the zero
  /// polynomial over the integers (or cancelled to zero).
  bool vanished_mod_p = false;
};

/// Grammar: terms joined by '+'/'-'; term = [integer]['*'] factor ('*' factor)*,
/// factor = x|y|z ['^' positive-integer]. Whitespace is ignored and integers
/// may be arbitrarily long. Throws ParseError on syntax or homogeneity errors.
ParsedPoly parse_poly(std::string_view text, const PrimeField& field);

}  // namespace qci

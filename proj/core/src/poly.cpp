#include "qci/poly.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <tuple>

#include "qci/errors.hpp"

namespace qci {

std::size_t dim_S(int k) noexcept {
  if (k < 0) return 0;
  const auto n = static_cast<std::size_t>(k);
  return (n + 2) * (n + 1) / 2;
}

std::vector<Monomial> graded_basis(int k) {
  std::vector<Monomial> out;
  out.reserve(dim_S(k));
  for (int i = k; i >= 0; --i)
    for (int j = k - i; j >= 0; --j) out.push_back({i, j, k - i - j});
  return out;
}

HomogPoly::HomogPoly(PrimeField field, int degree) : field_(field), degree_(degree), coeffs_(dim_S(degree), 0) {
  if (degree < 0) throw GuardError("homogeneous polynomial with negative degree");
}

HomogPoly::HomogPoly(PrimeField field, int degree, std::vector<Scalar> dense)
    : field_(field), degree_(degree), coeffs_(std::move(dense)) {
  if (degree < 0) throw GuardError("homogeneous polynomial with negative degree");
  if (coeffs_.size() != dim_S(degree)) throw GuardError("dense coefficient vector has wrong length");
  for (auto& c : coeffs_) c %= field_.prime();
}

HomogPoly HomogPoly::from_terms(PrimeField field, int degree,
                                std::span<const std::pair<Monomial, std::int64_t>> terms) {
  HomogPoly f(field, degree);
  for (const auto& [m, c] : terms) {
    if (m.degree() != degree || m.x < 0 || m.y < 0 || m.z < 0)
      throw GuardError("term does not have the declared degree");
    auto& slot = f.coeffs_[monomial_index(m)];
    slot = field.add(slot, field.from_int(c));
  }
  return f;
}

bool HomogPoly::is_zero() const noexcept {
  for (auto c : coeffs_)
    if (c != 0) return false;
  return true;
}

Scalar HomogPoly::coeff(const Monomial& m) const noexcept {
  if (m.degree() != degree_) return 0;
  return coeffs_[monomial_index(m)];
}

void HomogPoly::set_coeff(const Monomial& m, Scalar value) {
  if (m.degree() != degree_) throw GuardError("monomial degree differs from polynomial degree");
  coeffs_[monomial_index(m)] = value % field_.prime();
}

std::vector<std::pair<Monomial, Scalar>> HomogPoly::terms() const {
  std::vector<std::pair<Monomial, Scalar>> out;
  const auto basis = graded_basis(degree_);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coeffs_[i] != 0) out.emplace_back(basis[i], coeffs_[i]);
  return out;
}

namespace {

Scalar power(const PrimeField& f, Scalar base, int e) {
  Scalar acc = 1;
  for (int i = 0; i < e; ++i) acc = f.mul(acc, base);
  return acc;
}

void require_same_shape(const HomogPoly& a, const HomogPoly& b) {
  if (!(a.field() == b.field())) throw GuardError("polynomials over different fields");
  if (a.degree() != b.degree()) throw GuardError("adding forms of different degrees");
}

}  // namespace

Scalar HomogPoly::evaluate(std::array<Scalar, 3> point) const {
  Scalar acc = 0;
  for (const auto& [m, c] : terms()) {
    Scalar v = c;
    v = field_.mul(v, power(field_, point[0], m.x));
    v = field_.mul(v, power(field_, point[1], m.y));
    v = field_.mul(v, power(field_, point[2], m.z));
    acc = field_.add(acc, v);
  }
  return acc;
}

HomogPoly HomogPoly::operator+(const HomogPoly& o) const {
  require_same_shape(*this, o);
  HomogPoly r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = field_.add(coeffs_[i], o.coeffs_[i]);
  return r;
}

HomogPoly HomogPoly::operator-(const HomogPoly& o) const {
  require_same_shape(*this, o);
  HomogPoly r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = field_.sub(coeffs_[i], o.coeffs_[i]);
  return r;
}

HomogPoly HomogPoly::scaled(Scalar s) const {
  HomogPoly r = *this;
  for (auto& c : r.coeffs_) c = field_.mul(c, s);
  return r;
}

HomogPoly HomogPoly::derivative(int var) const {
  if (var < 0 || var > 2) throw GuardError("variable index out of range");
  if (degree_ == 0) return HomogPoly(field_, 0);
  HomogPoly d(field_, degree_ - 1);
  for (const auto& [m, c] : terms()) {
    Monomial lowered = m;
    int e = 0;
    if (var == 0) e = lowered.x--;
    if (var == 1) e = lowered.y--;
    if (var == 2) e = lowered.z--;
    if (e == 0) continue;
    auto& slot = d.coeffs_[monomial_index(lowered)];
    slot = field_.add(slot, field_.mul(c, field_.from_int(e)));
  }
  return d;
}

std::string HomogPoly::to_string() const {
  const auto ts = terms();
  if (ts.empty()) {
    if (degree_ == 0) return "0";
    return degree_ == 1 ? "0*x" : "0*x^" + std::to_string(degree_);
  }
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : ts) {
    const std::int64_t s = field_.to_signed(c);
    const std::int64_t mag = s < 0 ? -s : s;
    if (first) {
      if (s < 0) out << '-';
    } else {
      out << (s < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    const char names[3] = {'x', 'y', 'z'};
    const int exps[3] = {m.x, m.y, m.z};
    for (int v = 0; v < 3; ++v) {
      if (exps[v] == 0) continue;
      std::string fct(1, names[v]);
      if (exps[v] > 1) fct += "^" + std::to_string(exps[v]);
      factors.push_back(std::move(fct));
    }
    bool need_star = false;
    if (mag != 1 || factors.empty()) {
      out << mag;
      need_star = true;
    }
    for (const auto& fct : factors) {
      if (need_star) out << '*';
      out << fct;
      need_star = true;
    }
  }
  return out.str();
}

HomogPoly multiply(const HomogPoly& g, const HomogPoly& h) {
  if (!(g.field() == h.field())) throw GuardError("polynomials over different fields");
  const PrimeField& f = g.field();
  HomogPoly out(f, g.degree() + h.degree());
  std::vector<Scalar> acc(dim_S(out.degree()), 0);
  const auto gt = g.terms();
  const auto ht = h.terms();
  for (const auto& [mg, cg] : gt)
    for (const auto& [mh, ch] : ht) {
      auto& slot = acc[monomial_index(mg * mh)];
      slot = f.fma(slot, cg, ch);
    }
  return HomogPoly(f, out.degree(), std::move(acc));
}

std::array<HomogPoly, 3> partials(const HomogPoly& f) {
  if (f.degree() < 1) throw GuardError("partials need a form of degree at least 1");
  return {f.derivative(0), f.derivative(1), f.derivative(2)};
}

HomogPoly variable(PrimeField field, int var) {
  HomogPoly v(field, 1);
  v.set_coeff({var == 0, var == 1, var == 2}, 1);
  return v;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const PrimeField& field) : text_(text), field_(field) {}

  ParsedPoly run() {
    struct Term {
      Monomial m;
      Scalar coeff;
      bool nonzero_over_z;
      std::size_t pos;
    };
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      skip_ws();
      const std::size_t start = pos_;
      auto [m, c, nz] = term();
      if (negative) c = field_.neg(c);
      terms.push_back({m, c, nz, start});
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }

    const int degree = terms.front().m.degree();
    bool any_nonzero_over_z = false;
    for (const auto& t : terms) {
      if (t.m.degree() != degree) throw ParseError("non-homogeneous polynomial", t.pos);
      any_nonzero_over_z = any_nonzero_over_z || t.nonzero_over_z;
    }
    std::vector<Scalar> dense(dim_S(degree), 0);
    for (const auto& t : terms) {
      auto& slot = dense[monomial_index(t.m)];
      slot = field_.add(slot, t.coeff);
    }
    HomogPoly result(field_, degree, std::move(dense));
    const bool vanished = result.is_zero() && any_nonzero_over_z;
    return {std::move(result), vanished};
  }

 private:
  struct TermValue {
    Monomial m;
    Scalar coeff;
    bool nonzero_over_z;
  };

  TermValue term() {
    Scalar coeff = 1;
    bool nonzero = true;
    bool have_number = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::tie(coeff, nonzero) = integer();
      have_number = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || !is_var(peek())) fail("expected variable after '*'");
      }
    }
    Monomial m;
    bool have_factor = false;
    while (!at_end() && is_var(peek())) {
      const char v = text_[pos_++];
      int e = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        e = exponent();
        skip_ws();
      }
      (v == 'x' ? m.x : v == 'y' ? m.y : m.z) += e;
      have_factor = true;
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || !is_var(peek())) fail("expected variable after '*'");
      }
    }
    if (!have_number && !have_factor) fail("expected a term");
    return {m, coeff, nonzero};
  }

  std::pair<Scalar, bool> integer() {
    std::uint64_t acc = 0;
    bool nonzero = false;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      const int digit = text_[pos_++] - '0';
      nonzero = nonzero || digit != 0;
      acc = (acc * 10 + static_cast<std::uint64_t>(digit)) % field_.prime();
    }
    return {static_cast<Scalar>(acc), nonzero};
  }

  int exponent() {
    const std::size_t start = pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (text_[pos_++] - '0');
      if (value > 10000) throw ParseError("exponent too large", start);
    }
    if (value == 0) throw ParseError("exponent must be positive", start);
    return static_cast<int>(value);
  }

  static bool is_var(char c) { return c == 'x' || c == 'y' || c == 'z'; }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    if (at_end()) throw ParseError(what + ", found end of input", pos_);
    throw ParseError(what + ", found '" + std::string(1, peek()) + "'", pos_);
  }

  std::string_view text_;
  PrimeField field_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedPoly parse_poly(std::string_view text, const PrimeField& field) { return Parser(text, field).run(); }

}  // namespace qci

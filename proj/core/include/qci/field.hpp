#pragma once

#include <cstdint>

namespace qci {

/// Residue in [0, p) of the prime field owned by a PrimeField context.
using Scalar = std::uint32_t;

/// Arithmetic context for F_p with a word-size prime p < 2^31.
///
/// The modulus is checked by trial division on construction. Products go
/// through 64-bit intermediates, so every operation is exact.
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t prime() const noexcept { return p_; }

  Scalar add(Scalar a, Scalar b) const noexcept {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// a + b*c
  Scalar fma(Scalar a, Scalar b, Scalar c) const noexcept {
    return static_cast<Scalar>((a + static_cast<std::uint64_t>(b) * c) % p_);
  }
  /// Multiplicative inverse; throws GuardError on zero.
  Scalar inv(Scalar a) const;

  Scalar from_int(std::int64_t v) const noexcept {
    const std::int64_t m = v % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(m < 0 ? m + p_ : m);
  }
  /// Symmetric lift to (-p/2, p/2].
  std::int64_t to_signed(Scalar a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace qci

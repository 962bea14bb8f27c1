#include "qci/field.hpp"

#include <string>

#include "qci/errors.hpp"

namespace qci {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw GuardError("prime " + std::to_string(p) + " does not fit below 2^31");
  if (!is_prime(p)) throw GuardError(std::to_string(p) + " is not prime");
}

Scalar PrimeField::inv(Scalar a) const {
  if (a == 0) throw GuardError("inverse of zero in F_" + std::to_string(p_));
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  return from_int(t);
}

}  // namespace qci

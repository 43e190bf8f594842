#include "grhom/field.hpp"

#include <string>

#include "grhom/errors.hpp"

namespace grhom {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw FieldError("field characteristic " + std::to_string(p) +
                     " is not a prime below 2^31");
  }
}

coeff PrimeField::inv(coeff a) const {
  if (a == 0) throw FieldError("inverse of zero");
  if (p_ == 2) return 1;
  // Fermat: a^(p-2)
  coeff result = 1;
  coeff base = a;
  std::uint32_t e = p_ - 2;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

coeff PrimeField::from_int(long long value) const noexcept {
  long long r = value % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<coeff>(r);
}

}  // namespace grhom

#pragma once

#include <cstdint>

namespace grhom {

using coeff = std::uint32_t;

/**
 * @brief The prime field GF(p). Elements are plain integers in [0, p).
 *
 * The characteristic is validated on construction; p must be a prime
 * below 2^31 so that products fit into 64 bits.
 */
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p = 2);

  std::uint32_t characteristic() const noexcept { return p_; }

  coeff add(coeff a, coeff b) const noexcept {
    coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  coeff sub(coeff a, coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  coeff neg(coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  coeff mul(coeff a, coeff b) const noexcept {
    return static_cast<coeff>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  /// Throws FieldError on zero.
  coeff inv(coeff a) const;
  coeff div(coeff a, coeff b) const { return mul(a, inv(b)); }

  /// Reduces a signed integer literal mod p, so -1 maps to p-1.
  coeff from_int(long long value) const noexcept;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace grhom

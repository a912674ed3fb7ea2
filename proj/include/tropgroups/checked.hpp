#pragma once

#include <cstdint>
#include <stdexcept>

#include <gmpxx.h>

namespace tropgroups {

// int64 arithmetic that throws instead of wrapping.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in multiplication");
  return r;
}

static_assert(sizeof(long) == sizeof(std::int64_t), "GMP bridge assumes LP64");

inline mpz_class from_int64(std::int64_t x) { return mpz_class(static_cast<long>(x)); }

inline std::int64_t to_int64(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  throw std::overflow_error("integer does not fit in int64");
}

}  // namespace tropgroups

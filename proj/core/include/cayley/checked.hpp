#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "cayley/error.hpp"

namespace cayley::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b, const char* op) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError(std::string("integer overflow in ") + op);
  }
  return out;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b, const char* op) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw OverflowError(std::string("integer overflow in ") + op);
  }
  return out;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b, const char* op) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError(std::string("integer overflow in ") + op);
  }
  return out;
}

inline std::int64_t neg(std::int64_t a, const char* op) {
  if (a == std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError(std::string("integer overflow in ") + op);
  }
  return -a;
}

inline std::int64_t abs(std::int64_t a, const char* op) {
  return a < 0 ? neg(a, op) : a;
}

// a + b * c
inline std::int64_t fma(std::int64_t a, std::int64_t b, std::int64_t c,
                        const char* op) {
  return add(a, mul(b, c, op), op);
}

// Floor division and the matching nonnegative remainder (for b > 0).
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
  std::int64_t r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) r += b;
  return r;
}

struct ExtendedGcd {
  std::int64_t g;  // >= 0
  std::int64_t x;  // a*x + b*y == g
  std::int64_t y;
};

inline ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b,
                                const char* op) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = sub(old_r, mul(q, r, op), op);
    old_r = r;
    r = tmp;
    tmp = sub(old_s, mul(q, s, op), op);
    old_s = s;
    s = tmp;
    tmp = sub(old_t, mul(q, t, op), op);
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    return {neg(old_r, op), neg(old_s, op), neg(old_t, op)};
  }
  return {old_r, old_s, old_t};
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b, const char* op) {
  return std::gcd(abs(a, op), abs(b, op));
}

}  // namespace cayley::checked

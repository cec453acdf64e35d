#pragma once

#include <cstdint>
#include <string>

#include "mcgh/error.hpp"

// Overflow-checked 64-bit arithmetic. Wraparound is never allowed to leak
// into a homology coefficient or a cochain value.
namespace mcgh {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow,
                std::to_string(a) + " + " + std::to_string(b));
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow,
                std::to_string(a) + " - " + std::to_string(b));
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorCode::Overflow,
                std::to_string(a) + " * " + std::to_string(b));
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

// Least non-negative residue.
inline Int mod_floor(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace mcgh

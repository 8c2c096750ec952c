#ifndef CONGLAT_BASE_HPP_
#define CONGLAT_BASE_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace conglat {

// All counts and sequence values are exact 64-bit integers; arithmetic that
// could wrap goes through the checked_* helpers, which throw instead.
using Int = std::int64_t;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OverflowError : Error {
  using Error::Error;
};

struct TooLargeError : Error {
  using Error::Error;
};

struct GroupTooLargeError : Error {
  using Error::Error;
};

struct LatticeTooLargeError : Error {
  using Error::Error;
};

struct MissingQError : Error {
  using Error::Error;
};

struct QNotPrimePowerError : Error {
  using Error::Error;
};

struct IndexOutOfRangeError : Error {
  using Error::Error;
};

struct NotAssociativeError : Error {
  int a, b, c;  // witness triple: a*(b*c) != (a*b)*c
  NotAssociativeError(int a_, int b_, int c_)
      : Error("product is not associative at (" + std::to_string(a_) + ", "
              + std::to_string(b_) + ", " + std::to_string(c_) + ")"),
        a(a_),
        b(b_),
        c(c_) {}
};

struct NotASubalgebraError : Error {
  using Error::Error;
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in addition");
  }
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in subtraction");
  }
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in multiplication");
  }
  return r;
}

inline Int checked_pow(Int base, Int exp) {
  Int r = 1;
  for (Int i = 0; i < exp; ++i) {
    r = checked_mul(r, base);
  }
  return r;
}

}  // namespace conglat

#endif  // CONGLAT_BASE_HPP_

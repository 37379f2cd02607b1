#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symsum {

using i64 = std::int64_t;

// All lattice arithmetic is exact 64-bit integer arithmetic.  Documented
// input bounds (|coefficient| <= 10^3, rank <= 32, small gram entries) keep
// every intermediate far below the 64-bit range; if a computation ever does
// overflow we abort with a diagnostic instead of wrapping.
struct overflow_error : std::runtime_error {
    explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw overflow_error("integer overflow in add(" + std::to_string(a) + ", " + std::to_string(b) + ")");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw overflow_error("integer overflow in sub(" + std::to_string(a) + ", " + std::to_string(b) + ")");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw overflow_error("integer overflow in mul(" + std::to_string(a) + ", " + std::to_string(b) + ")");
    return r;
}

inline i64 checked_neg(i64 a) { return checked_sub(0, a); }

} // namespace symsum

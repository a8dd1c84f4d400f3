#pragma once

#include <gmpxx.h>

#include <span>
#include <stdexcept>

namespace welsch {

// All invariant values are exact integers; mpz carries them without overflow.
using Int = mpz_class;

namespace detail {
[[noreturn]] void check_fail(const char* what);
}

// Internal consistency check that stays on in release builds. The conditions
// guarded by it (exact divisibility, dimension bookkeeping) are cheap relative
// to the big-integer work around them.
inline void internal_check(bool ok, const char* what) {
  if (!ok) detail::check_fail(what);
}

// n!, backed by a growing per-thread table.
const Int& factorial(long n);

// C(n, k); zero outside the triangle.
Int binomial(long n, long k);

// (sum parts)! / prod(parts!) == multinomial coefficient of the parts.
Int multinomial(std::span<const long> parts);

// Quotient of an exact division; refuses a nonzero remainder.
Int exact_div(const Int& num, const Int& den);

}  // namespace welsch

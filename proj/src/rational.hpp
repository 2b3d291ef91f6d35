#pragma once

// Exact rational scalars.  Arithmetic is delegated to GMP's C++ layer; the
// canonical-form invariant (coprime numerator/denominator, positive
// denominator) is maintained by mpq_class itself.

#include <gmpxx.h>

#include <string>

#include "errors.hpp"

namespace conchoid {

using Integer  = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline Integer numerator(const Rational& r) { return r.get_num(); }
inline Integer denominator(const Rational& r) { return r.get_den(); }

// Parses "p", "-p", "p/q" with arbitrary-precision parts.  Rejects q == 0.
Rational parse_rational(const std::string& text);

// Renders "p" or "p/q"; the canonical form has q > 0 and gcd(p, q) = 1.
std::string to_string(const Rational& r);

} // namespace conchoid

#pragma once

#include <gmpxx.h>

namespace chern {

using Integer = mpz_class;
using Rational = mpq_class;

/** Generalized binomial coefficient n(n-1)...(n-k+1)/k!, valid for negative n. */
Integer binomial(Integer const &n, long k);

Integer factorial(long n);

} // namespace chern

#pragma once

#include <gmpxx.h>

#include <string>

namespace matmor {

using Rat = mpq_class;
using BigInt = mpz_class;

// base^e with e possibly negative; rat_pow(0, 0) = 1 by convention.
Rat rat_pow(const Rat& base, long e);

BigInt binomial(unsigned n, unsigned k);

std::string rat_str(const Rat& r);           // "a" or "a/b", canonicalized
Rat rat_parse(const std::string& s);         // accepts "a" or "a/b"

}  // namespace matmor

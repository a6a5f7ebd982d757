#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace lzeta {

using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational rational(long long num, long long den = 1) {
    Rational r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}

/// Canonical rendering: "a" for integers, "a/b" otherwise (b > 0).
std::string to_string(const Rational& r);

/// Inverse of to_string; accepts "a" and "a/b".
Rational rational_from_string(const std::string& s);

/// p-adic valuation of a nonzero integer.
long long ord_p(const BigInt& n, long long p);

/// p-adic valuation of a nonzero rational (can be negative).
long long ord_p(const Rational& r, long long p);

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace lzeta

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lzeta/errors.hpp"
#include "lzeta/rational.hpp"

namespace lzeta {

/// Exponent pair (i, j) of a monomial x^i y^j.
struct LatticePoint {
    long long i = 0;
    long long j = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Term order used everywhere a deterministic order is needed:
/// by total degree i+j, then by (i, j) lexicographically.
struct GradedLex {
    bool operator()(const LatticePoint& a, const LatticePoint& b) const {
        __int128 da = static_cast<__int128>(a.i) + a.j;
        __int128 db = static_cast<__int128>(b.i) + b.j;
        if (da != db) return da < db;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

/// Bivariate Laurent polynomial over Q. Zero coefficients are never stored;
/// the zero polynomial is the empty term map. Immutable in practice: all
/// operations return new values.
class LaurentPolynomial {
public:
    using TermMap = std::map<LatticePoint, Rational, GradedLex>;

    LaurentPolynomial() = default;

    static LaurentPolynomial monomial(const Rational& c, LatticePoint e);
    static LaurentPolynomial constant(const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient of x^i y^j (zero if absent).
    Rational coeff(LatticePoint e) const;

    LaurentPolynomial operator-() const;
    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial pow(unsigned long long k) const;

    /// Multiply by x^di y^dj.
    LaurentPolynomial shifted(long long di, long long dj) const;

    bool operator==(const LaurentPolynomial& o) const;

    /// Canonical rendering, graded-lex term order; parse() inverts it.
    std::string to_string() const;

private:
    void add_term(LatticePoint e, const Rational& c);
    TermMap terms_;
};

/// Parse the expression grammar:
///   expression := ['+'|'-'] term (('+'|'-') term)*
///   term       := [rational '*'?] factor ('*'? factor)*  |  rational
///   factor     := ('x'|'y') ['^' signed-integer]
///               | '(' expression ')' ['^' unsigned-integer]
///   rational   := integer ['/' positive-integer]
/// Whitespace is insignificant; parenthesized powers are expanded eagerly.
/// Throws ParseError (with position) on syntax errors and exponents outside
/// signed 64-bit.
LaurentPolynomial parse(std::string_view text);

/// The exponent support of f, in graded-lex order.
std::vector<LatticePoint> support(const LaurentPolynomial& f);

/// x^n y^m * f with minimal shifts making all exponents nonnegative.
struct ClearedPolynomial {
    LaurentPolynomial poly;
    LatticePoint shift;  // (n, m), both >= 0
};

/// Throws Error for the zero polynomial.
ClearedPolynomial clear_denominators(const LaurentPolynomial& f);

/// Formal partials (df/dx, df/dy) with Laurent exponent rules.
std::pair<LaurentPolynomial, LaurentPolynomial> gradient(const LaurentPolynomial& f);

/// Laurent polynomial with coefficients in the prime field F_p.
struct FpLaurent {
    long long p = 0;
    std::map<LatticePoint, long long, GradedLex> terms;  // residues in [1, p-1]
    bool is_zero() const { return terms.empty(); }
};

bool is_prime(long long p);

/// Coefficient-wise reduction; terms that vanish mod p are dropped.
/// Throws BadPrime if p is not prime or divides a coefficient denominator.
FpLaurent reduce_mod_p(const LaurentPolynomial& f, long long p);

/// Evaluate at a torus point (x, y nonzero residues); negative exponents use
/// x^(p-1) = 1.
long long fp_eval(const FpLaurent& f, long long x, long long y);

std::pair<FpLaurent, FpLaurent> fp_gradient(const FpLaurent& f);

// Modular helpers shared by the residue and oracle code.
long long mod_mul(long long a, long long b, long long m);
long long mod_pow(long long base, long long exp, long long m);
long long mod_inv(long long a, long long m);  // gcd(a, m) = 1

}  // namespace lzeta

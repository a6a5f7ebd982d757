#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lzeta/fans.hpp"

namespace lzeta {

struct PrimeFieldConfig {
    long long p;
};

struct Witness {
    long long x = 0;
    long long y = 0;
    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Exact count of (x, y) in (F_p^x)^2 with g(x, y) = 0, by exhaustive
/// evaluation. g must be in cleared form (nonnegative exponents). Large
/// fields are scanned in parallel strips; the count is the same either way.
long long torus_zero_count(const FpLaurent& g);

struct NondegenCheck {
    bool nondegenerate = false;
    std::optional<Witness> witness;  // present iff degenerate
};

/// Clears denominators, reduces mod p, and searches (F_p^x)^2 for a common
/// zero of the cleared polynomial and both partials. Throws BadPrime when p
/// divides a coefficient denominator or p <= a clearing shift (the reduction
/// argument needs the shift exponents nonzero mod p).
NondegenCheck is_face_nondegenerate(const LaurentPolynomial& f_a, long long p);

struct FaceCheckEntry {
    std::string label;          // cone label, or "a=0" for the full polynomial
    Face face;
    LaurentPolynomial cleared;  // cleared face function that was tested
    bool degenerate = false;
    std::optional<Witness> witness;
};

struct NondegeneracyReport {
    long long p = 0;
    std::vector<FaceCheckEntry> entries;
    bool overall = false;  // AND over entries of (not degenerate)
};

/// Weak non-degeneracy: one check per face arising from the cones of the
/// partition (each distinct face is scanned once), plus the a = 0 check on f
/// itself.
NondegeneracyReport check_weak_nondegeneracy(const LaurentPolynomial& f,
                                             const ConicalPartition& part, long long p);

/// Khovanskii-style non-degeneracy: every vertex, every edge, and the full
/// polytope.
NondegeneracyReport check_khovanskii_nondegeneracy(const LaurentPolynomial& f, long long p);

/// N_Delta of a cone: torus zero count of the reduced cleared face function.
long long count_N_delta(const LaurentPolynomial& f, const Cone& c, long long p);

/// Thrown by the pipeline when the weak check fails.
struct DegeneracyError : Error {
    explicit DegeneracyError(NondegeneracyReport r)
        : Error("polynomial is weakly degenerate over F_" + std::to_string(r.p)),
          report(std::move(r)) {}
    NondegeneracyReport report;
};

}  // namespace lzeta

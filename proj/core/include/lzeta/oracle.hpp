#pragma once

#include <utility>

#include "lzeta/laurent.hpp"

namespace lzeta {

/// Truncated p-adic box: digit prefixes known mod p^level, times valuation
/// offsets, i.e. p^val_u (prefix_u + p^level Z_p) x p^val_v (...).
struct PadicCoset {
    long long prefix_u = 1;
    long long prefix_v = 1;
    int level = 1;      // >= 1
    int val_u = 0;      // >= 0
    int val_v = 0;
};

/// Certified enclosure: the true integral lies in
/// [value - error_bound, value + error_bound] for 0 < s < alpha.
struct IntegralEstimate {
    double value = 0;
    double error_bound = 0;
    double resolved_mass = 0;  // fraction of the domain determined exactly
    double tail_bound = 0;     // part of error_bound from the lattice truncation
    long long p = 0;
    double s = 0;
    int depth = 0;
    int truncation = 0;  // M; 0 when not applicable
    int min_m = 0;
    int min_n = 0;
};

/// Integral of |f(x,y)|^s over the unit torus (R_K^x)^2 by recursive coset
/// refinement to the given depth. Requires s > 0 and p-integral coefficients.
/// Cosets whose valuation is undetermined at full depth contribute the
/// midpoint of their possible range, with the half-range in error_bound.
IntegralEstimate unit_torus_integral(const LaurentPolynomial& f, long long p, double s,
                                     int depth);

/// Integral of |f|^s over { ord(x) >= m0, ord(y) >= n0 } minus the axes:
/// the stratum sum over min_val <= (m,n) <= (M,M) of
/// q^{-m-n} int |f(p^m u, p^n v)|^s |du dv|, each stratum integrated by coset
/// refinement, plus a geometric bound for the discarded tail. Requires
/// 0 < s < alpha(f). min_val = (0,0) gives Z0(s, f).
IntegralEstimate truncated_Z0(const LaurentPolynomial& f, long long p, double s, int M,
                              int depth, std::pair<int, int> min_val = {0, 0},
                              int threads = 0);

/// Same stratum sum, but each stratum evaluated by the stationary-phase
/// closed form q^{-d(m,n)s} q^{-2}((q-1)^2 + N_a (q^{-s}-1)/(1-q^{-s-1}))
/// instead of coset refinement. Requires weak non-degeneracy (throws
/// DegeneracyError) and a 2-dimensional Newton polytope. Used as the formula
/// side for restricted domains.
IntegralEstimate stationary_phase_sum(const LaurentPolynomial& f, long long p, double s,
                                      int M, std::pair<int, int> min_val = {0, 0});

/// sup of s-values for which the defining sum converges (min over the
/// quadrant's extreme directions of ||a|| / -d(a) where d(a) < 0); +infinity
/// is returned as HUGE_VAL. Works for hulls of any dimension.
double oracle_alpha(const LaurentPolynomial& f);

}  // namespace lzeta

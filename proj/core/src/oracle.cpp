#include "lzeta/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <map>
#include <thread>
#include <vector>

#include "lzeta/geometry.hpp"
#include "lzeta/residue.hpp"

namespace lzeta {

namespace {

// Rounding allowance added to certified bounds computed in double arithmetic.
constexpr double kFloatSlack = 1e-10;

// Polynomial with coefficients reduced mod p^depth and nonnegative exponents;
// evaluation determines valuations < depth exactly.
struct ModPoly {
    long long p = 0;
    long long pk = 0;  // p^depth
    int depth = 0;
    struct Term {
        long long c;
        long long i, j;
    };
    std::vector<Term> terms;

    long long eval(long long u, long long v) const {
        long long acc = 0;
        for (const Term& t : terms) {
            long long m = mod_mul(t.c, mod_mul(mod_pow(u, t.i, pk), mod_pow(v, t.j, pk), pk), pk);
            acc += m;
            if (acc >= pk) acc -= pk;
        }
        return acc;
    }
};

long long pow_ll(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > (1LL << 62) / b) throw OracleDomainError("p^depth exceeds the 64-bit budget");
        r *= b;
    }
    return r;
}

long long residue_ord(long long r, long long p) {
    long long o = 0;
    while (r % p == 0) {
        r /= p;
        ++o;
    }
    return o;
}

// Build the mod-p^depth form of sum c_e * p^{shift(e)} u^i v^j after clearing
// negative exponents and dividing out the minimal coefficient valuation.
// Returns the normalized polynomial and that minimal valuation c_min, so that
// the original equals p^{c_min} * (unit-content polynomial).
struct Normalized {
    ModPoly poly;
    long long c_min = 0;
};

Normalized normalize(const LaurentPolynomial& f, long long p, int depth, long long m,
                     long long n) {
    if (f.is_zero()) throw Error("oracle: zero polynomial");
    long long pk = pow_ll(p, depth);

    struct Raw {
        long long i, j, ord;
        BigInt unum, uden;  // unit part as a fraction prime to p
    };
    std::vector<Raw> raws;
    long long c_min = std::numeric_limits<long long>::max();
    long long min_i = 0, min_j = 0;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        long long onum = ord_p(BigInt(c.get_num()), p);
        long long oden = ord_p(BigInt(c.get_den()), p);
        Raw r;
        r.i = e.i;
        r.j = e.j;
        r.ord = m * e.i + n * e.j + onum - oden;
        BigInt pp(static_cast<long>(p));
        BigInt num = c.get_num(), den = c.get_den();
        for (long long k = 0; k < onum; ++k) num /= pp;
        for (long long k = 0; k < oden; ++k) den /= pp;
        r.unum = num;
        r.uden = den;
        raws.push_back(std::move(r));
        c_min = std::min(c_min, raws.back().ord);
        if (first) {
            min_i = e.i;
            min_j = e.j;
            first = false;
        } else {
            min_i = std::min(min_i, e.i);
            min_j = std::min(min_j, e.j);
        }
    }
    long long si = min_i < 0 ? -min_i : 0;
    long long sj = min_j < 0 ? -min_j : 0;

    ModPoly mp;
    mp.p = p;
    mp.pk = pk;
    mp.depth = depth;
    BigInt bpk(static_cast<long>(pk));
    for (const Raw& r : raws) {
        long long extra = r.ord - c_min;  // >= 0
        if (extra >= depth) continue;     // vanishes mod p^depth
        BigInt nr = r.unum % bpk;
        if (nr < 0) nr += bpk;
        BigInt dr = r.uden % bpk;
        long long c = mod_mul(nr.get_si(), mod_inv(dr.get_si(), pk), pk);
        for (long long k = 0; k < extra; ++k) c = mod_mul(c, p, pk);
        if (c == 0) continue;
        mp.terms.push_back({c, r.i + si, r.j + sj});
    }
    return {std::move(mp), c_min};
}

struct UnitAccum {
    double value = 0;
    double half_error = 0;
    double resolved = 0;  // measure determined exactly
};

// Recursive refinement over unit cosets; powq[v] = q^{-v s}.
void refine(const ModPoly& g, const std::vector<double>& powq, PadicCoset coset,
            double measure, UnitAccum& acc) {
    long long e = g.eval(coset.prefix_u, coset.prefix_v);
    if (e != 0) {
        long long v = residue_ord(e, g.p);
        if (v < coset.level) {
            acc.value += measure * powq[v];
            acc.resolved += measure;
            return;
        }
    }
    if (coset.level == g.depth) {
        double half = measure * powq[g.depth] / 2;
        acc.value += half;
        acc.half_error += half;
        return;
    }
    long long step = 1;
    for (int k = 0; k < coset.level; ++k) step *= g.p;
    double child_measure = measure / static_cast<double>(g.p * g.p);
    for (long long tu = 0; tu < g.p; ++tu)
        for (long long tv = 0; tv < g.p; ++tv)
            refine(g,
                   powq,
                   PadicCoset{coset.prefix_u + tu * step, coset.prefix_v + tv * step,
                              coset.level + 1, coset.val_u, coset.val_v},
                   child_measure, acc);
}

UnitAccum integrate_units(const ModPoly& g, double s, int val_u = 0, int val_v = 0) {
    std::vector<double> powq(g.depth + 1);
    for (int v = 0; v <= g.depth; ++v)
        powq[v] = std::exp(-static_cast<double>(v) * s * std::log(static_cast<double>(g.p)));
    UnitAccum acc;
    double measure = 1.0 / static_cast<double>(g.p * g.p);
    for (long long u = 1; u < g.p; ++u)
        for (long long v = 1; v < g.p; ++v)
            refine(g, powq, PadicCoset{u, v, 1, val_u, val_v}, measure, acc);
    return acc;
}

// Minimal support values against the two axis directions.
void support_minima(const LaurentPolynomial& f, long long& min_i, long long& min_j) {
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        if (first) {
            min_i = e.i;
            min_j = e.j;
            first = false;
        } else {
            min_i = std::min(min_i, e.i);
            min_j = std::min(min_j, e.j);
        }
    }
}

long long d_support(const LaurentPolynomial& f, LatticeVector a) {
    bool first = true;
    __int128 best = 0;
    for (const auto& [e, c] : f.terms()) {
        __int128 v = dot(a, e);
        if (first || v < best) best = v;
        first = false;
    }
    return static_cast<long long>(best);
}

long long min_coeff_ord(const LaurentPolynomial& f, long long p) {
    long long best = std::numeric_limits<long long>::max();
    for (const auto& [e, c] : f.terms()) best = std::min(best, ord_p(c, p));
    return best;
}

double tail_bound(const LaurentPolynomial& f, long long p, double s, int M, int m0, int n0) {
    long long d1, d2;
    support_minima(f, d1, d2);
    double lq = std::log(static_cast<double>(p));
    double r1 = std::exp(-(1.0 + d1 * s) * lq);
    double r2 = std::exp(-(1.0 + d2 * s) * lq);
    if (!(r1 < 1 && r2 < 1)) throw OracleDomainError("tail bound diverges: s not below alpha");
    double Cs = std::exp(-static_cast<double>(min_coeff_ord(f, p)) * s * lq);
    auto geo_from = [](double r, int k) { return std::pow(r, k) / (1 - r); };
    // strata with m > M (n >= n0), plus strata with n > M (m >= m0)
    return Cs * (geo_from(r1, M + 1) * geo_from(r2, n0) + geo_from(r1, m0) * geo_from(r2, M + 1));
}

}  // namespace

double oracle_alpha(const LaurentPolynomial& f) {
    if (f.is_zero()) throw Error("oracle_alpha: zero polynomial");
    std::vector<LatticeVector> rays{{1, 0}, {0, 1}};
    // Directions where d(.) has a kink inside the open quadrant: the inward
    // normals for a 2D hull, the quadrant-interior perpendicular for a segment.
    std::vector<LatticePoint> pts = support(f);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() >= 2) {
        try {
            NewtonPolytope P = newton_polytope(f);
            for (LatticeVector nrm : P.normals)
                if (nrm.x > 0 && nrm.y > 0) rays.push_back(nrm);
        } catch (const HullDimensionError&) {
            LatticePoint a = pts.front(), b = pts.back();
            LatticeVector dir = primitive({b.i - a.i, b.j - a.j});
            for (LatticeVector perp : {LatticeVector{-dir.y, dir.x}, LatticeVector{dir.y, -dir.x}})
                if (perp.x > 0 && perp.y > 0) rays.push_back(perp);
        }
    }
    double alpha = HUGE_VAL;
    for (LatticeVector a : rays) {
        long long d = d_support(f, a);
        if (d < 0)
            alpha = std::min(alpha, static_cast<double>(a.x + a.y) / static_cast<double>(-d));
    }
    return alpha;
}

IntegralEstimate unit_torus_integral(const LaurentPolynomial& f, long long p, double s,
                                     int depth) {
    if (!(s > 0)) throw OracleDomainError("unit_torus_integral requires s > 0");
    if (!is_prime(p)) throw BadPrime("p = " + std::to_string(p) + " is not prime");
    if (depth < 1) throw OracleDomainError("depth must be >= 1");
    Normalized nf = normalize(f, p, depth, 0, 0);
    UnitAccum acc = integrate_units(nf.poly, s);
    double scale = std::exp(-static_cast<double>(nf.c_min) * s * std::log(static_cast<double>(p)));
    double domain = std::pow(1.0 - 1.0 / static_cast<double>(p), 2);
    IntegralEstimate est;
    est.value = scale * acc.value;
    est.error_bound = scale * acc.half_error;
    est.resolved_mass = std::min(1.0, acc.resolved / domain);
    est.p = p;
    est.s = s;
    est.depth = depth;
    return est;
}

IntegralEstimate truncated_Z0(const LaurentPolynomial& f, long long p, double s, int M,
                              int depth, std::pair<int, int> min_val, int threads) {
    if (!(s > 0)) throw OracleDomainError("truncated_Z0 requires s > 0");
    if (!is_prime(p)) throw BadPrime("p = " + std::to_string(p) + " is not prime");
    auto [m0, n0] = min_val;
    if (m0 < 0 || n0 < 0) throw OracleDomainError("min_val components must be >= 0");
    if (M < std::max(m0, n0)) throw OracleDomainError("truncation M below min_val");
    double alpha = oracle_alpha(f);
    if (!(s < alpha))
        throw OracleDomainError("s = " + std::to_string(s) + " is not inside (0, alpha)");

    double lq = std::log(static_cast<double>(p));
    struct Stratum {
        double value = 0, half_error = 0, resolved = 0, weight = 0;
    };
    long long rows = M - m0 + 1, cols = M - n0 + 1;
    std::vector<Stratum> strata(static_cast<std::size_t>(rows * cols));

    auto run_stratum = [&](long long idx) {
        long long m = m0 + idx / cols;
        long long n = n0 + idx % cols;
        Normalized nf = normalize(f, p, depth, m, n);
        UnitAccum acc = integrate_units(nf.poly, s, static_cast<int>(m), static_cast<int>(n));
        double w = std::exp(-((m + n) + nf.c_min * s) * lq);
        strata[idx] = {w * acc.value, w * acc.half_error,
                       std::exp(-static_cast<double>(m + n) * lq) * acc.resolved,
                       std::exp(-static_cast<double>(m + n) * lq)};
    };

    long long total = rows * cols;
    unsigned hw = threads > 0 ? static_cast<unsigned>(threads)
                              : std::max(1u, std::thread::hardware_concurrency());
    if (hw > 1 && total > 8) {
        std::vector<std::future<void>> futs;
        std::size_t nchunk = std::min<std::size_t>(hw, 16);
        long long chunk = (total + static_cast<long long>(nchunk) - 1) / nchunk;
        for (std::size_t c = 0; c < nchunk; ++c) {
            long long b = static_cast<long long>(c) * chunk;
            long long e = std::min(total, b + chunk);
            if (b >= e) continue;
            futs.push_back(std::async(std::launch::async, [&, b, e] {
                for (long long i = b; i < e; ++i) run_stratum(i);
            }));
        }
        for (auto& fu : futs) fu.get();
    } else {
        for (long long i = 0; i < total; ++i) run_stratum(i);
    }

    IntegralEstimate est;
    est.p = p;
    est.s = s;
    est.depth = depth;
    est.truncation = M;
    est.min_m = m0;
    est.min_n = n0;
    double dom = 0;
    double domain_unit = std::pow(1.0 - 1.0 / static_cast<double>(p), 2);
    double resolved = 0;
    // Strata combined in lexicographic order, independent of the thread count.
    for (const Stratum& st : strata) {
        est.value += st.value;
        est.error_bound += st.half_error;
        resolved += st.resolved;
        dom += st.weight * domain_unit;
    }
    est.resolved_mass = dom > 0 ? std::min(1.0, resolved / dom) : 1.0;
    est.tail_bound = tail_bound(f, p, s, M, m0, n0);
    est.error_bound += est.tail_bound + kFloatSlack;
    return est;
}

IntegralEstimate stationary_phase_sum(const LaurentPolynomial& f, long long p, double s,
                                      int M, std::pair<int, int> min_val) {
    if (!(s > 0)) throw OracleDomainError("stationary_phase_sum requires s > 0");
    auto [m0, n0] = min_val;
    if (m0 < 0 || n0 < 0) throw OracleDomainError("min_val components must be >= 0");
    double alpha = oracle_alpha(f);
    if (!(s < alpha)) throw OracleDomainError("s is not inside (0, alpha)");

    NewtonPolytope P = newton_polytope(f);
    ConicalPartition part = conical_partition(P);
    NondegeneracyReport rep = check_weak_nondegeneracy(f, part, p);
    if (!rep.overall) throw DegeneracyError(std::move(rep));

    double q = static_cast<double>(p);
    double lq = std::log(q);
    double t = std::exp(-s * lq);
    std::map<FaceKey, double> lvalue;  // face -> stationary-phase unit integral value
    auto unit_value = [&](const Face& face, const LaurentPolynomial& face_fn) {
        FaceKey key(face);
        auto it = lvalue.find(key);
        if (it == lvalue.end()) {
            long long N =
                torus_zero_count(reduce_mod_p(clear_denominators(face_fn).poly, p));
            double v = ((q - 1) * (q - 1) +
                        static_cast<double>(N) * (t - 1) / (1 - t / q)) /
                       (q * q);
            it = lvalue.emplace(key, v).first;
        }
        return it->second;
    };

    IntegralEstimate est;
    est.p = p;
    est.s = s;
    est.truncation = M;
    est.min_m = m0;
    est.min_n = n0;
    for (long long m = m0; m <= M; ++m)
        for (long long n = n0; n <= M; ++n) {
            Face face = first_meet_locus(P, {m, n});
            double L = unit_value(face, face_function(f, face));
            long long d = d_value(P, {m, n});
            est.value += std::exp(-((m + n) + d * s) * lq) * L;
        }
    est.resolved_mass = 1.0;
    est.tail_bound = tail_bound(f, p, s, M, static_cast<int>(m0), static_cast<int>(n0));
    est.error_bound = est.tail_bound + kFloatSlack;
    return est;
}

}  // namespace lzeta

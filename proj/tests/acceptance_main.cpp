// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Each criterion pins its tolerances in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <vector>

#include "lzeta/json_io.hpp"
#include "lzeta/oracle.hpp"
#include "lzeta/zetafun.hpp"
#include "test_support.hpp"

using namespace lzeta;
using testutil::rng;

namespace {

int checks_failed = 0;
std::vector<std::string> notes;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++checks_failed;
        notes.push_back(what);
    }
}

QTLaurent qt(long long c, long long eq, long long et) {
    return QTLaurent::monomial(rational(c), eq, et);
}

// --------------------------------------------------------------------------
// AC1: symbolic reproduction of the reference table for x^-3 + y^-2 + y^4:
// exact cone set, exact S numerators/denominators, exact canonical strings,
// in under one second.
// --------------------------------------------------------------------------
bool ac1() {
    auto t0 = std::chrono::steady_clock::now();
    ZetaFunction Z = assemble(parse("x^-3+y^-2+y^4"), 7);

    std::set<std::set<std::pair<long long, long long>>> cone_sets;
    for (const auto& d : Z.details) {
        std::set<std::pair<long long, long long>> s;
        for (LatticeVector g : d.cone.gens) s.insert({g.x, g.y});
        cone_sets.insert(s);
    }
    std::set<std::set<std::pair<long long, long long>>> expected_cones{
        {{0, 1}}, {{2, 3}}, {{1, 0}}, {{0, 1}, {2, 3}}, {{2, 3}, {1, 0}}};
    expect(cone_sets == expected_cones, "AC1: cone set mismatch");

    struct Expected {
        QTLaurent num;
        std::vector<DenomFactor> den;
        std::string text;
    };
    std::map<std::set<std::pair<long long, long long>>, Expected> want;
    want[{{0, 1}}] = {qt(1, -1, -2),
                      {DenomFactor::cone_ray(1, -2)},
                      "q^{-1+2s}/(1-q^{-1+2s})"};
    want[{{2, 3}}] = {qt(1, -5, -6),
                      {DenomFactor::cone_ray(5, -6)},
                      "q^{-5+6s}/(1-q^{-5+6s})"};
    want[{{1, 0}}] = {qt(1, -1, -3),
                      {DenomFactor::cone_ray(1, -3)},
                      "q^{-1+3s}/(1-q^{-1+3s})"};
    want[{{0, 1}, {2, 3}}] = {
        qt(1, -6, -8) + qt(1, -3, -4),
        {DenomFactor::cone_ray(1, -2), DenomFactor::cone_ray(5, -6)},
        "(1+q^{3-4s})q^{-6+8s}/((1-q^{-1+2s})(1-q^{-5+6s}))"};
    want[{{2, 3}, {1, 0}}] = {
        qt(1, -6, -9) + qt(1, -4, -6) + qt(1, -2, -3),
        {DenomFactor::cone_ray(1, -3), DenomFactor::cone_ray(5, -6)},
        "(1+q^{2-3s}+q^{4-6s})q^{-6+9s}/((1-q^{-1+3s})(1-q^{-5+6s}))"};

    for (const auto& d : Z.details) {
        std::set<std::pair<long long, long long>> key;
        for (LatticeVector g : d.cone.gens) key.insert({g.x, g.y});
        const Expected& e = want.at(key);
        expect(d.S.num == e.num, "AC1: S numerator mismatch for " + d.cone.label);
        expect(d.S.factors == e.den, "AC1: S denominator mismatch for " + d.cone.label);
        expect(d.S.to_string() == e.text,
               "AC1: canonical S string mismatch for " + d.cone.label + ": got " +
                   d.S.to_string());
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    expect(ms < 1000, "AC1: runtime " + std::to_string(ms) + "ms exceeds 1s");
    return checks_failed == 0;
}

// --------------------------------------------------------------------------
// AC2: candidate pole real parts {1/2, 1/3, 5/6, -1}; beta = -1; alpha = 1/3,
// all as exact rationals.
// --------------------------------------------------------------------------
bool ac2() {
    int before = checks_failed;
    auto P = newton_polytope(parse("x^-3+y^-2+y^4"));
    auto part = conical_partition(P);
    std::set<Rational> reals;
    for (const PoleData& pd : candidate_poles(part.rays, P)) reals.insert(pd.real_part);
    std::set<Rational> want{rational(1, 2), rational(1, 3), rational(5, 6), rational(-1)};
    expect(reals == want, "AC2: candidate pole real parts differ");
    Band band = convergence_band(part.rays, P);
    expect(band.beta == rational(-1), "AC2: beta != -1");
    expect(band.alpha && *band.alpha == rational(1, 3), "AC2: alpha != 1/3");
    return checks_failed == before;
}

// --------------------------------------------------------------------------
// AC3: formula-vs-oracle cross-validation at (p,s) = (7,0.2) with M=40, D=4,
// then p = 5 at s in {0.05, 0.15, 0.25}; agreement within the certified
// bound, bound <= 1e-3, total runtime <= 60 s.
// --------------------------------------------------------------------------
bool ac3() {
    int before = checks_failed;
    auto t0 = std::chrono::steady_clock::now();
    auto g = parse("x^-3+y^-2+y^4");
    struct Run {
        long long p;
        double s;
        int M, D;
    };
    for (Run r : std::vector<Run>{{7, 0.2, 40, 4}, {5, 0.05, 40, 5}, {5, 0.15, 40, 5},
                                  {5, 0.25, 40, 5}}) {
        ZetaFunction Z = assemble(g, r.p);
        double formula = evaluate(Z, rational(r.p), r.s);
        IntegralEstimate est = truncated_Z0(g, r.p, r.s, r.M, r.D);
        char buf[160];
        std::snprintf(buf, sizeof buf, "p=%lld s=%.2f: |%.8f - %.8f| = %.2e vs %.2e",
                      r.p, r.s, formula, est.value, std::fabs(formula - est.value),
                      est.error_bound);
        notes.push_back(std::string("      AC3 ") + buf);
        expect(std::fabs(formula - est.value) <= est.error_bound,
               "AC3: outside certified bound at p=" + std::to_string(r.p));
        expect(est.error_bound <= 1e-3,
               "AC3: bound above 1e-3 at p=" + std::to_string(r.p));
    }
    auto sec = std::chrono::duration_cast<std::chrono::seconds>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
    expect(sec <= 60, "AC3: runtime above 60s");
    return checks_failed == before;
}

// --------------------------------------------------------------------------
// AC4: restricted-domain closed form for (y^-1+x)^2 + y^3 at q = 7, s = 0.1,
// min_val = (1,1): oracle brackets (1-q^-1) q^{-2+2s}/(1-q^{-1+2s}).
// --------------------------------------------------------------------------
bool ac4() {
    int before = checks_failed;
    double q = 7, s = 0.1;
    IntegralEstimate est = truncated_Z0(parse("(y^-1+x)^2+y^3"), 7, s, 40, 4, {1, 1});
    double closed = (1 - 1 / q) * std::pow(q, -2 + 2 * s) / (1 - std::pow(q, -1 + 2 * s));
    expect(std::fabs(est.value - closed) <= est.error_bound,
           "AC4: closed form outside the certified bound");
    return checks_failed == before;
}

// --------------------------------------------------------------------------
// AC5: xy + x^2y^2 + x^3y at p = 7: closed form (1-q^-1)^2/(1-q^{-1-s})^2 at
// s in {0.5, 1, 2} within 1e-9 relative when all N-counts vanish; since
// N0 = 6 at p = 7, fall back to oracle agreement at the same s values.
// --------------------------------------------------------------------------
bool ac5() {
    int before = checks_failed;
    auto f = parse("x*y + x^2*y^2 + x^3*y");
    ZetaFunction Z = assemble(f, 7);
    bool all_zero = Z.N0 == 0;
    for (const auto& d : Z.details) all_zero = all_zero && d.N == 0;
    for (double s : {0.5, 1.0, 2.0}) {
        double v = evaluate(Z, rational(7), s);
        if (all_zero) {
            double q = 7;
            double closed = std::pow((1 - 1 / q) / (1 - std::pow(q, -1 - s)), 2);
            expect(std::fabs(v - closed) <= 1e-9 * std::fabs(closed),
                   "AC5: closed-form mismatch");
        } else {
            IntegralEstimate est = truncated_Z0(f, 7, s, 40, 4);
            expect(std::fabs(v - est.value) <= est.error_bound,
                   "AC5: oracle fallback outside bound at s=" + std::to_string(s));
        }
    }
    notes.push_back(std::string("      AC5 used the ") +
                    (all_zero ? "closed-form branch" : "oracle-fallback branch (N0 = " +
                                                           std::to_string(Z.N0) + ")"));
    return checks_failed == before;
}

// --------------------------------------------------------------------------
// AC6: per-cone geometric series identity at (q,s) = (7,0.2): direct lattice
// sum over the open cone, truncated at ||(m,n)|| <= 200, within 1e-6 of the
// closed form.
// --------------------------------------------------------------------------
bool ac6() {
    int before = checks_failed;
    ZetaFunction Z = assemble(parse("x^-3+y^-2+y^4"), 7);
    double q = 7, s = 0.2, t = std::pow(q, -s);
    for (const auto& d : Z.details) {
        double direct = 0;
        for (long long m = 0; m <= 200; ++m)
            for (long long n = 0; m + n <= 200; ++n) {
                if (m == 0 && n == 0) continue;
                if (!cone_contains(d.cone, {m, n})) continue;
                direct += std::pow(q, -static_cast<double>(m + n) -
                                          d_value(Z.polytope, {m, n}) * s);
            }
        expect(std::fabs(direct - d.S.eval(q, t)) <= 1e-6,
               "AC6: lattice sum vs closed form for " + d.cone.label);
    }
    return checks_failed == before;
}

// --------------------------------------------------------------------------
// AC7: property suites, >= 200 random cases each, exact assertions.
// --------------------------------------------------------------------------
bool ac7_partition_coverage() {
    int before = checks_failed;
    for (int k = 0; k < 200; ++k) {
        LaurentPolynomial f = testutil::random_polytope_poly(rng());
        auto part = conical_partition(newton_polytope(f));
        bool ok = true;
        for (long long x = 0; x <= 20 && ok; ++x)
            for (long long y = 0; y <= 20 && ok; ++y) {
                if (x == 0 && y == 0) continue;
                ok = testutil::containing_cones(part, {x, y}) == 1;
            }
        expect(ok, "AC7: partition coverage failed for " + f.to_string());
        if (!ok) break;
    }
    return checks_failed == before;
}

bool ac7_face_constancy() {
    int before = checks_failed;
    std::uniform_int_distribution<int> coeff(1, 9);
    for (int k = 0; k < 200; ++k) {
        LaurentPolynomial f = testutil::random_polytope_poly(rng());
        auto P = newton_polytope(f);
        for (const Cone& c : conical_partition(P).cones)
            for (int t = 0; t < 10; ++t) {
                LatticeVector v{0, 0};
                for (LatticeVector g : c.gens) {
                    long long l = coeff(rng());
                    v = {v.x + l * g.x, v.y + l * g.y};
                }
                if (!(FaceKey(first_meet_locus(P, v)) == FaceKey(c.face))) {
                    expect(false, "AC7: face constancy failed for " + f.to_string());
                    return false;
                }
            }
    }
    return checks_failed == before;
}

bool ac7_fundamental_count() {
    int before = checks_failed;
    int done = 0;
    while (done < 200) {
        LatticeVector a = testutil::random_primitive_quadrant(rng());
        LatticeVector b = testutil::random_primitive_quadrant(rng());
        __int128 det = cross(a, b);
        if (det == 0) continue;
        Cone c{{a, b}, "", {}};
        std::size_t n = fundamental_points(c).size();
        expect(n == static_cast<std::size_t>(det < 0 ? -det : det),
               "AC7: |fundamental points| != |det|");
        ++done;
    }
    return checks_failed == before;
}

bool ac7_make_simple() {
    int before = checks_failed;
    std::uniform_int_distribution<int> coeff(1, 9);
    int done = 0;
    while (done < 200) {
        LatticeVector a = testutil::random_primitive_quadrant(rng());
        LatticeVector b = testutil::random_primitive_quadrant(rng());
        if (cross(a, b) == 0) continue;
        if (cross(a, b) < 0) std::swap(a, b);
        ConicalPartition part;
        part.rays = {a, b};
        part.cones = {Cone{{a, b}, "", Face{0, {LatticePoint{0, 0}}, std::nullopt}}};
        SimpleFan fan = make_simple(part);
        bool ok = true;
        for (const Cone& c : fan.maximal_cones) {
            __int128 d = cross(c.gens[0], c.gens[1]);
            ok = ok && (d == 1 || d == -1);
        }
        for (LatticeVector r : part.rays)
            ok = ok && std::find(fan.rays.begin(), fan.rays.end(), r) != fan.rays.end();
        for (int t = 0; t < 6 && ok; ++t) {
            long long l1 = coeff(rng()), l2 = coeff(rng());
            LatticeVector v{l1 * a.x + l2 * b.x, l1 * a.y + l2 * b.y};
            int hits = 0;
            for (const Cone& c : fan.maximal_cones)
                if (cone_contains(c, v)) ++hits;
            for (LatticeVector r : fan.rays) {
                if (r == a || r == b) continue;
                Cone rc{{r}, "", {}};
                if (cone_contains(rc, v)) ++hits;
            }
            ok = ok && hits == 1;
        }
        expect(ok, "AC7: make_simple property failed");
        ++done;
    }
    return checks_failed == before;
}

bool ac7_clearing_equivalence() {
    int before = checks_failed;
    const long long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    int done = 0;
    while (done < 200) {
        LaurentPolynomial f = testutil::random_laurent(rng(), 5, 4);
        if (f.is_zero()) continue;
        long long p = primes[std::uniform_int_distribution<int>(0, 10)(rng())];
        auto cl = clear_denominators(f);
        if (cl.shift.i > 0 && cl.shift.i % p == 0) continue;
        if (cl.shift.j > 0 && cl.shift.j % p == 0) continue;
        FpLaurent rf, rfx, rfy, rc, rcx, rcy;
        try {
            auto [fx, fy] = gradient(f);
            auto [cx, cy] = gradient(cl.poly);
            rf = reduce_mod_p(f, p);
            rfx = reduce_mod_p(fx, p);
            rfy = reduce_mod_p(fy, p);
            rc = reduce_mod_p(cl.poly, p);
            rcx = reduce_mod_p(cx, p);
            rcy = reduce_mod_p(cy, p);
        } catch (const BadPrime&) {
            continue;
        }
        bool ok = true;
        for (long long x = 1; x < p && ok; ++x)
            for (long long y = 1; y < p && ok; ++y) {
                bool lhs = fp_eval(rf, x, y) == 0 && fp_eval(rfx, x, y) == 0 &&
                           fp_eval(rfy, x, y) == 0;
                bool rhs = fp_eval(rc, x, y) == 0 && fp_eval(rcx, x, y) == 0 &&
                           fp_eval(rcy, x, y) == 0;
                ok = lhs == rhs;
            }
        expect(ok, "AC7: cleared-system equivalence failed for " + f.to_string() +
                       " at p=" + std::to_string(p));
        ++done;
    }
    return checks_failed == before;
}

bool ac7_term_denominators() {
    int before = checks_failed;
    const long long primes[] = {7, 11, 13};
    int done = 0;
    while (done < 200) {
        LaurentPolynomial f = testutil::random_polytope_poly(rng(), 6, 4);
        long long p = primes[std::uniform_int_distribution<int>(0, 2)(rng())];
        ZetaFunction Z;
        try {
            Z = assemble(f, p);
        } catch (const Error&) {
            continue;
        }
        for (const ZetaTerm& t : Z.terms) {
            int cone_ray = 0, unit_factor = 0;
            for (const DenomFactor& df : t.factors)
                (df.kind == DenomFactor::Kind::unit_factor ? unit_factor : cone_ray)++;
            expect(cone_ray <= 2 && unit_factor <= 1,
                   "AC7: term denominator factor count exceeded for " + f.to_string());
        }
        ++done;
    }
    return checks_failed == before;
}

bool ac7() {
    bool ok = true;
    ok &= ac7_partition_coverage();
    ok &= ac7_face_constancy();
    ok &= ac7_fundamental_count();
    ok &= ac7_make_simple();
    ok &= ac7_clearing_equivalence();
    ok &= ac7_term_denominators();
    return ok;
}

// --------------------------------------------------------------------------
// AC8: (y^-1+x)^2 + y^3 at p = 7 is weakly non-degenerate, while the
// all-faces check reports a degenerate edge with a concrete witness on the
// face whose function is (y^-1+x)^2; the witness is re-verified here by
// direct evaluation.
// --------------------------------------------------------------------------
bool ac8() {
    int before = checks_failed;
    auto f = parse("(y^-1+x)^2+y^3");
    auto part = conical_partition(newton_polytope(f));
    NondegeneracyReport weak = check_weak_nondegeneracy(f, part, 7);
    expect(weak.overall, "AC8: weak check should pass");

    NondegeneracyReport khov = check_khovanskii_nondegeneracy(f, 7);
    expect(!khov.overall, "AC8: all-faces check should fail");
    bool witnessed = false;
    for (const auto& e : khov.entries) {
        if (!e.degenerate) continue;
        expect(FaceKey(e.face) ==
                   FaceKey(Face{1, {LatticePoint{0, -2}, LatticePoint{2, 0}}, std::nullopt}),
               "AC8: degenerate face is not the expected edge");
        if (!e.witness) continue;
        // independent verification: the witness kills (1+xy)^2 and both partials
        long long x = e.witness->x, y = e.witness->y, p = 7;
        long long u = (1 + x * y) % p;
        bool valid = mod_mul(u, u, p) == 0 && mod_mul(2 * y % p, u, p) == 0 &&
                     mod_mul(2 * x % p, u, p) == 0;
        expect(valid, "AC8: witness fails direct re-evaluation");
        witnessed = true;
    }
    expect(witnessed, "AC8: no witness reported");
    return checks_failed == before;
}

struct Criterion {
    const char* name;
    const char* description;
    std::function<bool()> run;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {"AC1", "reference table: cones and exact symbolic S-terms (< 1 s)", ac1},
        {"AC2", "candidate poles {1/2,1/3,5/6,-1}; band (-1, 1/3), exact", ac2},
        {"AC3", "formula vs oracle at (7,0.2),(5,0.05),(5,0.15),(5,0.25), bound <= 1e-3",
         ac3},
        {"AC4", "restricted-domain closed form bracketed by the oracle", ac4},
        {"AC5", "monomial-dominant closed form / oracle fallback at s in {0.5,1,2}", ac5},
        {"AC6", "per-cone lattice sum matches S within 1e-6 at ||.|| <= 200", ac6},
        {"AC7", "property suites (coverage, faces, dets, refinement, clearing, "
                "denominators), >= 200 cases each",
         ac7},
        {"AC8", "weak vs all-faces discrimination with a verified witness", ac8},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        int before = checks_failed;
        bool ok = false;
        std::string error;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            error = e.what();
            ok = false;
        }
        if (!ok && checks_failed == before) ++checks_failed;
        std::printf("[%s] %s: %s%s%s\n", ok ? "PASS" : "FAIL", c.name, c.description,
                    error.empty() ? "" : " — exception: ", error.c_str());
        for (const std::string& n : notes)
            if (n.rfind("      ", 0) == 0) std::printf("%s\n", n.c_str());
            else std::printf("      detail: %s\n", n.c_str());
        notes.clear();
        if (!ok) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures;
}

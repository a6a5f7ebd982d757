#include "lzeta/residue.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace lzeta {

namespace {

// Power tables: one row per distinct exponent, indexed by residue - 1.
struct TorusEvaluator {
    long long p;
    struct Term {
        std::size_t xi, yi;
        long long c;
    };
    std::vector<std::vector<long long>> xpow, ypow;
    std::vector<Term> terms;

    explicit TorusEvaluator(const FpLaurent& g) : p(g.p) {
        std::map<long long, std::size_t> xi, yi;
        for (const auto& [e, c] : g.terms) {
            auto [ix, nx] = xi.emplace(e.i, xi.size());
            auto [iy, ny] = yi.emplace(e.j, yi.size());
            terms.push_back({ix->second, iy->second, c});
        }
        auto build = [this](const std::map<long long, std::size_t>& exps,
                            std::vector<std::vector<long long>>& rows) {
            rows.resize(exps.size());
            for (const auto& [e, idx] : exps) {
                long long er = e % (p - 1);  // unit group has order p - 1
                if (er < 0) er += p - 1;
                rows[idx].resize(p - 1);
                for (long long v = 1; v < p; ++v) rows[idx][v - 1] = mod_pow(v, er, p);
            }
        };
        build(xi, xpow);
        build(yi, ypow);
    }

    long long eval(long long x, long long y) const {
        long long acc = 0;
        for (const Term& t : terms)
            acc = (acc + mod_mul(t.c, mod_mul(xpow[t.xi][x - 1], ypow[t.yi][y - 1], p), p)) % p;
        return acc;
    }
};

}  // namespace

long long torus_zero_count(const FpLaurent& g) {
    for (const auto& [e, c] : g.terms)
        if (e.i < 0 || e.j < 0) throw Error("torus_zero_count: expected cleared form");
    long long p = g.p;
    if (g.is_zero()) return (p - 1) * (p - 1);
    TorusEvaluator ev(g);

    auto count_strip = [&](long long x_begin, long long x_end) {
        long long n = 0;
        for (long long x = x_begin; x < x_end; ++x)
            for (long long y = 1; y < p; ++y)
                if (ev.eval(x, y) == 0) ++n;
        return n;
    };

    if (p <= 512) return count_strip(1, p);

    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    std::size_t nthreads = std::min<std::size_t>(hw, 8);
    std::vector<long long> partial(nthreads, 0);
    std::vector<std::thread> pool;
    long long span = (p - 1 + static_cast<long long>(nthreads) - 1) / nthreads;
    for (std::size_t t = 0; t < nthreads; ++t) {
        long long b = 1 + static_cast<long long>(t) * span;
        long long e = std::min(p, b + span);
        if (b >= e) continue;
        pool.emplace_back([&, t, b, e] { partial[t] = count_strip(b, e); });
    }
    for (auto& th : pool) th.join();
    long long total = 0;
    for (long long v : partial) total += v;
    return total;
}

NondegenCheck is_face_nondegenerate(const LaurentPolynomial& f_a, long long p) {
    if (!is_prime(p)) throw BadPrime("p = " + std::to_string(p) + " is not prime");
    ClearedPolynomial cleared = clear_denominators(f_a);
    long long max_shift = std::max(cleared.shift.i, cleared.shift.j);
    if (p <= max_shift)
        throw BadPrime("p = " + std::to_string(p) +
                       " does not exceed the clearing shift " + std::to_string(max_shift));
    auto [gx, gy] = gradient(cleared.poly);
    FpLaurent g0 = reduce_mod_p(cleared.poly, p);
    FpLaurent g1 = reduce_mod_p(gx, p);
    FpLaurent g2 = reduce_mod_p(gy, p);
    for (long long x = 1; x < p; ++x)
        for (long long y = 1; y < p; ++y)
            if (fp_eval(g0, x, y) == 0 && fp_eval(g1, x, y) == 0 && fp_eval(g2, x, y) == 0)
                return {false, Witness{x, y}};
    return {true, std::nullopt};
}

namespace {

struct FaceCheckCache {
    long long p;
    std::map<FaceKey, std::pair<NondegenCheck, LaurentPolynomial>> done;

    FaceCheckEntry check(const std::string& label, const Face& face,
                         const LaurentPolynomial& face_fn) {
        FaceKey key(face);
        auto it = done.find(key);
        if (it == done.end()) {
            LaurentPolynomial cleared = clear_denominators(face_fn).poly;
            NondegenCheck r = is_face_nondegenerate(face_fn, p);
            it = done.emplace(key, std::make_pair(r, cleared)).first;
        }
        const auto& [r, cleared] = it->second;
        return FaceCheckEntry{label, face, cleared, !r.nondegenerate, r.witness};
    }
};

}  // namespace

NondegeneracyReport check_weak_nondegeneracy(const LaurentPolynomial& f,
                                             const ConicalPartition& part, long long p) {
    NondegeneracyReport rep;
    rep.p = p;
    FaceCheckCache cache{p, {}};
    NewtonPolytope P = newton_polytope(f);
    rep.entries.push_back(cache.check("a=0", full_face(P), f));
    for (const Cone& c : part.cones)
        rep.entries.push_back(cache.check(c.label, c.face, face_function(f, c.face)));
    rep.overall = std::none_of(rep.entries.begin(), rep.entries.end(),
                               [](const FaceCheckEntry& e) { return e.degenerate; });
    return rep;
}

NondegeneracyReport check_khovanskii_nondegeneracy(const LaurentPolynomial& f, long long p) {
    NondegeneracyReport rep;
    rep.p = p;
    FaceCheckCache cache{p, {}};
    NewtonPolytope P = newton_polytope(f);
    rep.entries.push_back(cache.check("a=0", full_face(P), f));
    for (const LatticePoint& v : P.vertices) {
        Face face{0, {v}, std::nullopt};
        rep.entries.push_back(cache.check(face.name(), face, face_function(f, face)));
    }
    for (const Face& e : P.edges)
        rep.entries.push_back(cache.check(e.name(), e, face_function(f, e)));
    rep.overall = std::none_of(rep.entries.begin(), rep.entries.end(),
                               [](const FaceCheckEntry& e) { return e.degenerate; });
    return rep;
}

long long count_N_delta(const LaurentPolynomial& f, const Cone& c, long long p) {
    LaurentPolynomial face_fn = face_function(f, c.face);
    return torus_zero_count(reduce_mod_p(clear_denominators(face_fn).poly, p));
}

}  // namespace lzeta

#include "lzeta/zetafun.hpp"

#include <algorithm>
#include <cmath>

namespace lzeta {

QTLaurent QTLaurent::monomial(const Rational& c, long long eq, long long et) {
    QTLaurent f;
    f.add_term({eq, et}, c);
    return f;
}

void QTLaurent::add_term(QTExp e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QTLaurent QTLaurent::operator-() const {
    QTLaurent r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

QTLaurent QTLaurent::operator+(const QTLaurent& o) const {
    QTLaurent r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

QTLaurent QTLaurent::operator-(const QTLaurent& o) const {
    QTLaurent r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

QTLaurent QTLaurent::operator*(const QTLaurent& o) const {
    QTLaurent r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            r.add_term({ea.eq + eb.eq, ea.et + eb.et}, ca * cb);
    return r;
}

bool QTLaurent::operator==(const QTLaurent& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [e, c] : terms_) {
        if (!(e == it->first) || c != it->second) return false;
        ++it;
    }
    return true;
}

double QTLaurent::eval(double q, double t) const {
    double acc = 0;
    for (const auto& [e, c] : terms_)
        acc += to_double(c) * std::pow(q, static_cast<double>(e.eq)) *
               std::pow(t, static_cast<double>(e.et));
    return acc;
}

std::string exponent_string(QTExp e) {
    // q^eq t^et = q^{eq - et*s}
    long long sc = -e.et;
    std::string out;
    if (e.eq != 0 || sc == 0) out += std::to_string(e.eq);
    if (sc != 0) {
        if (sc > 0 && !out.empty()) out += "+";
        if (sc == -1)
            out += "-";
        else if (sc != 1)
            out += std::to_string(sc);
        out += "s";
    }
    return out;
}

namespace {

std::string monomial_string(const Rational& c, QTExp e, bool raw) {
    std::string mono;
    if (raw) {
        if (e.eq != 0) mono += "q^" + std::to_string(e.eq);
        if (e.et != 0) {
            if (!mono.empty()) mono += "*";
            mono += "t^" + std::to_string(e.et);
        }
    } else if (e.eq != 0 || e.et != 0) {
        mono = "q^{" + exponent_string(e) + "}";
    }
    if (mono.empty()) return to_string(c);
    if (c == 1) return mono;
    if (c == -1) return "-" + mono;
    return to_string(c) + "*" + mono;
}

}  // namespace

std::string QTLaurent::to_string(bool raw) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string m = monomial_string(first ? c : (c < 0 ? Rational(-c) : c), e, raw);
        if (first) {
            out += m;
        } else {
            out += (c < 0 ? " - " : " + ") + m;
        }
        first = false;
    }
    return out;
}

DenomFactor DenomFactor::cone_ray(long long norm, long long d) {
    if (norm < 1) throw Error("DenomFactor: ||a|| must be >= 1");
    if (d == 0) throw Error("DenomFactor: d = 0 carries no pole; fold into q_factors");
    return {Kind::cone_ray, norm, d};
}

QTLaurent DenomFactor::expand() const {
    return QTLaurent::one() - QTLaurent::monomial(1, -norm, d);
}

std::string DenomFactor::to_string(bool raw) const {
    return "1-" + monomial_string(1, {-norm, d}, raw);
}

QTLaurent ZetaTerm::denominator_expanded() const {
    QTLaurent den = QTLaurent::one();
    for (const DenomFactor& f : factors) den = den * f.expand();
    for (const auto& [k, mult] : q_factors) {
        QTLaurent f = QTLaurent::one() - QTLaurent::monomial(1, -k, 0);
        for (int i = 0; i < mult; ++i) den = den * f;
    }
    return den;
}

double ZetaTerm::eval(double q, double t) const {
    double den = 1;
    for (const DenomFactor& f : factors) {
        double v = 1 - std::pow(q, -static_cast<double>(f.norm)) *
                           std::pow(t, static_cast<double>(f.d));
        if (std::fabs(v) < 1e-12)
            throw PoleHit("denominator factor " + f.to_string() + " vanishes");
        den *= v;
    }
    for (const auto& [k, mult] : q_factors)
        den *= std::pow(1 - std::pow(q, -static_cast<double>(k)), mult);
    return num.eval(q, t) / den;
}

std::string ZetaTerm::to_string(bool raw) const {
    std::string n;
    if (s_render) {
        std::string hs;
        bool first = true;
        for (QTExp h : s_render->h_terms) {
            if (!first) hs += "+";
            hs += monomial_string(1, h, raw);
            first = false;
        }
        std::string pre = monomial_string(1, s_render->prefactor, raw);
        n = (s_render->h_terms.size() > 1) ? "(" + hs + ")" + pre : pre;
    } else {
        n = num.to_string(raw);
        if (!factors.empty() || !q_factors.empty()) n = "(" + n + ")";
    }
    if (factors.empty() && q_factors.empty()) return n;
    std::string d;
    std::size_t nfac = factors.size();
    for (const auto& [k, mult] : q_factors) nfac += mult;
    for (const DenomFactor& f : factors) d += "(" + f.to_string(raw) + ")";
    for (const auto& [k, mult] : q_factors)
        for (int i = 0; i < mult; ++i)
            d += "(1-" + monomial_string(1, {-k, 0}, raw) + ")";
    return n + "/" + (nfac > 1 ? "(" + d + ")" : d);
}

ZetaTerm unit_integral_term(long long N, const std::string& label) {
    // q^{-2}(q-1)^2 = (1 - q^{-1})^2
    QTLaurent a = QTLaurent::constant(1) - QTLaurent::monomial(2, -1, 0) +
                  QTLaurent::monomial(1, -2, 0);
    ZetaTerm t;
    t.label = label;
    t.n_count = N;
    if (N == 0) {
        t.num = a;
        return t;
    }
    DenomFactor l5 = DenomFactor::unit_factor();
    t.num = a * l5.expand() +
            QTLaurent::monomial(rational(N), -2, 1) - QTLaurent::monomial(rational(N), -2, 0);
    t.factors = {l5};
    return t;
}

ZetaTerm S_term(const Cone& c, const NewtonPolytope& P) {
    ZetaTerm t;
    t.label = c.label;
    QTExp pre{0, 0};
    std::vector<DenomFactor> factors;
    std::map<long long, int> q_factors;
    for (LatticeVector a : c.gens) {
        long long norm = a.x + a.y;
        long long d = d_value(P, a);
        pre.eq -= norm;
        pre.et += d;
        if (d != 0)
            factors.push_back(DenomFactor::cone_ray(norm, d));
        else
            ++q_factors[norm];
    }
    SNumerator sn;
    sn.prefactor = pre;
    QTLaurent num;
    for (LatticePoint h : fundamental_points(c)) {
        long long norm_h = h.i + h.j;
        long long d_h = d_value(P, {h.i, h.j});
        sn.h_terms.push_back({norm_h, -d_h});
        num = num + QTLaurent::monomial(1, norm_h + pre.eq, -d_h + pre.et);
    }
    std::sort(sn.h_terms.begin(), sn.h_terms.end());
    std::sort(factors.begin(), factors.end());
    t.num = num;
    t.factors = std::move(factors);
    t.q_factors = std::move(q_factors);
    t.s_render = std::move(sn);
    return t;
}

ZetaFunction assemble(const LaurentPolynomial& f, long long p) {
    if (f.is_zero()) throw Error("assemble: zero polynomial");
    ZetaFunction Z;
    Z.p = p;
    Z.poly_text = f.to_string();
    Z.polytope = newton_polytope(f);
    Z.partition = conical_partition(Z.polytope);

    NondegeneracyReport rep = check_weak_nondegeneracy(f, Z.partition, p);
    if (!rep.overall) throw DegeneracyError(std::move(rep));

    Z.N0 = torus_zero_count(reduce_mod_p(clear_denominators(f).poly, p));
    Z.L0 = unit_integral_term(Z.N0, "L0");
    Z.terms.push_back(Z.L0);

    std::map<FaceKey, long long> n_cache;
    for (const Cone& c : Z.partition.cones) {
        FaceKey key(c.face);
        auto it = n_cache.find(key);
        if (it == n_cache.end()) it = n_cache.emplace(key, count_N_delta(f, c, p)).first;
        long long N = it->second;
        ZetaTerm L = unit_integral_term(N, "L(" + c.label + ")");
        ZetaTerm S = S_term(c, Z.polytope);

        ZetaTerm prod;
        prod.label = c.label;
        prod.num = L.num * S.num;
        prod.factors = S.factors;
        prod.factors.insert(prod.factors.end(), L.factors.begin(), L.factors.end());
        std::sort(prod.factors.begin(), prod.factors.end());
        prod.q_factors = S.q_factors;
        prod.n_count = N;
        Z.terms.push_back(prod);
        Z.details.push_back({c, N, std::move(L), std::move(S)});
    }
    return Z;
}

std::vector<PoleData> candidate_poles(const std::vector<LatticeVector>& gens,
                                      const NewtonPolytope& P) {
    std::vector<PoleData> out;
    auto push_unique = [&out](PoleData pd) {
        if (std::find(out.begin(), out.end(), pd) == out.end()) out.push_back(std::move(pd));
    };
    for (LatticeVector a : gens) {
        long long d = d_value(P, a);
        if (d == 0) continue;
        Rational real = rational(-(a.x + a.y), d);
        push_unique({real, d, to_string(a)});
    }
    push_unique({rational(-1), 1, "constant -1"});
    std::sort(out.begin(), out.end(), [](const PoleData& a, const PoleData& b) {
        if (a.real_part != b.real_part) return a.real_part < b.real_part;
        return a.d < b.d;
    });
    return out;
}

Band convergence_band(const std::vector<LatticeVector>& gens, const NewtonPolytope& P) {
    Band band{rational(-1), std::nullopt};
    for (LatticeVector a : gens) {
        long long d = d_value(P, a);
        if (d == 0) continue;
        Rational v = rational(a.x + a.y, -d);
        if (d < 0) {
            if (!band.alpha || v < *band.alpha) band.alpha = v;
        } else {
            if (v > band.beta) band.beta = v;
        }
    }
    return band;
}

double evaluate(const ZetaFunction& Z, const Rational& q0, double s0) {
    double q = to_double(q0);
    double t = std::pow(q, -s0);
    double acc = 0;
    for (const ZetaTerm& term : Z.terms) acc += term.eval(q, t);
    return acc;
}

CombinedForm combine(const ZetaFunction& Z) {
    auto factor_counts = [](const ZetaTerm& t) {
        std::map<DenomFactor, int> m;
        for (const DenomFactor& f : t.factors) ++m[f];
        return m;
    };
    std::map<DenomFactor, int> lcm_factors;
    std::map<long long, int> lcm_q;
    for (const ZetaTerm& t : Z.terms) {
        for (const auto& [f, n] : factor_counts(t))
            lcm_factors[f] = std::max(lcm_factors[f], n);
        for (const auto& [k, n] : t.q_factors) lcm_q[k] = std::max(lcm_q[k], n);
    }
    CombinedForm out;
    for (const auto& [f, n] : lcm_factors)
        for (int i = 0; i < n; ++i) out.factors.push_back(f);
    out.q_factors = lcm_q;

    for (const ZetaTerm& t : Z.terms) {
        QTLaurent scaled = t.num;
        auto have = factor_counts(t);
        for (const auto& [f, n] : lcm_factors) {
            int missing = n - (have.count(f) ? have[f] : 0);
            for (int i = 0; i < missing; ++i) scaled = scaled * f.expand();
        }
        for (const auto& [k, n] : lcm_q) {
            int missing = n - (t.q_factors.count(k) ? t.q_factors.at(k) : 0);
            QTLaurent f = QTLaurent::one() - QTLaurent::monomial(1, -k, 0);
            for (int i = 0; i < missing; ++i) scaled = scaled * f;
        }
        out.num = out.num + scaled;
    }
    return out;
}

bool zeta_equal(const ZetaFunction& A, const ZetaFunction& B) {
    CombinedForm ca = combine(A), cb = combine(B);
    auto expand_all = [](const CombinedForm& c) {
        QTLaurent den = QTLaurent::one();
        for (const DenomFactor& f : c.factors) den = den * f.expand();
        for (const auto& [k, n] : c.q_factors) {
            QTLaurent f = QTLaurent::one() - QTLaurent::monomial(1, -k, 0);
            for (int i = 0; i < n; ++i) den = den * f;
        }
        return den;
    };
    return ca.num * expand_all(cb) == cb.num * expand_all(ca);
}

}  // namespace lzeta

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lzeta/fans.hpp"
#include "lzeta/residue.hpp"

namespace lzeta {

/// Exponent pair of a monomial q^eq * t^et, where t stands for q^{-s}.
struct QTExp {
    long long eq = 0;
    long long et = 0;
    friend bool operator==(const QTExp&, const QTExp&) = default;
    friend auto operator<=>(const QTExp&, const QTExp&) = default;
};

/// Exact Laurent polynomial in the two symbols q and t with rational
/// coefficients. The s-notation printer renders q^eq t^et as q^{eq - et s}.
class QTLaurent {
public:
    using TermMap = std::map<QTExp, Rational>;

    QTLaurent() = default;
    static QTLaurent monomial(const Rational& c, long long eq, long long et);
    static QTLaurent constant(const Rational& c) { return monomial(c, 0, 0); }
    static QTLaurent one() { return constant(1); }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    QTLaurent operator-() const;
    QTLaurent operator+(const QTLaurent& o) const;
    QTLaurent operator-(const QTLaurent& o) const;
    QTLaurent operator*(const QTLaurent& o) const;
    bool operator==(const QTLaurent& o) const;

    double eval(double q, double t) const;

    /// s-notation ("1+q^{3-4s}") or raw q/t monomials ("1+q^3*t^4").
    std::string to_string(bool raw = false) const;

private:
    void add_term(QTExp e, const Rational& c);
    TermMap terms_;
};

/// Exponent rendered in s-notation, e.g. (eq, et) = (-1, -2) -> "-1+2s".
std::string exponent_string(QTExp e);

/// One factored denominator element.
struct DenomFactor {
    enum class Kind { cone_ray, unit_factor };
    Kind kind = Kind::cone_ray;
    long long norm = 1;  // ||a|| >= 1
    long long d = 0;     // d != 0 for cone_ray; the unit factor is (1 - q^{-1} t)

    static DenomFactor unit_factor() { return {Kind::unit_factor, 1, 1}; }
    static DenomFactor cone_ray(long long norm, long long d);

    QTLaurent expand() const;  // 1 - q^{-norm} t^{d}
    std::string to_string(bool raw = false) const;

    // Algebraic identity; kind only records where the factor came from.
    friend bool operator==(const DenomFactor& a, const DenomFactor& b) {
        return a.norm == b.norm && a.d == b.d;
    }
    friend bool operator<(const DenomFactor& a, const DenomFactor& b) {
        return a.norm != b.norm ? a.norm < b.norm : a.d < b.d;
    }
};

/// Structured form of an S-numerator, kept for factored printing:
/// (sum over h of q^{||h||+d(h)s}) * prefactor.
struct SNumerator {
    std::vector<QTExp> h_terms;  // ascending; (0,0) first
    QTExp prefactor;
};

/// One summand of the zeta function: numerator over a small multiset of
/// denominator factors. Generators with d(a) = 0 contribute constant factors
/// (1 - q^{-||a||}); those are kept in q_factors (exponent -> multiplicity)
/// rather than as DenomFactors, since they carry no pole in s.
struct ZetaTerm {
    std::string label;
    QTLaurent num;
    std::vector<DenomFactor> factors;      // sorted
    std::map<long long, int> q_factors;    // k -> multiplicity of (1 - q^{-k})
    std::optional<SNumerator> s_render;    // present on S-terms
    std::optional<long long> n_count;      // present on L-terms

    QTLaurent denominator_expanded() const;
    double eval(double q, double t) const;  // throws PoleHit near a zero factor
    std::string to_string(bool raw = false) const;
};

/// L_Delta(q^{-s}) = q^{-2}((q-1)^2 + N (q^{-s}-1)/(1-q^{-s-1})); reduces to
/// (1-q^{-1})^2 with an empty denominator when N = 0.
ZetaTerm unit_integral_term(long long N, const std::string& label = "L");

/// S_Delta(q^{-s}) per the explicit formula: numerator
/// (sum_h q^{||h||+d(h)s}) q^{-sum_j(||a_j||+d(a_j)s)} over
/// prod_j (1 - q^{-||a_j||-d(a_j)s}), with h running over the lattice points
/// of the half-open fundamental parallelepiped.
ZetaTerm S_term(const Cone& c, const NewtonPolytope& P);

struct ZetaFunction {
    std::vector<ZetaTerm> terms;  // L0 first, then one product term per cone

    // Pipeline metadata.
    long long p = 0;
    std::string poly_text;
    NewtonPolytope polytope;
    ConicalPartition partition;
    long long N0 = 0;
    ZetaTerm L0;
    struct ConeDetail {
        Cone cone;
        long long N = 0;
        ZetaTerm L, S;
    };
    std::vector<ConeDetail> details;
};

/// Assemble Z0 = L0 + sum over cones of L_Delta S_Delta from the conical
/// partition. Verifies weak non-degeneracy first and throws DegeneracyError
/// with the report otherwise; HullDimensionError/BadPrime propagate.
ZetaFunction assemble(const LaurentPolynomial& f, long long p);

/// Candidate pole datum: the family real_part + 2 pi i Z / (d ln q).
struct PoleData {
    Rational real_part;
    long long d = 1;
    std::string source;  // generator "(a1,a2)" or "constant -1"
    friend bool operator==(const PoleData& a, const PoleData& b) {
        return a.real_part == b.real_part && a.d == b.d;
    }
};

/// One entry per generator with d(a) != 0 (real part -||a||/d(a)) plus the
/// constant family at -1; deduplicated on (real_part, d), sorted by real part.
std::vector<PoleData> candidate_poles(const std::vector<LatticeVector>& gens,
                                      const NewtonPolytope& P);

/// Convergence band (beta, alpha); alpha absent means +infinity.
struct Band {
    Rational beta;
    std::optional<Rational> alpha;
};

Band convergence_band(const std::vector<LatticeVector>& gens, const NewtonPolytope& P);

/// Numeric evaluation at q = q0, t = q0^{-s0}. Throws PoleHit when a
/// denominator factor vanishes within 1e-12.
double evaluate(const ZetaFunction& Z, const Rational& q0, double s0);

/// Single-fraction form over the least common multiset of factors.
struct CombinedForm {
    QTLaurent num;
    std::vector<DenomFactor> factors;
    std::map<long long, int> q_factors;
};

CombinedForm combine(const ZetaFunction& Z);

/// Exact equality as rational functions (cross-multiplication of combined
/// forms).
bool zeta_equal(const ZetaFunction& A, const ZetaFunction& B);

}  // namespace lzeta

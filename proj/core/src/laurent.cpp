#include "lzeta/laurent.hpp"

#include <cctype>
#include <cstdlib>

namespace lzeta {

namespace {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("exponent overflow (signed 64-bit)");
    return r;
}

}  // namespace

LaurentPolynomial LaurentPolynomial::monomial(const Rational& c, LatticePoint e) {
    LaurentPolynomial f;
    f.add_term(e, c);
    return f;
}

LaurentPolynomial LaurentPolynomial::constant(const Rational& c) {
    return monomial(c, {0, 0});
}

Rational LaurentPolynomial::coeff(LatticePoint e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add_term(LatticePoint e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    LaurentPolynomial r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            r.add_term({checked_add(ea.i, eb.i), checked_add(ea.j, eb.j)}, ca * cb);
    return r;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned long long k) const {
    LaurentPolynomial acc = constant(1);
    LaurentPolynomial base = *this;
    while (k > 0) {
        if (k & 1ULL) acc = acc * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return acc;
}

LaurentPolynomial LaurentPolynomial::shifted(long long di, long long dj) const {
    LaurentPolynomial r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(LatticePoint{checked_add(e.i, di), checked_add(e.j, dj)}, c);
    return r;
}

bool LaurentPolynomial::operator==(const LaurentPolynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [e, c] : terms_) {
        if (!(e == it->first) || c != it->second) return false;
        ++it;
    }
    return true;
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        std::string mono;
        if (e.i != 0) {
            mono += "x";
            if (e.i != 1) mono += "^" + std::to_string(e.i);
        }
        if (e.j != 0) {
            if (!mono.empty()) mono += "*";
            mono += "y";
            if (e.j != 1) mono += "^" + std::to_string(e.j);
        }
        if (mono.empty()) {
            out += lzeta::to_string(mag);
        } else {
            if (mag != 1) out += lzeta::to_string(mag) + "*";
            out += mono;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    LaurentPolynomial run() {
        LaurentPolynomial e = expression();
        if (!eof()) fail("unexpected trailing input");
        return e;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eof() {
        skip();
        return pos_ >= s_.size();
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

    static bool is_factor_start(char c) { return c == 'x' || c == 'y' || c == '('; }

    LaurentPolynomial expression() {
        bool neg = false;
        char c = peek();
        if (c == '+' || c == '-') {
            neg = (c == '-');
            ++pos_;
        }
        LaurentPolynomial acc = term();
        if (neg) acc = -acc;
        while (true) {
            char op = peek();
            if (op != '+' && op != '-') break;
            ++pos_;
            LaurentPolynomial t = term();
            acc = (op == '+') ? acc + t : acc - t;
        }
        return acc;
    }

    LaurentPolynomial term() {
        LaurentPolynomial acc = LaurentPolynomial::constant(1);
        bool any = false;
        bool pending_star = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            acc = LaurentPolynomial::constant(rational_literal());
            any = true;
            if (peek() == '*') {
                ++pos_;
                pending_star = true;
            }
        }
        while (is_factor_start(peek())) {
            acc = acc * factor();
            any = true;
            pending_star = false;
            if (peek() == '*') {
                ++pos_;
                pending_star = true;
            }
        }
        if (pending_star) fail("expected factor after '*'");
        if (!any) fail("expected term");
        return acc;
    }

    LaurentPolynomial factor() {
        char c = peek();
        if (c == 'x' || c == 'y') {
            ++pos_;
            long long e = 1;
            if (peek() == '^') {
                ++pos_;
                e = integer_literal(true);
            }
            LatticePoint pt = (c == 'x') ? LatticePoint{e, 0} : LatticePoint{0, e};
            return LaurentPolynomial::monomial(1, pt);
        }
        if (c == '(') {
            ++pos_;
            LaurentPolynomial inner = expression();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            if (peek() == '^') {
                ++pos_;
                long long k = integer_literal(false);
                try {
                    return inner.pow(static_cast<unsigned long long>(k));
                } catch (const OverflowError& e) {
                    throw ParseError(e.what(), pos_);
                }
            }
            return inner;
        }
        fail("expected factor");
    }

    Rational rational_literal() {
        long long num = integer_literal(false);
        skip();
        if (peek() == '/') {
            ++pos_;
            std::size_t at = pos_;
            long long den = integer_literal(false);
            if (den == 0) throw ParseError("zero denominator", at);
            return rational(num, den);
        }
        return rational(num);
    }

    long long integer_literal(bool allow_sign) {
        skip();
        std::size_t start = pos_;
        bool neg = false;
        if (allow_sign && (peek() == '-' || peek() == '+')) {
            neg = (s_[pos_] == '-');
            ++pos_;
            skip();
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected integer");
        unsigned long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            unsigned long long d = static_cast<unsigned long long>(s_[pos_] - '0');
            if (v > (0x7fffffffffffffffULL - d) / 10)
                throw ParseError("integer out of signed 64-bit range", start);
            v = v * 10 + d;
            ++pos_;
        }
        long long r = static_cast<long long>(v);
        return neg ? -r : r;
    }
};

}  // namespace

LaurentPolynomial parse(std::string_view text) {
    try {
        return Parser(text).run();
    } catch (const OverflowError& e) {
        throw ParseError(e.what(), text.size());
    }
}

std::vector<LatticePoint> support(const LaurentPolynomial& f) {
    std::vector<LatticePoint> out;
    out.reserve(f.term_count());
    for (const auto& [e, c] : f.terms()) out.push_back(e);
    return out;
}

ClearedPolynomial clear_denominators(const LaurentPolynomial& f) {
    if (f.is_zero()) throw Error("clear_denominators: zero polynomial");
    long long min_i = 0, min_j = 0;
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
    long long n = min_i < 0 ? -min_i : 0;
    long long m = min_j < 0 ? -min_j : 0;
    return {f.shifted(n, m), LatticePoint{n, m}};
}

std::pair<LaurentPolynomial, LaurentPolynomial> gradient(const LaurentPolynomial& f) {
    LaurentPolynomial fx, fy;
    for (const auto& [e, c] : f.terms()) {
        if (e.i != 0) fx = fx + LaurentPolynomial::monomial(c * rational(e.i), {e.i - 1, e.j});
        if (e.j != 0) fy = fy + LaurentPolynomial::monomial(c * rational(e.j), {e.i, e.j - 1});
    }
    return {fx, fy};
}

bool is_prime(long long p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (long long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

FpLaurent reduce_mod_p(const LaurentPolynomial& f, long long p) {
    if (!is_prime(p)) throw BadPrime("p = " + std::to_string(p) + " is not prime");
    FpLaurent out{p, {}};
    BigInt bp(static_cast<long>(p));
    for (const auto& [e, c] : f.terms()) {
        BigInt den = c.get_den();
        if (mpz_divisible_p(den.get_mpz_t(), bp.get_mpz_t()))
            throw BadPrime("p = " + std::to_string(p) + " divides a coefficient denominator");
        BigInt num_r = c.get_num() % bp;
        if (num_r < 0) num_r += bp;
        long long a = num_r.get_si();
        if (a == 0) continue;
        BigInt den_r = den % bp;
        long long b = den_r.get_si();
        long long r = mod_mul(a, mod_inv(b, p), p);
        if (r != 0) out.terms.emplace(e, r);
    }
    return out;
}

long long mod_mul(long long a, long long b, long long m) {
    return static_cast<long long>((static_cast<__int128>(a) * b) % m);
}

long long mod_pow(long long base, long long exp, long long m) {
    base %= m;
    if (base < 0) base += m;
    long long acc = 1 % m;
    while (exp > 0) {
        if (exp & 1) acc = mod_mul(acc, base, m);
        base = mod_mul(base, base, m);
        exp >>= 1;
    }
    return acc;
}

long long mod_inv(long long a, long long m) {
    long long r0 = m, r1 = a % m;
    if (r1 < 0) r1 += m;
    long long t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        long long t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) throw Error("mod_inv: not invertible");
    return t0 < 0 ? t0 + m : t0;
}

long long fp_eval(const FpLaurent& f, long long x, long long y) {
    long long p = f.p;
    long long acc = 0;
    for (const auto& [e, c] : f.terms) {
        long long ei = e.i % (p - 1);
        if (ei < 0) ei += p - 1;
        long long ej = e.j % (p - 1);
        if (ej < 0) ej += p - 1;
        long long t = mod_mul(c, mod_mul(mod_pow(x, ei, p), mod_pow(y, ej, p), p), p);
        acc = (acc + t) % p;
    }
    return acc;
}

std::pair<FpLaurent, FpLaurent> fp_gradient(const FpLaurent& f) {
    FpLaurent fx{f.p, {}}, fy{f.p, {}};
    for (const auto& [e, c] : f.terms) {
        long long mi = e.i % f.p;
        if (mi < 0) mi += f.p;
        long long mj = e.j % f.p;
        if (mj < 0) mj += f.p;
        if (mi != 0) fx.terms.emplace(LatticePoint{e.i - 1, e.j}, mod_mul(c, mi, f.p));
        if (mj != 0) fy.terms.emplace(LatticePoint{e.i, e.j - 1}, mod_mul(c, mj, f.p));
    }
    return {fx, fy};
}

}  // namespace lzeta

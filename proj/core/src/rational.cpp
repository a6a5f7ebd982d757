#include "lzeta/rational.hpp"

#include "lzeta/errors.hpp"

namespace lzeta {

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw Error("invalid rational literal: " + s);
    r.canonicalize();
    return r;
}

long long ord_p(const BigInt& n, long long p) {
    if (n == 0) throw Error("ord_p of zero");
    BigInt rem = n, q, r;
    long long ord = 0;
    BigInt bp(static_cast<long>(p));
    while (true) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.get_mpz_t(), bp.get_mpz_t());
        if (r != 0) break;
        rem = q;
        ++ord;
    }
    return ord;
}

long long ord_p(const Rational& r, long long p) {
    return ord_p(BigInt(r.get_num()), p) - ord_p(BigInt(r.get_den()), p);
}

}  // namespace lzeta

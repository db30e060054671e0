#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace steenrod {

// Arbitrary-precision integer used for every matrix entry.
using Integer = mpz_class;

inline int sign(const Integer& x) { return sgn(x); }

inline int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

inline Integer parse_integer(std::string_view text) {
    Integer out;
    if (text.empty() || out.set_str(std::string(text), 10) != 0) {
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    return out;
}

inline std::string to_string(const Integer& x) { return x.get_str(); }

// Truncated quotient (rounds toward zero).
inline Integer tdiv(const Integer& a, const Integer& b) {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Floor quotient.
inline Integer fdiv(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool divides(const Integer& d, const Integer& x) {
    if (d == 0) return x == 0;
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

// a -= q * b
inline void submul(Integer& a, const Integer& q, const Integer& b) {
    mpz_submul(a.get_mpz_t(), q.get_mpz_t(), b.get_mpz_t());
}

// a += q * b
inline void addmul(Integer& a, const Integer& q, const Integer& b) {
    mpz_addmul(a.get_mpz_t(), q.get_mpz_t(), b.get_mpz_t());
}

}  // namespace steenrod
